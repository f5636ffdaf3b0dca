//! Solver for arbitrary quaternion coefficients through the real
//! `4mn`-dimensional expansion of the unknown.

use super::{apply_operator, check_shapes, EquationKind, SolutionSet};
use crate::matrix::{realify_solve, Mat, RealSolution};
use crate::scalar::{QRat, Sigma};
use crate::Result;

pub fn solve_general(
    a: &Mat<QRat>,
    b: &Mat<QRat>,
    c: &Mat<QRat>,
    sigma: Sigma,
    kind: EquationKind,
) -> Result<SolutionSet> {
    check_shapes(a, b, c)?;
    let action = |x: &Mat<QRat>| apply_operator(a, b, x, sigma, kind).expect("conformable shapes");
    Ok(match realify_solve(c.shape(), action, c) {
        RealSolution::Inconsistent => SolutionSet::Inconsistent,
        RealSolution::Consistent { particular, basis } => SolutionSet::from_parts(particular, basis),
    })
}
