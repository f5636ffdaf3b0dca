//! Solving through canonical forms of `A` and `B`.
//!
//! With `S^{-sigma} A S = J_A` and `R^{-sigma} B R = J_B`:
//! the Sylvester-like equation becomes `J_A X' - X'^sigma J_B = S^{-sigma} C R`
//! with `X = S X' R^{-1}`, and the Stein-like one becomes
//! `Y - J_A Y^sigma J_B = S^{-sigma} C R` with `X = S^sigma Y R^{-1}`.

use super::{check_shapes, solve_structured, EquationKind, SolutionSet};
use crate::canonical::{canonical_consimilarity, CanonicalResult};
use crate::matrix::Mat;
use crate::scalar::{QRat, Sigma};
use crate::Result;

/// Canonical data used by [`solve_via_canonical`], kept for reporting.
#[derive(Clone, Debug)]
pub struct CanonicalSolve {
    pub canon_a: CanonicalResult,
    pub canon_b: CanonicalResult,
    /// `S^{-sigma} C R`.
    pub transformed_rhs: Mat<QRat>,
    /// Solutions of the canonical equation.
    pub canonical_solutions: SolutionSet,
    pub solutions: SolutionSet,
}

pub fn solve_via_canonical_detailed(
    a: &Mat<QRat>,
    b: &Mat<QRat>,
    c: &Mat<QRat>,
    sigma: Sigma,
    kind: EquationKind,
) -> Result<CanonicalSolve> {
    check_shapes(a, b, c)?;
    let canon_a = canonical_consimilarity(a, sigma)?;
    let canon_b = canonical_consimilarity(b, sigma)?;
    let s = &canon_a.certificate;
    let r = &canon_b.certificate;
    let transformed_rhs = s.inverse_hat(sigma)?.mul(c)?.mul(r)?;
    let canonical_solutions = solve_structured(
        &canon_a.spec.matrix(),
        &canon_b.spec.matrix(),
        &transformed_rhs,
        sigma,
        kind,
    )?;
    let left = match kind {
        EquationKind::SylvesterLike => s.clone(),
        EquationKind::SteinLike => s.hat(sigma),
    };
    let right = r.inverse()?;
    let solutions = canonical_solutions.map_solutions(|y| {
        left.mul(y)
            .and_then(|m| m.mul(&right))
            .expect("conformable shapes")
    });
    Ok(CanonicalSolve {
        canon_a,
        canon_b,
        transformed_rhs,
        canonical_solutions,
        solutions,
    })
}

pub fn solve_via_canonical(
    a: &Mat<QRat>,
    b: &Mat<QRat>,
    c: &Mat<QRat>,
    sigma: Sigma,
    kind: EquationKind,
) -> Result<SolutionSet> {
    Ok(solve_via_canonical_detailed(a, b, c, sigma, kind)?.solutions)
}
