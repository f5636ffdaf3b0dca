//! Complex Sylvester `A X - X B = C` and Stein `X - A X B = C` equations,
//! solved exactly through the column-stacked linear system
//! `vec(A X B) = (B^T kron A) vec(X)`.

use super::{check_shapes, SolutionSet};
use crate::matrix::{solve_linear, LinearSolution, Mat};
use crate::scalar::CRat;
use crate::Result;

fn vectorized_solve(op: &Mat<CRat>, c: &Mat<CRat>) -> SolutionSet<CRat> {
    let (m, n) = c.shape();
    let rhs: Vec<CRat> = (0..n).flat_map(|col| c.column(col)).collect();
    let unstack = |v: &[CRat]| Mat::from_fn(m, n, |r, col| v[col * m + r].clone());
    match solve_linear(op, &rhs) {
        LinearSolution::Inconsistent => SolutionSet::Inconsistent,
        LinearSolution::Solved {
            particular,
            nullspace,
        } => SolutionSet::from_parts(
            unstack(&particular),
            nullspace.iter().map(|v| unstack(v)).collect(),
        ),
    }
}

/// Solves `a X - X b = c`; the basis of an affine result is a complex
/// basis.
pub fn solve_complex_sylvester(a: &Mat<CRat>, b: &Mat<CRat>, c: &Mat<CRat>) -> Result<SolutionSet<CRat>> {
    check_shapes(a, b, c)?;
    let (m, n) = c.shape();
    let op = Mat::<CRat>::identity(n)
        .kron(a)
        .sub(&b.transpose().kron(&Mat::identity(m)))?;
    Ok(vectorized_solve(&op, c))
}

/// Solves `X - a X b = c`; the basis of an affine result is a complex
/// basis.
pub fn solve_complex_stein(a: &Mat<CRat>, b: &Mat<CRat>, c: &Mat<CRat>) -> Result<SolutionSet<CRat>> {
    check_shapes(a, b, c)?;
    let (m, n) = c.shape();
    let op = Mat::<CRat>::identity(m * n).sub(&b.transpose().kron(a))?;
    Ok(vectorized_solve(&op, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Rat, Scalar};

    fn c(re: i64, im: i64) -> CRat {
        CRat::from_ints(re, im)
    }

    fn one(x: CRat) -> Mat<CRat> {
        Mat::from_vec(1, 1, vec![x])
    }

    #[test]
    fn scalar_sylvester() {
        let s = solve_complex_sylvester(&one(c(0, 0)), &one(c(2, 0)), &one(c(5, 0))).unwrap();
        assert_eq!(s, SolutionSet::Unique(one(CRat::real(Rat::new(-5, 2)))));
        let s = solve_complex_sylvester(&one(c(0, 0)), &one(c(0, 0)), &one(c(1, 0))).unwrap();
        assert_eq!(s, SolutionSet::Inconsistent);
    }

    #[test]
    fn example_homogeneous_sylvester() {
        let a = Mat::diag(&[c(0, 0), c(0, 1)]);
        let b = Mat::jordan_block(&c(0, 1), 2);
        let s = solve_complex_sylvester(&a, &b, &Mat::zeros(2, 2)).unwrap();
        let SolutionSet::Affine { particular, basis } = s else {
            panic!("expected a family")
        };
        assert!(particular.is_zero());
        assert_eq!(basis.len(), 1);
        let e = &basis[0];
        for r in 0..2 {
            for col in 0..2 {
                assert_eq!(e[(r, col)].is_zero(), (r, col) != (1, 1));
            }
        }
    }

    #[test]
    fn stein_cases() {
        let cc = Mat::from_rows(vec![vec![c(1, 2), c(3, 0)]]);
        let s = solve_complex_stein(&Mat::zeros(1, 1), &Mat::identity(2), &cc).unwrap();
        assert_eq!(s, SolutionSet::Unique(cc));
        let s = solve_complex_stein(&one(c(1, 0)), &one(c(1, 0)), &one(c(0, 0))).unwrap();
        assert_eq!(s.dim(), Some(1));
        let s = solve_complex_stein(&one(c(2, 0)), &one(CRat::real(Rat::new(1, 2))), &one(c(1, 0))).unwrap();
        assert_eq!(s, SolutionSet::Inconsistent);
    }

    #[test]
    fn rectangular_sylvester_solution_verifies() {
        let a = Mat::from_rows(vec![vec![c(1, 0), c(2, 1)], vec![c(0, 0), c(3, 0)]]);
        let b = Mat::from_rows(vec![vec![c(0, 1), c(1, 0), c(0, 0)], vec![c(0, 0), c(-1, 0), c(0, 0)], vec![c(2, 0), c(0, 0), c(5, 0)]]);
        let cc = Mat::from_fn(2, 3, |r, col| c(r as i64 + 1, col as i64 - 1));
        let s = solve_complex_sylvester(&a, &b, &cc).unwrap();
        let x = s.particular().unwrap();
        assert_eq!(a.mul(x).unwrap().sub(&x.mul(&b).unwrap()).unwrap(), cc);
    }
}
