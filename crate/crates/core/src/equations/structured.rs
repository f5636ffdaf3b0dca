//! Solver for complex coefficient matrices.
//!
//! With `A`, `B` complex and `X = X1 + X2 j`, `X^sigma = X1 + s X2 j` where
//! `s = sigma^2`, and `j B = conj(B) j`. The equation splits into one
//! complex equation for `X1` with `B` and one for `X2` with `s conj(B)`.

use super::{check_shapes, solve_complex_stein, solve_complex_sylvester, EquationKind, SolutionSet};
use crate::matrix::{join_complex, split_complex, ComplexSplit, Mat};
use crate::scalar::{CRat, QRat, Rat, Sigma};
use crate::Result;

pub(crate) fn solve_complex(kind: EquationKind, a: &Mat<CRat>, b: &Mat<CRat>, c: &Mat<CRat>) -> Result<SolutionSet<CRat>> {
    match kind {
        EquationKind::SylvesterLike => solve_complex_sylvester(a, b, c),
        EquationKind::SteinLike => solve_complex_stein(a, b, c),
    }
}

/// `conj(b)` times `sigma^2`.
pub(crate) fn twin_coefficient(b: &Mat<CRat>, sigma: Sigma) -> Mat<CRat> {
    let s = CRat::real(Rat::from_int(sigma.square()));
    b.conj().scale_left(&s)
}

/// Real basis elements `E`, `E i` (first part) or `E j`, `(E i) j` (second).
pub(crate) fn realize(e: &Mat<CRat>, second: bool) -> [Mat<QRat>; 2] {
    let ei = e.scale_right(&CRat::i());
    let zero = Mat::zeros(e.rows(), e.cols());
    let lift = |m: &Mat<CRat>| {
        if second {
            join_complex(&ComplexSplit {
                first: zero.clone(),
                second: m.clone(),
            })
        } else {
            Mat::from_complex(m)
        }
    };
    [lift(e), lift(&ei)]
}

/// Solves the equation for complex `a`, `b` and quaternion `c`.
///
/// The homogeneous basis lists the realized first-part basis followed by the
/// realized second-part basis.
pub fn solve_structured(
    a: &Mat<CRat>,
    b: &Mat<CRat>,
    c: &Mat<QRat>,
    sigma: Sigma,
    kind: EquationKind,
) -> Result<SolutionSet> {
    check_shapes(a, b, c)?;
    let ComplexSplit { first, second } = split_complex(c);
    let s1 = solve_complex(kind, a, b, &first)?;
    let s2 = solve_complex(kind, a, &twin_coefficient(b, sigma), &second)?;
    let (Some(p1), Some(p2)) = (s1.particular(), s2.particular()) else {
        return Ok(SolutionSet::Inconsistent);
    };
    let particular = join_complex(&ComplexSplit {
        first: p1.clone(),
        second: p2.clone(),
    });
    let basis = s1
        .basis()
        .iter()
        .flat_map(|e| realize(e, false))
        .chain(s2.basis().iter().flat_map(|e| realize(e, true)))
        .collect();
    Ok(SolutionSet::from_parts(particular, basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equations::verify_solution;
    use crate::scalar::Scalar;

    fn q(s: &str) -> QRat {
        s.parse().unwrap()
    }

    fn qm(rows: &[&[&str]]) -> Mat<QRat> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|s| q(s)).collect()).collect())
    }

    fn example() -> (Mat<QRat>, Mat<QRat>, Mat<QRat>) {
        (
            qm(&[&["0", "0"], &["0", "i"]]),
            qm(&[&["i", "1"], &["0", "i"]]),
            qm(&[&["-k", "j"], &["0", "0"]]),
        )
    }

    fn supported_at_corner(m: &Mat<QRat>) -> bool {
        (0..2).all(|r| (0..2).all(|c| (r, c) == (1, 1) || m[(r, c)].is_zero()))
    }

    #[test]
    fn example_sigma_one() {
        let (a, b, c) = example();
        let s = solve_structured(&a.to_complex().unwrap(), &b.to_complex().unwrap(), &c, Sigma::One, EquationKind::SylvesterLike).unwrap();
        assert_eq!(s.dim(), Some(2));
        assert_eq!(s.particular().unwrap(), &qm(&[&["-j", "0"], &["0", "0"]]));
        for y in s.basis() {
            assert!(supported_at_corner(y));
            assert!(y[(1, 1)].is_complex());
        }
    }

    #[test]
    fn example_sigma_i() {
        let (a, b, c) = example();
        let s = solve_structured(&a.to_complex().unwrap(), &b.to_complex().unwrap(), &c, Sigma::I, EquationKind::SylvesterLike).unwrap();
        assert_eq!(s.dim(), Some(4));
        let x = s.particular().unwrap();
        assert!(verify_solution(&a, &b, &c, x, Sigma::I, EquationKind::SylvesterLike).unwrap());
        assert!(s.basis().iter().all(supported_at_corner));
        // The particular differs from [[j,0],[0,j]] by a homogeneous member.
        let d = x.sub(&qm(&[&["j", "0"], &["0", "j"]])).unwrap();
        assert!(supported_at_corner(&d));
    }

    #[test]
    fn zero_rhs_with_disjoint_spectra() {
        let a = Mat::diag(&[CRat::from_ints(1, 0), CRat::from_ints(2, 1)]);
        let b = Mat::diag(&[CRat::from_ints(3, 0)]);
        for sigma in [Sigma::One, Sigma::I] {
            for kind in [EquationKind::SylvesterLike, EquationKind::SteinLike] {
                let s = solve_structured(&a, &b, &Mat::zeros(2, 1), sigma, kind).unwrap();
                assert_eq!(s, SolutionSet::Unique(Mat::zeros(2, 1)));
            }
        }
    }
}
