//! Canonical forms under sigma-consimilarity `A -> S^{-sigma} A S`.
//!
//! For `sigma = i`, `S^{-i} A S = -i S^{-1} (iA) S`, so a Jordan basis of
//! `iA` gives `S^{-i} A S = -i J`. Rescaling each block by
//! `diag(1, i, i^2, ...)` (complex, hence fixed by the automorphism) turns
//! `-i J_k(lambda)` into `J_k(-i lambda)`. Eigenvalues of `iA` are taken
//! with nonnegative imaginary part, so the results have nonnegative real
//! part.

use super::jordan::{assemble, quaternion_jordan_blocks};
use super::{jordan_spec_quaternion, left_i, right_i, verify_consimilarity, CanonicalResult, JordanBlock};
use crate::matrix::Mat;
use crate::scalar::{CRat, QRat, Scalar, Sigma};
use crate::{Error, Result};

/// Canonical form of `a` under sigma-consimilarity with its certificate.
pub fn canonical_consimilarity(a: &Mat<QRat>, sigma: Sigma) -> Result<CanonicalResult> {
    if !a.is_square() {
        return Err(Error::NotSquare(a.rows(), a.cols()));
    }
    let n = a.rows();
    let blocks = match sigma {
        Sigma::One => quaternion_jordan_blocks(a)?,
        Sigma::I => {
            let minus_i = CRat::from_ints(0, -1);
            let step = QRat::i();
            quaternion_jordan_blocks(&left_i(a))?
                .into_iter()
                .map(|(block, cols)| {
                    let mut scale = QRat::one();
                    let cols = cols
                        .into_iter()
                        .map(|col| {
                            let scaled = col.iter().map(|x| x * &scale).collect();
                            scale = &scale * &step;
                            scaled
                        })
                        .collect();
                    (JordanBlock::new(&minus_i * &block.eigenvalue, block.size), cols)
                })
                .collect()
        }
    };
    let (spec, certificate) = assemble(blocks, n);
    let result = CanonicalResult {
        sigma,
        spec,
        certificate,
    };
    if !result.verify(a) {
        return Err(Error::CertificateFailed("T^-sigma A T is not the canonical matrix"));
    }
    Ok(result)
}

fn check_pair(a: &Mat<QRat>, b: &Mat<QRat>) -> Result<()> {
    if !a.is_square() {
        return Err(Error::NotSquare(a.rows(), a.cols()));
    }
    if a.shape() != b.shape() {
        return Err(Error::ShapeMismatch {
            op: "consimilarity",
            left: a.shape(),
            right: b.shape(),
        });
    }
    Ok(())
}

/// `S` with `S^{-sigma} a S = b`, if `a` and `b` are sigma-consimilar.
///
/// Built from the two canonical certificates: with `T_a^{-sigma} a T_a = J =
/// T_b^{-sigma} b T_b`, the matrix `T_a T_b^{-1}` works.
pub fn consimilarity_certificate(a: &Mat<QRat>, b: &Mat<QRat>, sigma: Sigma) -> Result<Option<Mat<QRat>>> {
    check_pair(a, b)?;
    let ca = canonical_consimilarity(a, sigma)?;
    let cb = canonical_consimilarity(b, sigma)?;
    if ca.spec != cb.spec {
        return Ok(None);
    }
    let s = ca.certificate.mul(&cb.certificate.inverse()?)?;
    if !verify_consimilarity(a, &s, b, sigma) {
        return Err(Error::CertificateFailed("S^-sigma A S != B"));
    }
    Ok(Some(s))
}

/// Four independent verdicts on whether `a` and `b` are i-consimilar:
/// (i) equal canonical forms, (ii) `ia ~ ib`, (iii) `ia ~ bi`,
/// (iv) `ai ~ bi`, where `~` is quaternion similarity.
pub fn consimilarity_verdicts(a: &Mat<QRat>, b: &Mat<QRat>) -> Result<[bool; 4]> {
    check_pair(a, b)?;
    let canon = canonical_consimilarity(a, Sigma::I)?.spec == canonical_consimilarity(b, Sigma::I)?.spec;
    let ia = jordan_spec_quaternion(&left_i(a))?;
    let ib = jordan_spec_quaternion(&left_i(b))?;
    let ai = jordan_spec_quaternion(&right_i(a))?;
    let bi = jordan_spec_quaternion(&right_i(b))?;
    Ok([canon, ia == ib, ia == bi, ai == bi])
}

/// Whether `a` and `b` are sigma-consimilar (similar, for `Sigma::One`).
///
/// For `Sigma::I` the answer is cross-checked against the similarity
/// criteria of [`consimilarity_verdicts`]; a disagreement is reported as an error.
pub fn are_consimilar(a: &Mat<QRat>, b: &Mat<QRat>, sigma: Sigma) -> Result<bool> {
    check_pair(a, b)?;
    let answer = consimilarity_certificate(a, b, sigma)?.is_some();
    if sigma == Sigma::I {
        let verdicts = consimilarity_verdicts(a, b)?;
        if verdicts.iter().any(|&v| v != answer) {
            return Err(Error::CertificateFailed("consimilarity criteria disagree"));
        }
    }
    Ok(answer)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::JordanSpec;

    fn q(s: &str) -> QRat {
        s.parse().unwrap()
    }

    fn qm(rows: &[&[&str]]) -> Mat<QRat> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|s| q(s)).collect()).collect())
    }

    fn spec(blocks: &[((i64, i64), usize)]) -> JordanSpec {
        JordanSpec::new(
            blocks
                .iter()
                .map(|&((a, b), k)| JordanBlock::new(CRat::from_ints(a, b), k))
                .collect(),
        )
    }

    #[test]
    fn already_canonical_under_similarity() {
        let a = Mat::from_complex(&Mat::jordan_block(&CRat::from_ints(1, 2), 2));
        let r = canonical_consimilarity(&a, Sigma::One).unwrap();
        assert_eq!(r.spec, spec(&[((1, 2), 2)]));
        assert_eq!(r.certificate, Mat::identity(2));
    }

    #[test]
    fn i_consimilarity_examples() {
        let a = qm(&[&["i", "1"], &["0", "i"]]);
        let r = canonical_consimilarity(&a, Sigma::I).unwrap();
        assert_eq!(r.spec, spec(&[((0, 1), 2)]));
        assert!(r.verify(&a));

        let r = canonical_consimilarity(&qm(&[&["j"]]), Sigma::I).unwrap();
        assert_eq!(r.spec, spec(&[((1, 0), 1)]));
        // oracle: hat(s)^{-1} j s = 1 by direct substitution
        let s = &r.certificate;
        let lhs = s.inverse().unwrap().hat(Sigma::I).mul(&qm(&[&["j"]])).unwrap().mul(s).unwrap();
        assert_eq!(lhs, qm(&[&["1"]]));
    }

    #[test]
    fn consimilarity_decisions() {
        let one = qm(&[&["1"]]);
        let minus_one = qm(&[&["-1"]]);
        assert!(are_consimilar(&qm(&[&["j"]]), &one, Sigma::I).unwrap());
        assert!(!are_consimilar(&one, &minus_one, Sigma::One).unwrap());
        assert!(are_consimilar(&one, &minus_one, Sigma::I).unwrap());
        // hat(j)^{-1} (-1) j = 1
        let j = qm(&[&["j"]]);
        let lhs = j.inverse().unwrap().hat(Sigma::I).mul(&minus_one).unwrap().mul(&j).unwrap();
        assert_eq!(lhs, one);
        assert!(matches!(
            are_consimilar(&one, &Mat::identity(2), Sigma::I),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn pure_imaginary_signs_are_distinct_classes() {
        let plus = qm(&[&["i"]]);
        let minus = qm(&[&["-i"]]);
        assert!(!are_consimilar(&plus, &minus, Sigma::I).unwrap());
        // but 1+i and -1+i share a class {mu, -conj mu}
        assert!(are_consimilar(&qm(&[&["1+i"]]), &qm(&[&["-1+i"]]), Sigma::I).unwrap());
    }

    #[test]
    fn normalization_constraints() {
        let a = qm(&[&["1-2i", "j", "0"], &["0", "-3", "k"], &["1", "0", "2i"]]);
        for sigma in [Sigma::One, Sigma::I] {
            match canonical_consimilarity(&a, sigma) {
                Ok(r) => {
                    for b in r.spec.blocks() {
                        match sigma {
                            Sigma::One => assert!(!b.eigenvalue.im.is_negative()),
                            Sigma::I => assert!(!b.eigenvalue.re.is_negative()),
                        }
                    }
                    assert!(r.verify(&a));
                }
                Err(Error::EigenvaluesNotGaussianRational { .. }) => {}
                Err(e) => panic!("{e}"),
            }
        }
    }
}
