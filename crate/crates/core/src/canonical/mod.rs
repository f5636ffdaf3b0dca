//! Jordan canonical forms and sigma-consimilarity canonical forms, each
//! with a transforming matrix that verifies by substitution.

mod consim;
mod gaussint;
mod intmat;
mod jordan;
mod poly;
mod roots;

pub use consim::{
    are_consimilar, canonical_consimilarity, consimilarity_certificate, consimilarity_verdicts,
};
pub use jordan::{jordan_certificate, jordan_spec_complex, jordan_spec_quaternion};
pub use poly::{char_poly, Poly};
pub use roots::gaussian_rational_roots;

use std::cmp::Ordering;
use std::fmt;

use crate::matrix::{complex_adjoint, Mat};
use crate::scalar::{CRat, QRat, Sigma};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JordanBlock {
    pub eigenvalue: CRat,
    pub size: usize,
}

impl JordanBlock {
    pub fn new(eigenvalue: CRat, size: usize) -> JordanBlock {
        assert!(size >= 1, "Jordan blocks have size at least one");
        JordanBlock { eigenvalue, size }
    }

    /// Descending by real part, then imaginary part, then size.
    fn canonical_cmp(&self, other: &JordanBlock) -> Ordering {
        other
            .eigenvalue
            .cmp_lex(&self.eigenvalue)
            .then_with(|| other.size.cmp(&self.size))
    }
}

/// A multiset of Jordan blocks, kept in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct JordanSpec {
    blocks: Vec<JordanBlock>,
}

impl JordanSpec {
    pub fn new(mut blocks: Vec<JordanBlock>) -> JordanSpec {
        blocks.sort_by(JordanBlock::canonical_cmp);
        JordanSpec { blocks }
    }

    pub fn blocks(&self) -> &[JordanBlock] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.size).sum()
    }

    /// Distinct eigenvalues, in block order.
    pub fn eigenvalues(&self) -> Vec<CRat> {
        let mut out: Vec<CRat> = Vec::new();
        for b in &self.blocks {
            if !out.contains(&b.eigenvalue) {
                out.push(b.eigenvalue.clone());
            }
        }
        out
    }

    /// The block-diagonal Jordan matrix, ones above the diagonal.
    pub fn matrix(&self) -> Mat<CRat> {
        let blocks: Vec<Mat<CRat>> = self
            .blocks
            .iter()
            .map(|b| Mat::jordan_block(&b.eigenvalue, b.size))
            .collect();
        Mat::block_diag(&blocks)
    }

    pub fn quaternion_matrix(&self) -> Mat<QRat> {
        Mat::from_complex(&self.matrix())
    }

    /// Row/column offset of each block in [`JordanSpec::matrix`].
    pub fn offsets(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .scan(0, |acc, b| {
                let start = *acc;
                *acc += b.size;
                Some(start)
            })
            .collect()
    }
}

impl fmt::Display for JordanSpec {
    /// One `eigenvalue size` line per block.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.blocks {
            writeln!(f, "{} {}", b.eigenvalue, b.size)?;
        }
        Ok(())
    }
}

/// Canonical form of `A` under `A -> T^{-sigma} A T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalResult {
    pub sigma: Sigma,
    pub spec: JordanSpec,
    /// Nonsingular `T` with `T^{-sigma} A T` equal to `spec.matrix()`.
    pub certificate: Mat<QRat>,
}

impl CanonicalResult {
    /// Checks the defining identity by exact substitution.
    pub fn verify(&self, a: &Mat<QRat>) -> bool {
        verify_consimilarity(a, &self.certificate, &self.spec.quaternion_matrix(), self.sigma)
    }
}

/// Whether `t^{-sigma} a t == target`, checked as `a t == t^sigma target`
/// with `t` nonsingular.
pub fn verify_consimilarity(a: &Mat<QRat>, t: &Mat<QRat>, target: &Mat<QRat>, sigma: Sigma) -> bool {
    if !t.is_square() || a.shape() != t.shape() || target.shape() != t.shape() {
        return false;
    }
    let lhs = a.mul(t).expect("square");
    let rhs = t.hat(sigma).mul(target).expect("square");
    lhs == rhs && is_nonsingular(t)
}

/// Nonsingularity through the fraction-free rank of the complex adjoint.
pub(crate) fn is_nonsingular(t: &Mat<QRat>) -> bool {
    let chi = complex_adjoint(t);
    let l = intmat::common_denominator(chi.entries());
    intmat::GaussMat::scaled(&chi, &l).rank() == chi.rows()
}

/// Multiplies every entry by `i` on the left.
pub(crate) fn left_i(m: &Mat<QRat>) -> Mat<QRat> {
    m.scale_left(&QRat::i())
}

/// Multiplies every entry by `i` on the right.
pub(crate) fn right_i(m: &Mat<QRat>) -> Mat<QRat> {
    m.scale_right(&QRat::i())
}
