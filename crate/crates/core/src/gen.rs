//! Random test data: small Gaussian-integer Jordan data, quaternion
//! matrices and right-hand sides.

use rand::Rng;

use crate::canonical::{JordanBlock, JordanSpec};
use crate::matrix::Mat;
use crate::scalar::{CRat, QRat, Sigma};

pub fn gaussian<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> CRat {
    CRat::from_ints(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
}

pub fn quaternion<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> QRat {
    let mut c = || rng.gen_range(-bound..=bound);
    QRat::from_ints(c(), c(), c(), c())
}

pub fn quaternion_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> Mat<QRat> {
    Mat::from_fn(rows, cols, |_, _| quaternion(rng, bound))
}

pub fn complex_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> Mat<CRat> {
    Mat::from_fn(rows, cols, |_, _| gaussian(rng, bound))
}

/// A nonsingular `n x n` quaternion matrix with entries bounded by `bound`.
pub fn nonsingular<R: Rng + ?Sized>(rng: &mut R, n: usize, bound: i64) -> Mat<QRat> {
    loop {
        let m = quaternion_matrix(rng, n, n, bound);
        if m.inverse().is_ok() {
            return m;
        }
    }
}

/// Jordan data of total size `dim` whose eigenvalues are drawn from
/// `pool`; a small pool makes repeated eigenvalues and collisions common.
pub fn jordan_spec_from_pool<R: Rng + ?Sized>(rng: &mut R, dim: usize, pool: &[CRat]) -> JordanSpec {
    let mut blocks = Vec::new();
    let mut left = dim;
    while left > 0 {
        let size = rng.gen_range(1..=left);
        let eig = pool[rng.gen_range(0..pool.len())].clone();
        blocks.push(JordanBlock::new(eig, size));
        left -= size;
    }
    JordanSpec::new(blocks)
}

/// Gaussian integers with both parts in `-bound..=bound`.
pub fn gaussian_pool(bound: i64) -> Vec<CRat> {
    (-bound..=bound)
        .flat_map(|re| (-bound..=bound).map(move |im| CRat::from_ints(re, im)))
        .collect()
}

/// Jordan data of size `1..=max_dim` with eigenvalues in a small box.
pub fn jordan_spec<R: Rng + ?Sized>(rng: &mut R, max_dim: usize, bound: i64) -> JordanSpec {
    let dim = rng.gen_range(1..=max_dim);
    jordan_spec_from_pool(rng, dim, &gaussian_pool(bound))
}

/// `S^{-sigma} J S` for the Jordan matrix of `spec` and a random
/// nonsingular `S`.
pub fn consimilar_to<R: Rng + ?Sized>(rng: &mut R, spec: &JordanSpec, sigma: Sigma, bound: i64) -> Mat<QRat> {
    let s = nonsingular(rng, spec.dim(), bound);
    s.inverse_hat(sigma)
        .and_then(|si| si.mul(&spec.quaternion_matrix()))
        .and_then(|m| m.mul(&s))
        .expect("nonsingular")
}
