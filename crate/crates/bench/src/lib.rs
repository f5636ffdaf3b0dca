//! Seeded fixtures shared by the benchmarks.

use quatcon::gen;
use quatcon::{CRat, JordanSpec, Mat, QRat, Rat, Sigma};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn eigenvalue_pool() -> Vec<CRat> {
    let c = CRat::from_ints;
    vec![c(0, 0), c(1, 0), c(-1, 0), c(0, 1), c(2, 0), CRat::real(Rat::new(1, 2)), c(1, 1), c(-1, 1)]
}

pub fn spec(seed: u64, dim: usize) -> JordanSpec {
    gen::jordan_spec_from_pool(&mut rng(seed), dim, &eigenvalue_pool())
}

/// A quaternion matrix σ-consimilar to a random Jordan matrix of size `n`.
pub fn consimilar(seed: u64, n: usize, sigma: Sigma) -> Mat<QRat> {
    let s = spec(seed, n);
    gen::consimilar_to(&mut rng(seed ^ 0x5eed), &s, sigma, 1)
}

/// Complex coefficients `P J P^-1` and a quaternion right-hand side.
pub fn complex_instance(seed: u64, n: usize) -> (Mat<CRat>, Mat<CRat>, Mat<QRat>) {
    let mut r = rng(seed);
    let mut similar = |s: &JordanSpec| loop {
        let p = gen::complex_matrix(&mut r, n, n, 1);
        if let Ok(pi) = p.inverse() {
            break p.mul(&s.matrix()).unwrap().mul(&pi).unwrap();
        }
    };
    let a = similar(&spec(seed, n));
    let b = similar(&spec(seed + 1, n));
    let c = gen::quaternion_matrix(&mut rng(seed + 2), n, n, 3);
    (a, b, c)
}
