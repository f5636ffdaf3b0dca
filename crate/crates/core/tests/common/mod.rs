#![allow(dead_code)]

use quatcon::gen;
use quatcon::{CRat, JordanSpec, Mat, QRat, Rat};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(s: &str) -> QRat {
    s.parse().unwrap()
}

pub fn c(re: i64, im: i64) -> CRat {
    CRat::from_ints(re, im)
}

pub fn pool() -> Vec<CRat> {
    vec![
        c(0, 0),
        c(1, 0),
        c(-1, 0),
        c(0, 1),
        c(0, -1),
        c(2, 0),
        CRat::real(Rat::new(1, 2)),
        c(1, 1),
        c(-1, 1),
    ]
}

pub fn spec(rng: &mut ChaCha8Rng, max_dim: usize) -> JordanSpec {
    let dim = rng.gen_range(1..=max_dim);
    gen::jordan_spec_from_pool(rng, dim, &pool())
}

/// `P J P^-1` for a random nonsingular complex `P`.
pub fn complex_from_spec(rng: &mut ChaCha8Rng, spec: &JordanSpec) -> Mat<CRat> {
    let n = spec.dim();
    loop {
        let p = gen::complex_matrix(rng, n, n, 1);
        if let Ok(pi) = p.inverse() {
            return p.mul(&spec.matrix()).unwrap().mul(&pi).unwrap();
        }
    }
}

pub fn flatten(m: &Mat<QRat>) -> Vec<Rat> {
    m.entries().iter().flat_map(|h| h.components().map(Clone::clone)).collect()
}
