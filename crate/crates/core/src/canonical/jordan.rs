//! Jordan forms of complex matrices and of quaternion matrices under
//! similarity.
//!
//! A quaternion matrix `M` acts on columns `x = x1 + x2 j`; the map
//! `x -> [x1; -conj x2]` turns that action into the complex adjoint
//! `chi(M)`, and turns `x -> -x j` into an antilinear map `J` that commutes
//! with `chi(M)` and squares to `-1`. Jordan chains of `chi(M)` for
//! eigenvalues with positive imaginary part pull back to quaternion chains
//! directly; for real eigenvalues the chains are chosen so that together
//! with their `J` images they still form a Jordan basis, and only one chain
//! of each pair is kept.

use super::intmat::GaussMat;
use super::{verify_consimilarity, char_poly, gaussian_rational_roots, JordanBlock, JordanSpec};
use crate::matrix::adjoint::{from_adjoint_vector, quaternionic_twin};
use crate::matrix::{complex_adjoint, EchelonSet, Mat};
use crate::scalar::{CRat, QRat, Sigma};
use crate::{Error, Result};

fn shifted(m: &Mat<CRat>, lambda: &CRat) -> Mat<CRat> {
    let mut n = m.clone();
    for d in 0..m.rows() {
        n[(d, d)] -= lambda;
    }
    n
}

/// `rank((m - lambda)^s)` for `s = 0, 1, ...` until it drops by `mult`.
fn rank_sequence(m: &Mat<CRat>, lambda: &CRat, mult: usize) -> Vec<usize> {
    let n = m.rows();
    let shift = GaussMat::shifted(m, lambda);
    let mut ranks = vec![n];
    let mut power = GaussMat::identity(n);
    while *ranks.last().expect("nonempty") > n - mult {
        power = power.mul(&shift);
        ranks.push(power.rank());
    }
    ranks
}

/// Block sizes at one eigenvalue from the rank sequence: the number of
/// blocks of size at least `s` is `r_{s-1} - r_s`.
fn sizes_from_ranks(ranks: &[usize]) -> Vec<usize> {
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut sizes = Vec::new();
    for s in 1..=at_least.len() {
        let exactly = at_least[s - 1] - at_least.get(s).copied().unwrap_or(0);
        sizes.extend(std::iter::repeat_n(s, exactly));
    }
    sizes
}

/// Jordan structure of a complex matrix whose eigenvalues lie in Q(i).
pub fn jordan_spec_complex(m: &Mat<CRat>) -> Result<JordanSpec> {
    let roots = gaussian_rational_roots(&char_poly(m)?)?;
    let mut blocks = Vec::new();
    for (lambda, mult) in roots {
        for size in sizes_from_ranks(&rank_sequence(m, &lambda, mult)) {
            blocks.push(JordanBlock::new(lambda.clone(), size));
        }
    }
    Ok(JordanSpec::new(blocks))
}

/// Jordan chains of `m` at `lambda`, each listed from the eigenvector up
/// to the top of the chain.
///
/// With `paired`, `lambda` must be real and `m` a complex adjoint: every
/// chain returned has a `J`-twin chain that is not returned, and the
/// returned chains together with their twins form a Jordan basis of the
/// generalized eigenspace.
fn jordan_chains(m: &Mat<CRat>, lambda: &CRat, mult: usize, paired: bool) -> Vec<Vec<Vec<CRat>>> {
    let n = m.rows();
    let shift = shifted(m, lambda);
    let apply = |v: &[CRat]| -> Vec<CRat> {
        shift
            .mul(&Mat::column_vector(v.to_vec()))
            .expect("conformable")
            .into_entries()
    };

    // kernels[s] spans ker (m - lambda)^s
    let int_shift = GaussMat::shifted(m, lambda);
    let mut kernels: Vec<Vec<Vec<CRat>>> = vec![Vec::new()];
    let mut power = GaussMat::identity(n);
    while kernels.last().expect("nonempty").len() < mult {
        power = power.mul(&int_shift);
        kernels.push(power.nullspace());
    }
    let height = kernels.len() - 1;

    // (top vector, chain length, kept)
    let mut tops: Vec<(Vec<CRat>, usize, bool)> = Vec::new();
    for s in (1..=height).rev() {
        let mut span = EchelonSet::new(n);
        for v in &kernels[s - 1] {
            span.insert(v);
        }
        for (top, len, _) in &tops {
            let mut v = top.clone();
            for _ in s..*len {
                v = apply(&v);
            }
            span.insert(&v);
        }
        for u in &kernels[s] {
            if span.insert(u) {
                tops.push((u.clone(), s, true));
                if paired {
                    let twin = quaternionic_twin(u);
                    let fresh = span.insert(&twin);
                    debug_assert!(fresh, "twin of a new top must be independent");
                    tops.push((twin, s, false));
                }
            }
        }
    }

    tops.into_iter()
        .filter(|(_, _, kept)| *kept)
        .map(|(top, len, _)| {
            let mut chain = vec![top];
            for _ in 1..len {
                let next = apply(chain.last().expect("nonempty"));
                chain.push(next);
            }
            chain.reverse();
            chain
        })
        .collect()
}

/// Blocks of the quaternion Jordan form of `m` together with the columns
/// of a transforming matrix for each block, in no particular order.
pub(crate) fn quaternion_jordan_blocks(m: &Mat<QRat>) -> Result<Vec<(JordanBlock, Vec<Vec<QRat>>)>> {
    if !m.is_square() {
        return Err(Error::NotSquare(m.rows(), m.cols()));
    }
    let chi = complex_adjoint(m);
    let roots = gaussian_rational_roots(&char_poly(&chi)?)?;
    let mut out = Vec::new();
    for (lambda, mult) in roots {
        if lambda.im.is_negative() {
            continue;
        }
        let paired = lambda.is_real();
        for chain in jordan_chains(&chi, &lambda, mult, paired) {
            let cols = chain.iter().map(|w| from_adjoint_vector(w)).collect();
            out.push((JordanBlock::new(lambda.clone(), chain.len()), cols));
        }
    }
    let total: usize = out.iter().map(|(b, _)| b.size).sum();
    if total != m.rows() {
        return Err(Error::CertificateFailed("quaternion Jordan basis has the wrong size"));
    }
    Ok(out)
}

/// Sorts blocks into canonical order and lays their columns side by side.
pub(crate) fn assemble(mut blocks: Vec<(JordanBlock, Vec<Vec<QRat>>)>, n: usize) -> (JordanSpec, Mat<QRat>) {
    blocks.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    let mut t = Mat::zeros(n, n);
    let mut col = 0;
    for (_, cols) in &blocks {
        for c in cols {
            t.set_column(col, c);
            col += 1;
        }
    }
    let spec = JordanSpec::new(blocks.into_iter().map(|(b, _)| b).collect());
    (spec, t)
}

/// Jordan form of a quaternion matrix under similarity: blocks `J_k(a+bi)`
/// with `b >= 0`.
///
/// Read off the complex adjoint, whose Jordan blocks come in conjugate
/// pairs: keep those with positive imaginary part and half of the real
/// ones.
pub fn jordan_spec_quaternion(m: &Mat<QRat>) -> Result<JordanSpec> {
    if !m.is_square() {
        return Err(Error::NotSquare(m.rows(), m.cols()));
    }
    let adjoint_spec = jordan_spec_complex(&complex_adjoint(m))?;
    let mut blocks = Vec::new();
    let mut skip_next_real = false;
    for b in adjoint_spec.blocks() {
        if b.eigenvalue.im.is_positive() {
            blocks.push(b.clone());
        } else if b.eigenvalue.is_real() {
            // equal real blocks are adjacent in canonical order
            if !skip_next_real {
                blocks.push(b.clone());
            }
            skip_next_real = !skip_next_real;
        }
    }
    Ok(JordanSpec::new(blocks))
}

/// Jordan form of a quaternion matrix with a nonsingular `s` such that
/// `s^{-1} m s` is the Jordan matrix. The result is checked before it is
/// returned.
pub fn jordan_certificate(m: &Mat<QRat>) -> Result<(JordanSpec, Mat<QRat>)> {
    let blocks = quaternion_jordan_blocks(m)?;
    let (spec, s) = assemble(blocks, m.rows());
    if !verify_consimilarity(m, &s, &spec.quaternion_matrix(), Sigma::One) {
        return Err(Error::CertificateFailed("s^-1 m s is not the Jordan matrix"));
    }
    Ok((spec, s))
}
