use super::Mat;
use crate::scalar::{CRat, QRat, Scalar};

/// `first + second * j`, both complex and of the same shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexSplit {
    pub first: Mat<CRat>,
    pub second: Mat<CRat>,
}

/// Writes `c = U + V j` with complex `U`, `V`.
pub fn split_complex(c: &Mat<QRat>) -> ComplexSplit {
    ComplexSplit {
        first: c.map(|q| q.split().0),
        second: c.map(|q| q.split().1),
    }
}

/// Inverse of [`split_complex`]. Panics if the shapes differ.
pub fn join_complex(split: &ComplexSplit) -> Mat<QRat> {
    assert_eq!(split.first.shape(), split.second.shape(), "split shapes");
    let (r, c) = split.first.shape();
    Mat::from_fn(r, c, |i, k| {
        QRat::from_split(&split.first[(i, k)], &split.second[(i, k)])
    })
}

/// The complex adjoint `[[U, V], [-conj V, conj U]]` of `a = U + V j`.
pub fn complex_adjoint(a: &Mat<QRat>) -> Mat<CRat> {
    let ComplexSplit { first: u, second: v } = split_complex(a);
    let (m, n) = a.shape();
    let mut out = Mat::zeros(2 * m, 2 * n);
    out.set_block(0, 0, &u);
    out.set_block(0, n, &v);
    out.set_block(m, 0, &v.conj().neg());
    out.set_block(m, n, &u.conj());
    out
}

/// Sends a quaternion column `x = x1 + x2 j` to `[x1; -conj x2]`.
///
/// This intertwines left multiplication by `a` with `complex_adjoint(a)` and
/// is linear for complex scalars acting on the right.
#[cfg(test)]
pub(crate) fn adjoint_vector(x: &[QRat]) -> Vec<CRat> {
    let (top, bottom): (Vec<CRat>, Vec<CRat>) = x
        .iter()
        .map(|q| {
            let (u, v) = q.split();
            (u, v.conj().neg_ref())
        })
        .unzip();
    top.into_iter().chain(bottom).collect()
}

/// Inverse of [`adjoint_vector`].
pub(crate) fn from_adjoint_vector(w: &[CRat]) -> Vec<QRat> {
    let n = w.len() / 2;
    (0..n)
        .map(|r| QRat::from_split(&w[r], &w[n + r].conj().neg_ref()))
        .collect()
}

/// The antilinear map `[a; b] -> [-conj b; conj a]` on the adjoint space.
/// It commutes with every complex adjoint and squares to `-1`; under
/// [`adjoint_vector`] it corresponds to `x -> -x j`.
pub(crate) fn quaternionic_twin(w: &[CRat]) -> Vec<CRat> {
    let n = w.len() / 2;
    let top = w[n..].iter().map(|b| b.conj().neg_ref());
    let bottom = w[..n].iter().map(CRat::conj);
    top.chain(bottom).collect()
}
