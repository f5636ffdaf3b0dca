//! Fraction-free matrix arithmetic over the Gaussian integers, used for the
//! expensive steps on matrices with large rational entries: scaling by a
//! common denominator keeps every intermediate entry integral, and
//! Bareiss elimination avoids fractions altogether.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::gaussint::GaussInt;
use crate::matrix::{nullspace, Mat};
use crate::scalar::{CRat, Rat, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct GaussMat {
    rows: usize,
    cols: usize,
    data: Vec<GaussInt>,
}

/// Least common denominator of the real and imaginary parts.
pub(crate) fn common_denominator<'a>(entries: impl IntoIterator<Item = &'a CRat>) -> BigInt {
    entries
        .into_iter()
        .fold(BigInt::one(), |l, z| l.lcm(z.re.denom()).lcm(z.im.denom()))
}

fn scale_to_int(z: &CRat, l: &BigInt) -> GaussInt {
    let part = |r: &Rat| {
        let (q, rem) = (r.numer() * l).div_rem(r.denom());
        debug_assert!(rem.is_zero(), "denominator does not divide the scale");
        q
    };
    GaussInt::new(part(&z.re), part(&z.im))
}

impl GaussMat {
    pub fn identity(n: usize) -> GaussMat {
        let mut data = vec![GaussInt::from_ints(0, 0); n * n];
        for d in 0..n {
            data[d * n + d] = GaussInt::from_ints(1, 0);
        }
        GaussMat { rows: n, cols: n, data }
    }

    /// `l * (m - lambda I)` for the least `l` making it integral.
    pub fn shifted(m: &Mat<CRat>, lambda: &CRat) -> GaussMat {
        let l = common_denominator(m.entries().iter().chain(std::iter::once(lambda)));
        let mut out = GaussMat::scaled(m, &l);
        let shift = scale_to_int(lambda, &l);
        for d in 0..m.rows().min(m.cols()) {
            let idx = d * m.cols() + d;
            out.data[idx] = out.data[idx].sub(&shift);
        }
        out
    }

    /// `l * m`; `l` must clear every denominator.
    pub fn scaled(m: &Mat<CRat>, l: &BigInt) -> GaussMat {
        GaussMat {
            rows: m.rows(),
            cols: m.cols(),
            data: m.entries().iter().map(|z| scale_to_int(z, l)).collect(),
        }
    }

    fn at(&self, r: usize, c: usize) -> &GaussInt {
        &self.data[r * self.cols + c]
    }

    pub fn mul(&self, o: &GaussMat) -> GaussMat {
        assert_eq!(self.cols, o.rows, "conformable");
        let mut data = vec![GaussInt::from_ints(0, 0); self.rows * o.cols];
        for r in 0..self.rows {
            for k in 0..self.cols {
                let x = self.at(r, k);
                if x.is_zero() {
                    continue;
                }
                for c in 0..o.cols {
                    let y = o.at(k, c);
                    if !y.is_zero() {
                        let idx = r * o.cols + c;
                        data[idx] = data[idx].add(&x.mul(y));
                    }
                }
            }
        }
        GaussMat {
            rows: self.rows,
            cols: o.cols,
            data,
        }
    }

    pub fn trace(&self) -> GaussInt {
        (0..self.rows.min(self.cols)).fold(GaussInt::from_ints(0, 0), |t, d| t.add(self.at(d, d)))
    }

    /// Nonzero rows of a row echelon form, by Bareiss elimination.
    pub fn echelon(&self) -> Vec<Vec<GaussInt>> {
        let mut a: Vec<Vec<GaussInt>> = self.data.chunks(self.cols.max(1)).map(<[GaussInt]>::to_vec).collect();
        a.truncate(self.rows);
        let mut prev = GaussInt::from_ints(1, 0);
        let mut top = 0;
        for col in 0..self.cols {
            if top == a.len() {
                break;
            }
            let Some(p) = (top..a.len()).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(top, p);
            let (head, tail) = a.split_at_mut(top + 1);
            let pivot_row = &head[top];
            let pivot = &pivot_row[col];
            for row in tail.iter_mut() {
                let f = row[col].clone();
                for c in col + 1..self.cols {
                    let v = pivot.mul(&row[c]).sub(&f.mul(&pivot_row[c]));
                    row[c] = v.div_exact(&prev).expect("Bareiss division is exact");
                }
                row[col] = GaussInt::from_ints(0, 0);
            }
            prev = pivot.clone();
            top += 1;
        }
        a.truncate(top);
        a
    }

    pub fn rank(&self) -> usize {
        self.echelon().len()
    }

    /// Nullspace basis, identical to the one read off the reduced row
    /// echelon form over the Gaussian rationals.
    pub fn nullspace(&self) -> Vec<Vec<CRat>> {
        let rows: Vec<Vec<CRat>> = self
            .echelon()
            .into_iter()
            .map(|row| row.into_iter().map(to_crat).collect())
            .collect();
        if rows.is_empty() {
            return nullspace(&Mat::<CRat>::zeros(1, self.cols));
        }
        nullspace(&Mat::from_rows(rows))
    }
}

fn to_crat(g: GaussInt) -> CRat {
    CRat::new(Rat::from(g.re), Rat::from(g.im))
}

/// Coefficients of `det(x I - m)` in ascending degree, by Faddeev-LeVerrier
/// on `l m` with `l` the common denominator.
pub(crate) fn char_poly_coeffs(m: &Mat<CRat>) -> Vec<CRat> {
    let n = m.rows();
    let l = common_denominator(m.entries());
    let d = GaussMat::scaled(m, &l);
    let mut coeffs = vec![GaussInt::from_ints(0, 0); n + 1];
    coeffs[n] = GaussInt::from_ints(1, 0);
    let mut aux = GaussMat {
        rows: n,
        cols: n,
        data: vec![GaussInt::from_ints(0, 0); n * n],
    };
    for k in 1..=n {
        let mut next = d.mul(&aux);
        for i in 0..n {
            next.data[i * n + i] = next.data[i * n + i].add(&coeffs[n - k + 1]);
        }
        let t = d.mul(&next).trace();
        let kk = GaussInt::from_ints(-(k as i64), 0);
        coeffs[n - k] = t.div_exact(&kk).expect("Faddeev-LeVerrier division is exact");
        aux = next;
    }
    // det(xI - l m) = sum d_k x^k with d_k = l^(n-k) c_k
    let mut scale = BigInt::one();
    let mut out = vec![CRat::zero(); n + 1];
    for k in (0..=n).rev() {
        let z = to_crat(coeffs[k].clone());
        let s = Rat::from_bigints(BigInt::one(), scale.clone());
        out[k] = z.scale(&s);
        scale *= &l;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: i64, im: i64) -> CRat {
        CRat::from_ints(re, im)
    }

    #[test]
    fn bareiss_rank_matches_rational_rank() {
        let m = Mat::from_rows(vec![
            vec![c(1, 1), c(2, 0), c(0, 3)],
            vec![c(2, 2), c(4, 0), c(0, 6)],
            vec![c(0, 1), c(1, -1), c(5, 0)],
        ]);
        let g = GaussMat::scaled(&m, &BigInt::one());
        assert_eq!(g.rank(), 2);
        assert_eq!(g.nullspace(), crate::matrix::row_reduce(&m).nullspace);
    }

    #[test]
    fn shifted_clears_denominators() {
        let half = CRat::new(Rat::new(1, 2), Rat::new(-1, 3));
        let m = Mat::from_rows(vec![vec![half.clone(), c(1, 0)], vec![c(0, 0), half.clone()]]);
        let g = GaussMat::shifted(&m, &half);
        assert_eq!(g.rank(), 1);
        assert_eq!(g.mul(&g).rank(), 0);
        assert_eq!(GaussMat::identity(2).rank(), 2);
    }
}
