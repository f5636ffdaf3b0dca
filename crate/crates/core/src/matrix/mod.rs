//! Dense exact matrices over [`Rat`], [`CRat`] and [`QRat`].
//!
//! Elimination uses left row operations only, so it is valid over the
//! quaternions; solution spaces are right vector spaces (column vectors
//! scaled on the right).

pub(crate) mod adjoint;
mod realify;
mod reduce;
mod text;

pub use adjoint::{complex_adjoint, join_complex, split_complex, ComplexSplit};
pub use realify::{realify_solve, RealSolution};
pub use reduce::{nullspace, row_reduce, solve_linear, EchelonSet, LinearSolution, RowReduction};
pub use text::{format_matrix, parse_matrix};

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::scalar::{apply_hat, CRat, QRat, Rat, Scalar, Sigma};
use crate::{Error, Result};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Mat<T> {
        Mat {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat<T> {
        Mat::from_fn(n, n, |r, c| if r == c { T::one() } else { T::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Mat<T> {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    /// Panics if `data.len() != rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Mat<T> {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        Mat { rows, cols, data }
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Mat<T> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    pub fn diag(entries: &[T]) -> Mat<T> {
        let n = entries.len();
        Mat::from_fn(n, n, |r, c| if r == c { entries[r].clone() } else { T::zero() })
    }

    pub fn column_vector(entries: Vec<T>) -> Mat<T> {
        let n = entries.len();
        Mat::from_vec(n, 1, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<T> {
        self.data
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<T> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn set_column(&mut self, c: usize, values: &[T]) {
        assert_eq!(values.len(), self.rows);
        for (r, v) in values.iter().enumerate() {
            self[(r, c)] = v.clone();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> Mat<U> {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Mat<T> {
        Mat::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn mul(&self, other: &Mat<T>) -> Result<Mat<T>> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch {
                op: "multiply",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out: Mat<T> = Mat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let lhs = &self[(r, k)];
                if lhs.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let rhs = &other[(k, c)];
                    if !rhs.is_zero() {
                        let p = lhs.mul_ref(rhs);
                        out[(r, c)] = out[(r, c)].add_ref(&p);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Mat<T>) -> Result<Mat<T>> {
        self.zip_with(other, "add", T::add_ref)
    }

    pub fn sub(&self, other: &Mat<T>) -> Result<Mat<T>> {
        self.zip_with(other, "subtract", T::sub_ref)
    }

    fn zip_with(&self, other: &Mat<T>, op: &'static str, f: impl Fn(&T, &T) -> T) -> Result<Mat<T>> {
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn neg(&self) -> Mat<T> {
        self.map(T::neg_ref)
    }

    /// `s * self`, scalar on the left.
    pub fn scale_left(&self, s: &T) -> Mat<T> {
        self.map(|x| s.mul_ref(x))
    }

    /// `self * s`, scalar on the right.
    pub fn scale_right(&self, s: &T) -> Mat<T> {
        self.map(|x| x.mul_ref(s))
    }

    pub fn block_diag(blocks: &[Mat<T>]) -> Mat<T> {
        let rows = blocks.iter().map(Mat::rows).sum();
        let cols = blocks.iter().map(Mat::cols).sum();
        let mut out = Mat::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Mat<T>) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(r0 + r, c0 + c)] = block[(r, c)].clone();
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat<T> {
        Mat::from_fn(rows, cols, |r, c| self[(r0 + r, c0 + c)].clone())
    }

    /// Keeps the listed columns, in the listed order.
    pub fn select_columns(&self, cols: &[usize]) -> Mat<T> {
        Mat::from_fn(self.rows, cols.len(), |r, c| self[(r, cols[c])].clone())
    }

    pub fn rank(&self) -> usize {
        reduce::rank(self)
    }

    /// Two-sided inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Mat<T>> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let red = row_reduce(self);
        if red.rank < self.rows {
            return Err(Error::Singular);
        }
        Ok(red.transform)
    }

    pub fn pow(&self, e: u32) -> Result<Mat<T>> {
        if !self.is_square() {
            return Err(Error::NotSquare(self.rows, self.cols));
        }
        let mut out = Mat::identity(self.rows);
        for _ in 0..e {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// `k x k` Jordan block: `value` on the diagonal, ones above it.
    pub fn jordan_block(value: &T, k: usize) -> Mat<T> {
        Mat::from_fn(k, k, |r, c| {
            if r == c {
                value.clone()
            } else if c == r + 1 {
                T::one()
            } else {
                T::zero()
            }
        })
    }
}

impl<T> Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        assert!(r < self.rows && c < self.cols, "index out of bounds");
        &mut self.data[r * self.cols + c]
    }
}

impl<T: fmt::Debug> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.data[r * self.cols + c])?;
            }
        }
        write!(f, "]")
    }
}

impl Mat<QRat> {
    pub fn from_complex(m: &Mat<CRat>) -> Mat<QRat> {
        m.map(QRat::from_complex)
    }

    pub fn from_real(m: &Mat<Rat>) -> Mat<QRat> {
        m.map(|r| QRat::from_rat(r.clone()))
    }

    pub fn is_complex(&self) -> bool {
        self.data.iter().all(QRat::is_complex)
    }

    pub fn is_real(&self) -> bool {
        self.data.iter().all(QRat::is_real)
    }

    /// The complex matrix with the same entries, when every entry is complex.
    pub fn to_complex(&self) -> Option<Mat<CRat>> {
        self.is_complex().then(|| self.map(|q| q.split().0))
    }

    /// Entrywise `h -> h^sigma`.
    pub fn hat(&self, sigma: Sigma) -> Mat<QRat> {
        self.map(|q| apply_hat(q, sigma))
    }

    /// `S^{-sigma} = (S^{-1})^sigma`.
    pub fn inverse_hat(&self, sigma: Sigma) -> Result<Mat<QRat>> {
        Ok(self.inverse()?.hat(sigma))
    }
}

impl Mat<CRat> {
    pub fn conj(&self) -> Mat<CRat> {
        self.map(CRat::conj)
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Mat<CRat>) -> Mat<CRat> {
        let (p, q) = other.shape();
        Mat::from_fn(self.rows * p, self.cols * q, |r, c| {
            self[(r / p, c / q)].mul_ref(&other[(r % p, c % q)])
        })
    }
}
