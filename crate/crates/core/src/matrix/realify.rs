//! Real expansion of R-linear quaternion matrix equations.
//!
//! An unknown `m x n` quaternion matrix is flattened to `4mn` rational
//! coordinates: entries in row-major order, each as `(1, i, j, k)`
//! components. The action is sampled on the corresponding basis matrices,
//! which gives the exact real coefficient matrix without any knowledge of
//! the equation's structure.

use super::{solve_linear, LinearSolution, Mat};
use crate::scalar::{QRat, Rat, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealSolution {
    Inconsistent,
    Consistent {
        particular: Mat<QRat>,
        /// Real basis of the homogeneous solutions.
        basis: Vec<Mat<QRat>>,
    },
}

fn unit(t: usize) -> QRat {
    match t {
        0 => QRat::one(),
        1 => QRat::i(),
        2 => QRat::j(),
        _ => QRat::k(),
    }
}

fn flatten(m: &Mat<QRat>) -> Vec<Rat> {
    m.entries()
        .iter()
        .flat_map(|q| q.components().map(Clone::clone))
        .collect()
}

fn unflatten(rows: usize, cols: usize, v: &[Rat]) -> Mat<QRat> {
    Mat::from_fn(rows, cols, |r, c| {
        let o = 4 * (r * cols + c);
        QRat::new(v[o].clone(), v[o + 1].clone(), v[o + 2].clone(), v[o + 3].clone())
    })
}

/// Solves `action(X) = rhs` for an `rows x cols` unknown `X`. `action` must
/// be R-linear.
pub fn realify_solve(
    (rows, cols): (usize, usize),
    action: impl Fn(&Mat<QRat>) -> Mat<QRat>,
    rhs: &Mat<QRat>,
) -> RealSolution {
    let unknowns = 4 * rows * cols;
    let equations = 4 * rhs.rows() * rhs.cols();
    let mut coeffs = Mat::zeros(equations, unknowns);
    for idx in 0..unknowns {
        let mut e = Mat::zeros(rows, cols);
        e[(idx / 4 / cols, idx / 4 % cols)] = unit(idx % 4);
        let image = action(&e);
        assert_eq!(image.shape(), rhs.shape(), "action output shape");
        for (r, v) in flatten(&image).into_iter().enumerate() {
            coeffs[(r, idx)] = v;
        }
    }
    match solve_linear(&coeffs, &flatten(rhs)) {
        LinearSolution::Inconsistent => RealSolution::Inconsistent,
        LinearSolution::Solved {
            particular,
            nullspace,
        } => RealSolution::Consistent {
            particular: unflatten(rows, cols, &particular),
            basis: nullspace
                .iter()
                .map(|v| unflatten(rows, cols, v))
                .collect(),
        },
    }
}
