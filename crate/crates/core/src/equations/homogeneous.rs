//! Closed-form homogeneous solutions of `A Y - Y^sigma B = 0` for Jordan
//! matrices `A`, `B`.
//!
//! `Y = U + V j` with `A U = U B` and `A V = V (sigma^2 conj B)`. A block
//! `U_ab` is nonzero only when the eigenvalues agree, and then it is an
//! upper-triangular Toeplitz matrix padded with zero columns on the left
//! (rows <= cols) or zero rows at the bottom (rows > cols). For
//! `sigma^2 = -1` the superdiagonal of `-conj J` is `-1`, so the `V` blocks
//! are Toeplitz matrices with alternating column signs.

use std::fmt;

use super::structured::realize;
use crate::canonical::JordanSpec;
use crate::matrix::Mat;
use crate::scalar::{CRat, QRat, Rat, Scalar, Sigma};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParamRole {
    /// Complex part `U` of `Y = U + V j`.
    U,
    /// Part `V` of `Y = U + V j`.
    V,
}

/// A block `Y_ab` carrying free complex parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToeplitzParam {
    /// Index of the Jordan block of `A` (rows).
    pub row_block: usize,
    /// Index of the Jordan block of `B` (columns).
    pub col_block: usize,
    pub role: ParamRole,
    pub rows: usize,
    pub cols: usize,
    /// Number of free complex parameters, `min(rows, cols)`.
    pub count: usize,
    /// Column `t` of the block is multiplied by `(-1)^t`.
    pub alternating_signs: bool,
}

impl ToeplitzParam {
    /// True when the Toeplitz square sits on the right of the block, false
    /// when it sits on top.
    pub fn rows_le_cols(&self) -> bool {
        self.rows <= self.cols
    }

    /// The `rows x cols` block for parameter `t` (the `t`-th superdiagonal
    /// of the Toeplitz square).
    pub fn block(&self, t: usize) -> Mat<CRat> {
        assert!(t < self.count);
        let mut m = Mat::zeros(self.rows, self.cols);
        let shift = self.cols.saturating_sub(self.rows);
        for r in 0..self.count - t {
            let col = shift + r + t;
            m[(r, col)] = if self.alternating_signs && col % 2 == 1 {
                -CRat::one()
            } else {
                CRat::one()
            };
        }
        m
    }
}

impl fmt::Display for ToeplitzParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let role = match self.role {
            ParamRole::U => "U",
            ParamRole::V => "V",
        };
        write!(
            f,
            "{role}[{},{}] {}x{} params={}",
            self.row_block + 1,
            self.col_block + 1,
            self.rows,
            self.cols,
            self.count
        )
    }
}

/// Real basis of `{Y : A Y - Y^sigma B = 0}` for `A = J(spec_a)` and
/// `B = J(spec_b)`, grouped by block. Each complex parameter contributes two
/// real basis matrices.
pub fn homogeneous_basis_jordan(
    spec_a: &JordanSpec,
    spec_b: &JordanSpec,
    sigma: Sigma,
) -> Vec<(ToeplitzParam, Vec<Mat<QRat>>)> {
    let s = CRat::real(Rat::from_int(sigma.square()));
    let (m, n) = (spec_a.dim(), spec_b.dim());
    let (row_off, col_off) = (spec_a.offsets(), spec_b.offsets());
    let mut out = Vec::new();
    for (alpha, ba) in spec_a.blocks().iter().enumerate() {
        for (beta, bb) in spec_b.blocks().iter().enumerate() {
            for role in [ParamRole::U, ParamRole::V] {
                let target = match role {
                    ParamRole::U => bb.eigenvalue.clone(),
                    ParamRole::V => &s * &bb.eigenvalue.conj(),
                };
                if ba.eigenvalue != target {
                    continue;
                }
                let param = ToeplitzParam {
                    row_block: alpha,
                    col_block: beta,
                    role,
                    rows: ba.size,
                    cols: bb.size,
                    count: ba.size.min(bb.size),
                    alternating_signs: role == ParamRole::V && sigma == Sigma::I,
                };
                let mats = (0..param.count)
                    .flat_map(|t| {
                        let mut e = Mat::zeros(m, n);
                        e.set_block(row_off[alpha], col_off[beta], &param.block(t));
                        realize(&e, role == ParamRole::V)
                    })
                    .collect();
                out.push((param, mats));
            }
        }
    }
    out
}

/// Real dimension of the homogeneous solution space for Jordan data.
pub fn jordan_homogeneous_dim(spec_a: &JordanSpec, spec_b: &JordanSpec, sigma: Sigma) -> usize {
    homogeneous_basis_jordan(spec_a, spec_b, sigma)
        .iter()
        .map(|(p, _)| 2 * p.count)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::JordanBlock;
    use crate::equations::{verify_solution, EquationKind};

    fn spec(blocks: &[((i64, i64), usize)]) -> JordanSpec {
        JordanSpec::new(
            blocks
                .iter()
                .map(|&((re, im), size)| JordanBlock::new(CRat::from_ints(re, im), size))
                .collect(),
        )
    }

    fn all_verify(a: &JordanSpec, b: &JordanSpec, sigma: Sigma) -> bool {
        let (am, bm) = (a.quaternion_matrix(), b.quaternion_matrix());
        let zero = Mat::zeros(a.dim(), b.dim());
        homogeneous_basis_jordan(a, b, sigma).iter().all(|(_, mats)| {
            mats.iter()
                .all(|y| verify_solution(&am, &bm, &zero, y, sigma, EquationKind::SylvesterLike).unwrap())
        })
    }

    #[test]
    fn example_parameters() {
        let a = spec(&[((0, 1), 1), ((0, 0), 1)]);
        let b = spec(&[((0, 1), 2)]);
        let one = homogeneous_basis_jordan(&a, &b, Sigma::One);
        assert_eq!(one.len(), 1);
        let (p, mats) = &one[0];
        assert_eq!((p.role, p.rows, p.cols, p.count), (ParamRole::U, 1, 2, 1));
        assert_eq!(p.block(0), Mat::from_rows(vec![vec![CRat::zero(), CRat::one()]]));
        assert_eq!(mats.len(), 2);
        let roles: Vec<ParamRole> = homogeneous_basis_jordan(&a, &b, Sigma::I).iter().map(|(p, _)| p.role).collect();
        assert_eq!(roles, vec![ParamRole::U, ParamRole::V]);
        assert_eq!(jordan_homogeneous_dim(&a, &b, Sigma::I), 4);
        assert!(all_verify(&a, &b, Sigma::One) && all_verify(&a, &b, Sigma::I));
    }

    #[test]
    fn toeplitz_shapes() {
        let a = spec(&[((1, 0), 2)]);
        let b = spec(&[((1, 0), 3)]);
        let (p, _) = &homogeneous_basis_jordan(&a, &b, Sigma::One)[0];
        assert!(p.rows_le_cols());
        let z = CRat::zero;
        let o = CRat::one;
        assert_eq!(p.block(0), Mat::from_rows(vec![vec![z(), o(), z()], vec![z(), z(), o()]]));
        assert_eq!(p.block(1), Mat::from_rows(vec![vec![z(), z(), o()], vec![z(), z(), z()]]));
        let (p, _) = &homogeneous_basis_jordan(&b, &a, Sigma::One)[0];
        assert!(!p.rows_le_cols());
        assert_eq!(p.block(0), Mat::from_rows(vec![vec![o(), z()], vec![z(), o()], vec![z(), z()]]));
    }

    #[test]
    fn alternating_v_blocks_verify() {
        // lambda = 1+i against mu = -1+i: -conj(mu) = 1+i.
        let a = spec(&[((1, 1), 3), ((1, 1), 1)]);
        let b = spec(&[((-1, 1), 2), ((1, 1), 2)]);
        let basis = homogeneous_basis_jordan(&a, &b, Sigma::I);
        assert!(basis.iter().any(|(p, _)| p.alternating_signs));
        assert!(all_verify(&a, &b, Sigma::I));
        assert!(all_verify(&a, &b, Sigma::One));
    }

    #[test]
    fn disjoint_data_is_empty() {
        let a = spec(&[((1, 0), 2)]);
        let b = spec(&[((2, 1), 2)]);
        assert!(homogeneous_basis_jordan(&a, &b, Sigma::One).is_empty());
        assert!(homogeneous_basis_jordan(&a, &b, Sigma::I).is_empty());
    }
}
