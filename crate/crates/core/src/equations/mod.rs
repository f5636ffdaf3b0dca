//! The quaternion matrix equations `A X - X^sigma B = C` (Sylvester-like)
//! and `X - A X^sigma B = C` (Stein-like).
//!
//! Three solvers are provided and are expected to agree:
//! [`solve_structured`] for complex `A`, `B` (the equation decouples into
//! two complex equations for `X = X1 + X2 j`), [`solve_via_canonical`]
//! which first brings `A` and `B` to canonical form, and [`solve_general`]
//! which expands everything into a real linear system.

mod complex;
mod general;
mod homogeneous;
mod msigma;
mod structured;
mod transport;

pub use complex::{solve_complex_stein, solve_complex_sylvester};
pub use general::solve_general;
pub use homogeneous::{homogeneous_basis_jordan, jordan_homogeneous_dim, ParamRole, ToeplitzParam};
pub use msigma::{classify_m_sigma, MSigma, MSigmaValue};
pub use structured::solve_structured;
pub use transport::{solve_via_canonical, solve_via_canonical_detailed, CanonicalSolve};

use std::fmt;

use crate::matrix::Mat;
use crate::scalar::{QRat, Scalar, Sigma};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EquationKind {
    /// `A X - X^sigma B = C`
    SylvesterLike,
    /// `X - A X^sigma B = C`
    SteinLike,
}

impl fmt::Display for EquationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EquationKind::SylvesterLike => "sylvester",
            EquationKind::SteinLike => "stein",
        })
    }
}

/// Solutions of a linear matrix equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionSet<T = QRat> {
    Unique(Mat<T>),
    Inconsistent,
    /// `particular + span(basis)`, the span taken over the reals for
    /// quaternion solutions and over the complex numbers for complex ones.
    Affine {
        particular: Mat<T>,
        basis: Vec<Mat<T>>,
    },
}

impl<T: Scalar> SolutionSet<T> {
    /// `Unique` when `basis` is empty, `Affine` otherwise.
    pub fn from_parts(particular: Mat<T>, basis: Vec<Mat<T>>) -> SolutionSet<T> {
        if basis.is_empty() {
            SolutionSet::Unique(particular)
        } else {
            SolutionSet::Affine { particular, basis }
        }
    }

    pub fn is_unique(&self) -> bool {
        matches!(self, SolutionSet::Unique(_))
    }

    pub fn is_consistent(&self) -> bool {
        !matches!(self, SolutionSet::Inconsistent)
    }

    /// Dimension of the solution set; 0 for a unique solution, `None` when
    /// there is none.
    pub fn dim(&self) -> Option<usize> {
        match self {
            SolutionSet::Unique(_) => Some(0),
            SolutionSet::Inconsistent => None,
            SolutionSet::Affine { basis, .. } => Some(basis.len()),
        }
    }

    pub fn particular(&self) -> Option<&Mat<T>> {
        match self {
            SolutionSet::Unique(x) | SolutionSet::Affine { particular: x, .. } => Some(x),
            SolutionSet::Inconsistent => None,
        }
    }

    pub fn basis(&self) -> &[Mat<T>] {
        match self {
            SolutionSet::Affine { basis, .. } => basis,
            _ => &[],
        }
    }

    /// `UNIQUE`, `INCONSISTENT` or `AFFINE(dim=d)`.
    pub fn status(&self) -> String {
        match self {
            SolutionSet::Unique(_) => "UNIQUE".into(),
            SolutionSet::Inconsistent => "INCONSISTENT".into(),
            SolutionSet::Affine { basis, .. } => format!("AFFINE(dim={})", basis.len()),
        }
    }

    /// Applies `f` to the particular solution and to every basis element.
    pub fn map_solutions<U: Scalar>(&self, mut f: impl FnMut(&Mat<T>) -> Mat<U>) -> SolutionSet<U> {
        match self {
            SolutionSet::Unique(x) => SolutionSet::Unique(f(x)),
            SolutionSet::Inconsistent => SolutionSet::Inconsistent,
            SolutionSet::Affine { particular, basis } => SolutionSet::Affine {
                particular: f(particular),
                basis: basis.iter().map(f).collect(),
            },
        }
    }
}

pub(crate) fn check_shapes<T: Scalar, U: Scalar>(a: &Mat<T>, b: &Mat<T>, c: &Mat<U>) -> Result<()> {
    if !a.is_square() {
        return Err(Error::NotSquare(a.rows(), a.cols()));
    }
    if !b.is_square() {
        return Err(Error::NotSquare(b.rows(), b.cols()));
    }
    if c.shape() != (a.rows(), b.rows()) {
        return Err(Error::ShapeMismatch {
            op: "equation right-hand side",
            left: (a.rows(), b.rows()),
            right: c.shape(),
        });
    }
    Ok(())
}

/// The left-hand side `A X - X^sigma B` or `X - A X^sigma B`.
pub fn apply_operator(
    a: &Mat<QRat>,
    b: &Mat<QRat>,
    x: &Mat<QRat>,
    sigma: Sigma,
    kind: EquationKind,
) -> Result<Mat<QRat>> {
    let xs = x.hat(sigma);
    match kind {
        EquationKind::SylvesterLike => a.mul(x)?.sub(&xs.mul(b)?),
        EquationKind::SteinLike => x.sub(&a.mul(&xs)?.mul(b)?),
    }
}

/// Whether `x` satisfies the equation exactly.
pub fn verify_solution(
    a: &Mat<QRat>,
    b: &Mat<QRat>,
    c: &Mat<QRat>,
    x: &Mat<QRat>,
    sigma: Sigma,
    kind: EquationKind,
) -> Result<bool> {
    check_shapes(a, b, c)?;
    if x.shape() != c.shape() {
        return Err(Error::ShapeMismatch {
            op: "verify solution",
            left: c.shape(),
            right: x.shape(),
        });
    }
    Ok(apply_operator(a, b, x, sigma, kind)? == *c)
}

/// Checks the particular solution against `c` and every basis element
/// against zero.
pub fn verify_solution_set(
    a: &Mat<QRat>,
    b: &Mat<QRat>,
    c: &Mat<QRat>,
    set: &SolutionSet,
    sigma: Sigma,
    kind: EquationKind,
) -> Result<bool> {
    let zero = Mat::zeros(c.rows(), c.cols());
    if let Some(x) = set.particular() {
        if !verify_solution(a, b, c, x, sigma, kind)? {
            return Ok(false);
        }
    }
    for y in set.basis() {
        if !verify_solution(a, b, &zero, y, sigma, kind)? {
            return Ok(false);
        }
    }
    Ok(true)
}
