//! Exact linear algebra over the rational quaternions.
//!
//! The crate computes canonical forms of quaternion matrices under
//! consimilarity `A -> S^{-s} A S` for any involutive automorphism `h -> h^s`
//! of the quaternions, and solves the matrix equations
//!
//! ```text
//! A X - X^s B = C        X - A X^s B = C
//! ```
//!
//! by reducing them to pairs of complex Sylvester or Stein equations.
//! Every scalar is an exact rational (or a Gaussian rational, or a rational
//! quaternion); nothing is ever rounded, and every canonical form comes with
//! a transforming matrix that can be checked by substitution.

pub mod canonical;
pub mod equations;
mod error;
#[cfg(feature = "gen")]
pub mod gen;
pub mod matrix;
pub mod scalar;

pub use canonical::{
    are_consimilar, canonical_consimilarity, char_poly, gaussian_rational_roots, jordan_certificate,
    jordan_spec_complex, jordan_spec_quaternion, CanonicalResult, JordanBlock, JordanSpec, Poly,
};
pub use equations::{
    classify_m_sigma, homogeneous_basis_jordan, solve_complex_stein, solve_complex_sylvester,
    solve_general, solve_structured, solve_via_canonical, verify_solution, EquationKind, MSigma,
    SolutionSet, ToeplitzParam,
};
pub use error::{Error, Result};
pub use matrix::{ComplexSplit, Mat};
pub use scalar::{AutomorphismSpec, CRat, Frame, QRat, Rat, Scalar, Sigma};
