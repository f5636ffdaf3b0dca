use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error("matrix is singular")]
    Singular,
    #[error("automorphism is not involutive: {0}")]
    NotInvolutive(String),
    #[error("no frame with rational coordinates exists for unit {0} (its norm is irrational)")]
    ExactFrameUnavailable(String),
    #[error("eigenvalues are not Gaussian rationals; residual factor {residual}")]
    EigenvaluesNotGaussianRational { residual: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("certificate check failed: {0}")]
    CertificateFailed(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
