//! The eigenvalue collision set deciding unique solvability.

use std::fmt;

use super::EquationKind;
use crate::canonical::JordanSpec;
use crate::scalar::{CRat, Rat, Scalar, Sigma};

/// A collision value: a Gaussian rational or, for Stein-like equations,
/// the inverse of a zero eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MSigmaValue {
    Finite(CRat),
    Infinity,
}

impl fmt::Display for MSigmaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MSigmaValue::Finite(z) => write!(f, "{z}"),
            MSigmaValue::Infinity => f.write_str("inf"),
        }
    }
}

/// Eigenvalues of `A` (inverted for Stein-like equations) that coincide
/// with an eigenvalue `mu` of `B` or with `sigma^2 conj(mu)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MSigma {
    pub values: Vec<MSigmaValue>,
}

impl MSigma {
    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, z: &CRat) -> bool {
        self.values.contains(&MSigmaValue::Finite(z.clone()))
    }

    pub fn contains_infinity(&self) -> bool {
        self.values.contains(&MSigmaValue::Infinity)
    }
}

impl fmt::Display for MSigma {
    /// `{}` or `{v1, v2, ...}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub fn classify_m_sigma(spec_a: &JordanSpec, spec_b: &JordanSpec, sigma: Sigma, kind: EquationKind) -> MSigma {
    let s = CRat::real(Rat::from_int(sigma.square()));
    let mut targets: Vec<CRat> = Vec::new();
    for mu in spec_b.eigenvalues() {
        for t in [mu.clone(), &s * &mu.conj()] {
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
    }
    let mut values = Vec::new();
    for lambda in spec_a.eigenvalues() {
        let v = match kind {
            EquationKind::SylvesterLike => MSigmaValue::Finite(lambda),
            EquationKind::SteinLike if lambda.is_zero() => MSigmaValue::Infinity,
            EquationKind::SteinLike => MSigmaValue::Finite(lambda.inv().expect("nonzero")),
        };
        let hit = match &v {
            MSigmaValue::Finite(z) => targets.contains(z),
            MSigmaValue::Infinity => false,
        };
        if hit && !values.contains(&v) {
            values.push(v);
        }
    }
    MSigma { values }
}
