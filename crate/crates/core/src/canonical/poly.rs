//! Univariate polynomials over the Gaussian rationals.

use std::fmt;

use crate::matrix::Mat;
use crate::scalar::{CRat, Rat, Scalar};
use crate::{Error, Result};

/// Coefficients in increasing degree; never has a zero leading coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<CRat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<CRat>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn constant(c: CRat) -> Poly {
        Poly::new(vec![c])
    }

    /// `x - root`.
    pub fn linear(root: &CRat) -> Poly {
        Poly::new(vec![root.neg_ref(), CRat::one()])
    }

    /// `prod (x - r)^k`.
    pub fn from_roots(roots: &[(CRat, usize)]) -> Poly {
        roots.iter().fold(Poly::constant(CRat::one()), |acc, (r, k)| {
            (0..*k).fold(acc, |acc, _| acc.mul(&Poly::linear(r)))
        })
    }

    pub fn coeffs(&self) -> &[CRat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> CRat {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn monic(&self) -> Poly {
        match self.leading().inv() {
            Some(inv) => Poly::new(self.coeffs.iter().map(|c| c * &inv).collect()),
            None => Poly::zero(),
        }
    }

    pub fn eval(&self, x: &CRat) -> CRat {
        self.coeffs
            .iter()
            .rev()
            .fold(CRat::zero(), |acc, c| acc * x + c)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![CRat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = CRat::zero();
        Poly::new(
            (0..n)
                .map(|i| {
                    self.coeffs.get(i).unwrap_or(&zero) - other.coeffs.get(i).unwrap_or(&zero)
                })
                .collect(),
        )
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let lead_inv = divisor.leading().inv().expect("division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        if rem.len() < divisor.coeffs.len() {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![CRat::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let f = &rem[k + dd] * &lead_inv;
            if f.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &f * d;
            }
            quot[k] = f;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Rat::from_int(i as i64)))
                .collect(),
        )
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self / gcd(self, self')`, monic.
    pub fn squarefree_part(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let compound = !c.re.is_zero() && !c.im.is_zero();
            let body = if deg == 0 {
                text
            } else if c.is_one() {
                String::new()
            } else if *c == CRat::one().neg_ref() {
                "-".into()
            } else if compound {
                format!("({text})")
            } else {
                text
            };
            let (sign, body) = match body.strip_prefix('-') {
                Some(rest) if !compound || deg == 0 => ("-", rest.to_string()),
                _ => ("+", body),
            };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            f.write_str(&body)?;
            match deg {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{deg}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Monic characteristic polynomial `det(xI - m)`, by the Faddeev-LeVerrier
/// recurrence (exact: every division is by a nonzero integer).
pub fn char_poly(m: &Mat<CRat>) -> Result<Poly> {
    if !m.is_square() {
        return Err(Error::NotSquare(m.rows(), m.cols()));
    }
    let coeffs = super::intmat::char_poly_coeffs(m);
    Ok(Poly::new(coeffs))
}
