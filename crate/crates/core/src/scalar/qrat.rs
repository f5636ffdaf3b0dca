use std::fmt;

use super::{impl_ring_ops, write_terms, CRat, Rat, Scalar};

/// Rational quaternion `a + b*i + c*j + d*k`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QRat {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
}

impl QRat {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> QRat {
        QRat { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> QRat {
        QRat::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn i() -> QRat {
        QRat::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> QRat {
        QRat::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> QRat {
        QRat::from_ints(0, 0, 0, 1)
    }

    /// `u + v*j` for complex `u`, `v`.
    pub fn from_split(u: &CRat, v: &CRat) -> QRat {
        QRat::new(u.re.clone(), u.im.clone(), v.re.clone(), v.im.clone())
    }

    /// The pair `(u, v)` with `self = u + v*j`.
    pub fn split(&self) -> (CRat, CRat) {
        (
            CRat::new(self.a.clone(), self.b.clone()),
            CRat::new(self.c.clone(), self.d.clone()),
        )
    }

    pub fn from_complex(z: &CRat) -> QRat {
        QRat::from_split(z, &CRat::zero())
    }

    pub fn is_complex(&self) -> bool {
        self.c.is_zero() && self.d.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.is_complex() && self.b.is_zero()
    }

    pub fn is_pure(&self) -> bool {
        self.a.is_zero()
    }

    pub fn conj(&self) -> QRat {
        QRat::new(self.a.clone(), -&self.b, -&self.c, -&self.d)
    }

    pub fn norm_sqr(&self) -> Rat {
        &self.a * &self.a + &self.b * &self.b + &self.c * &self.c + &self.d * &self.d
    }

    pub fn scale(&self, r: &Rat) -> QRat {
        QRat::new(&self.a * r, &self.b * r, &self.c * r, &self.d * r)
    }

    /// Euclidean inner product of the imaginary parts.
    pub fn dot_imag(&self, other: &QRat) -> Rat {
        &self.b * &other.b + &self.c * &other.c + &self.d * &other.d
    }

    pub fn components(&self) -> [&Rat; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

impl Scalar for QRat {
    fn zero() -> QRat {
        QRat::default()
    }
    fn one() -> QRat {
        QRat::from_ints(1, 0, 0, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
    fn add_ref(&self, o: &QRat) -> QRat {
        QRat::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c, &self.d + &o.d)
    }
    fn sub_ref(&self, o: &QRat) -> QRat {
        QRat::new(&self.a - &o.a, &self.b - &o.b, &self.c - &o.c, &self.d - &o.d)
    }
    fn mul_ref(&self, o: &QRat) -> QRat {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        QRat::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
    fn neg_ref(&self) -> QRat {
        QRat::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }
    fn inv(&self) -> Option<QRat> {
        let n = self.norm_sqr().inv()?;
        Some(self.conj().scale(&n))
    }
    fn from_rat(r: Rat) -> QRat {
        QRat::new(r, Rat::zero(), Rat::zero(), Rat::zero())
    }
}

impl_ring_ops!(QRat);

impl From<CRat> for QRat {
    fn from(z: CRat) -> QRat {
        QRat::from_complex(&z)
    }
}

impl From<Rat> for QRat {
    fn from(r: Rat) -> QRat {
        QRat::from_rat(r)
    }
}

impl std::str::FromStr for QRat {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<QRat> {
        super::parse_literal(s).map_err(|(column, message)| crate::Error::Parse {
            line: 1,
            column,
            message,
        })
    }
}

impl fmt::Display for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            &[(&self.a, ""), (&self.b, "i"), (&self.c, "j"), (&self.d, "k")],
        )
    }
}

impl fmt::Debug for QRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
