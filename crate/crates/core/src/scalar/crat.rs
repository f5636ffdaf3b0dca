use std::cmp::Ordering;
use std::fmt;

use super::{impl_ring_ops, write_terms, Rat, Scalar};

/// Gaussian rational `re + im*i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CRat {
    pub re: Rat,
    pub im: Rat,
}

impl CRat {
    pub fn new(re: Rat, im: Rat) -> CRat {
        CRat { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> CRat {
        CRat::new(Rat::from_int(re), Rat::from_int(im))
    }

    pub fn real(re: Rat) -> CRat {
        CRat::new(re, Rat::zero())
    }

    pub fn i() -> CRat {
        CRat::from_ints(0, 1)
    }

    pub fn conj(&self) -> CRat {
        CRat::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn div_ref(&self, other: &CRat) -> Option<CRat> {
        other.inv().map(|inv| self * inv)
    }

    pub fn scale(&self, r: &Rat) -> CRat {
        CRat::new(&self.re * r, &self.im * r)
    }

    /// Lexicographic order on (re, im); the order used for sorting Jordan
    /// blocks.
    pub fn cmp_lex(&self, other: &CRat) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
}

impl Scalar for CRat {
    fn zero() -> CRat {
        CRat::default()
    }
    fn one() -> CRat {
        CRat::from_ints(1, 0)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn add_ref(&self, o: &CRat) -> CRat {
        CRat::new(&self.re + &o.re, &self.im + &o.im)
    }
    fn sub_ref(&self, o: &CRat) -> CRat {
        CRat::new(&self.re - &o.re, &self.im - &o.im)
    }
    fn mul_ref(&self, o: &CRat) -> CRat {
        CRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
    fn neg_ref(&self) -> CRat {
        CRat::new(-&self.re, -&self.im)
    }
    fn inv(&self) -> Option<CRat> {
        let n = self.norm_sqr().inv()?;
        Some(CRat::new(&self.re * &n, -(&self.im * &n)))
    }
    fn from_rat(r: Rat) -> CRat {
        CRat::real(r)
    }
}

impl_ring_ops!(CRat);

impl From<Rat> for CRat {
    fn from(r: Rat) -> CRat {
        CRat::real(r)
    }
}

impl fmt::Display for CRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &[(&self.re, ""), (&self.im, "i")])
    }
}

impl fmt::Debug for CRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_is_two_sided() {
        let z = CRat::new(Rat::new(3, 2), Rat::from_int(-2));
        let zi = z.inv().unwrap();
        assert!((&z * &zi).is_one());
        assert!(CRat::zero().inv().is_none());
    }

    #[test]
    fn display_forms() {
        assert_eq!(CRat::from_ints(1, 2).to_string(), "1+2i");
        assert_eq!(CRat::from_ints(0, -1).to_string(), "-i");
        assert_eq!(CRat::from_ints(0, 0).to_string(), "0");
        assert_eq!(CRat::new(Rat::new(1, 2), Rat::new(-3, 4)).to_string(), "1/2-3/4i");
    }
}
