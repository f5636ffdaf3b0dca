//! Exact scalars: rationals, Gaussian rationals and rational quaternions,
//! plus the involutive automorphisms of the quaternions.

mod automorphism;
mod crat;
mod literal;
mod qrat;
mod rat;

pub use automorphism::{
    apply_automorphism, apply_hat, reduce_automorphism, AutomorphismSpec, Frame, Sigma,
};
pub use crat::CRat;
pub(crate) use literal::parse_literal;
pub use qrat::QRat;
pub use rat::Rat;

use std::fmt;

/// Ring operations shared by the three scalar types.
///
/// Matrices are generic over this trait. Multiplication is not assumed to be
/// commutative; `inv` returns a two-sided inverse.
pub trait Scalar: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_rat(r: Rat) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// Implements the `std::ops` arithmetic traits in terms of the `Scalar`
/// methods, for every owned/borrowed combination.
macro_rules! impl_ring_ops {
    ($t:ty) => {
        impl_ring_ops!(@bin $t, Add, add, add_ref, AddAssign, add_assign);
        impl_ring_ops!(@bin $t, Sub, sub, sub_ref, SubAssign, sub_assign);
        impl_ring_ops!(@bin $t, Mul, mul, mul_ref, MulAssign, mul_assign);

        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::scalar::Scalar::neg_ref(&self)
            }
        }
        impl std::ops::Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::scalar::Scalar::neg_ref(self)
            }
        }
        impl std::iter::Sum for $t {
            fn sum<I: Iterator<Item = $t>>(iter: I) -> $t {
                iter.fold(<$t as $crate::scalar::Scalar>::zero(), |acc, x| acc + x)
            }
        }
    };
    (@bin $t:ty, $tr:ident, $m:ident, $f:ident, $atr:ident, $am:ident) => {
        impl std::ops::$tr<&$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                $crate::scalar::Scalar::$f(self, rhs)
            }
        }
        impl std::ops::$tr<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                $crate::scalar::Scalar::$f(self, &rhs)
            }
        }
        impl std::ops::$tr<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                $crate::scalar::Scalar::$f(&self, rhs)
            }
        }
        impl std::ops::$tr<$t> for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                $crate::scalar::Scalar::$f(&self, &rhs)
            }
        }
        impl std::ops::$atr<&$t> for $t {
            fn $am(&mut self, rhs: &$t) {
                *self = $crate::scalar::Scalar::$f(&*self, rhs);
            }
        }
        impl std::ops::$atr<$t> for $t {
            fn $am(&mut self, rhs: $t) {
                *self = $crate::scalar::Scalar::$f(&*self, &rhs);
            }
        }
    };
}
pub(crate) use impl_ring_ops;

/// Writes `a + b*u1 + c*u2 + ...` as a literal the parser accepts: zero
/// terms are skipped, unit coefficients on letters are elided.
pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(&Rat, &str)]) -> fmt::Result {
    let mut wrote = false;
    for (coef, unit) in terms {
        if coef.is_zero() {
            continue;
        }
        let negative = coef.is_negative();
        if negative {
            f.write_str("-")?;
        } else if wrote {
            f.write_str("+")?;
        }
        let magnitude = coef.abs();
        if unit.is_empty() || !magnitude.is_one() {
            write!(f, "{magnitude}")?;
        }
        f.write_str(unit)?;
        wrote = true;
    }
    if !wrote {
        f.write_str("0")?;
    }
    Ok(())
}
