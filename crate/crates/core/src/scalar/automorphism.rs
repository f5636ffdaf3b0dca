//! Involutive automorphisms of the quaternions.
//!
//! Every automorphism is `q -> t^{-1} q t` for a nonzero `t`; it is
//! involutive exactly when `t^2` is real, i.e. `t` is real (identity) or
//! pure. A pure `t` is brought to the standard form `h -> -i h i` by choosing
//! a new orthonormal triple of imaginary units whose first member is
//! `t / |t|`.

use std::fmt;

use super::{QRat, Rat, Scalar};
use crate::{Error, Result};

/// The two normal forms of an involutive automorphism: the identity and
/// `h -> i^{-1} h i = a + bi - cj - dk`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sigma {
    One,
    I,
}

impl Sigma {
    /// `sigma^2` as an integer: `+1` or `-1`.
    pub fn square(self) -> i64 {
        match self {
            Sigma::One => 1,
            Sigma::I => -1,
        }
    }

    pub fn as_quat(self) -> QRat {
        match self {
            Sigma::One => QRat::one(),
            Sigma::I => QRat::i(),
        }
    }
}

impl fmt::Display for Sigma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sigma::One => "1",
            Sigma::I => "i",
        })
    }
}

/// An involutive automorphism given by the quaternion it conjugates with.
/// Positive rescaling of the unit does not change the automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum AutomorphismSpec {
    Identity,
    ByUnit(QRat),
}

/// Orthogonal imaginary units with `i1^2 = j1^2 = k1^2 = -1` and
/// `i1 j1 = k1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    pub i1: QRat,
    pub j1: QRat,
    pub k1: QRat,
}

impl Frame {
    pub fn standard() -> Frame {
        Frame {
            i1: QRat::i(),
            j1: QRat::j(),
            k1: QRat::k(),
        }
    }

    pub fn is_standard(&self) -> bool {
        *self == Frame::standard()
    }

    /// Checks purity, the squares, `i1 j1 = k1` and pairwise orthogonality.
    pub fn is_valid(&self) -> bool {
        let units = [&self.i1, &self.j1, &self.k1];
        let minus_one = -QRat::one();
        units.iter().all(|u| u.is_pure() && (*u * *u) == minus_one)
            && &self.i1 * &self.j1 == self.k1
            && self.i1.dot_imag(&self.j1).is_zero()
            && self.i1.dot_imag(&self.k1).is_zero()
            && self.j1.dot_imag(&self.k1).is_zero()
    }

    /// Coordinates of `h` in this frame, written as a standard quaternion:
    /// `h = a + b i1 + c j1 + d k1` maps to `a + b i + c j + d k`.
    ///
    /// This is a ring isomorphism; it carries `t^{-1} h t` (with
    /// `t = i1`) to `i^{-1} h' i`.
    pub fn to_frame(&self, h: &QRat) -> QRat {
        QRat::new(
            h.a.clone(),
            h.dot_imag(&self.i1),
            h.dot_imag(&self.j1),
            h.dot_imag(&self.k1),
        )
    }

    /// Inverse of [`Frame::to_frame`].
    pub fn from_frame(&self, h: &QRat) -> QRat {
        QRat::from_rat(h.a.clone())
            + self.i1.scale(&h.b)
            + self.j1.scale(&h.c)
            + self.k1.scale(&h.d)
    }
}

impl fmt::Display for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "i1={} j1={} k1={}", self.i1, self.j1, self.k1)
    }
}

/// `h -> h^sigma` for `sigma` in {1, i}: `(a, b, c, d) -> (a, b, -c, -d)`
/// in the second case.
pub fn apply_hat(x: &QRat, sigma: Sigma) -> QRat {
    match sigma {
        Sigma::One => x.clone(),
        Sigma::I => QRat::new(x.a.clone(), x.b.clone(), -&x.c, -&x.d),
    }
}

/// `x -> t^{-1} x t`. Panics if the unit is zero.
pub fn apply_automorphism(x: &QRat, spec: &AutomorphismSpec) -> QRat {
    match spec {
        AutomorphismSpec::Identity => x.clone(),
        AutomorphismSpec::ByUnit(t) => {
            let t_inv = t.inv().expect("automorphism unit must be nonzero");
            t_inv * x * t
        }
    }
}

/// Reduces an involutive automorphism to `Sigma` plus the frame in which it
/// reads `h -> i^{-1} h i`.
pub fn reduce_automorphism(spec: &AutomorphismSpec) -> Result<(Sigma, Frame)> {
    let tau = match spec {
        AutomorphismSpec::Identity => return Ok((Sigma::One, Frame::standard())),
        AutomorphismSpec::ByUnit(t) => t,
    };
    if tau.is_zero() {
        return Err(Error::NotInvolutive("the unit is zero".into()));
    }
    if tau.is_real() {
        return Ok((Sigma::One, Frame::standard()));
    }
    if !tau.is_pure() {
        return Err(Error::NotInvolutive(format!(
            "{tau} squares to a non-real quaternion"
        )));
    }
    let norm = tau
        .norm_sqr()
        .sqrt()
        .ok_or_else(|| Error::ExactFrameUnavailable(tau.to_string()))?;
    let i1 = tau.scale(&norm.inv().expect("nonzero norm"));
    if i1 == QRat::i() {
        return Ok((Sigma::I, Frame::standard()));
    }
    let j1 = perpendicular_unit(&i1);
    let k1 = &i1 * &j1;
    let frame = Frame { i1, j1, k1 };
    debug_assert!(frame.is_valid());
    Ok((Sigma::I, frame))
}

/// A rational unit pure quaternion orthogonal to the unit `u`.
///
/// Tries `e x u` for the standard units `e` in order; when none of those has
/// a rational length, rotates `j` by the conjugation that sends `i` to `u`.
fn perpendicular_unit(u: &QRat) -> QRat {
    for e in [QRat::i(), QRat::j(), QRat::k()] {
        // e x u is the vector part of e*u for pure e, u.
        let mut w = &e * u;
        w.a = Rat::zero();
        if w.is_zero() {
            continue;
        }
        if let Some(len) = w.norm_sqr().sqrt() {
            return w.scale(&len.inv().expect("nonzero"));
        }
    }
    // q i q^{-1} = u for q = u + i, since u (u + i) = -1 + u i = (u + i) i.
    let q = if *u == -QRat::i() {
        QRat::j()
    } else {
        u + QRat::i()
    };
    let q_inv = q.inv().expect("nonzero");
    q * QRat::j() * q_inv
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(s: &str) -> QRat {
        s.parse().unwrap()
    }

    fn small_rat() -> impl Strategy<Value = Rat> {
        (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rat::new(n, d))
    }

    fn quat() -> impl Strategy<Value = QRat> {
        (small_rat(), small_rat(), small_rat(), small_rat())
            .prop_map(|(a, b, c, d)| QRat::new(a, b, c, d))
    }

    #[test]
    fn hat_examples() {
        assert_eq!(apply_hat(&QRat::j(), Sigma::I), -QRat::j());
        assert_eq!(apply_hat(&q("3+5i"), Sigma::I), q("3+5i"));
        assert_eq!(apply_hat(&QRat::k(), Sigma::One), QRat::k());
    }

    #[test]
    fn automorphism_examples() {
        let by_j = AutomorphismSpec::ByUnit(QRat::j());
        assert_eq!(apply_automorphism(&QRat::k(), &by_j), -QRat::k());
        // the j-automorphism is a - bi + cj - dk
        assert_eq!(apply_automorphism(&q("1+2i+3j+4k"), &by_j), q("1-2i+3j-4k"));
        let by_i = AutomorphismSpec::ByUnit(QRat::i());
        assert_eq!(apply_automorphism(&QRat::i(), &by_i), QRat::i());
        // (3i+4j)^{-1} j (3i+4j) = -(3k - 4)(3i + 4j)/25 = (24i + 7j)/25,
        // the half-turn of j about the axis (3, 4, 0)/5
        let t = AutomorphismSpec::ByUnit(q("3i+4j"));
        assert_eq!(apply_automorphism(&QRat::j(), &t), q("24/25i+7/25j"));
    }

    #[test]
    fn reduce_identity_and_j() {
        assert_eq!(
            reduce_automorphism(&AutomorphismSpec::Identity).unwrap(),
            (Sigma::One, Frame::standard())
        );
        let (s, f) = reduce_automorphism(&AutomorphismSpec::ByUnit(QRat::j())).unwrap();
        assert_eq!(s, Sigma::I);
        assert_eq!(f, Frame { i1: QRat::j(), j1: QRat::k(), k1: QRat::i() });
        assert!(f.is_valid());
    }

    #[test]
    fn reduce_scaled_unit() {
        let (s, f) = reduce_automorphism(&AutomorphismSpec::ByUnit(q("3/5i+4/5j"))).unwrap();
        assert_eq!(s, Sigma::I);
        assert_eq!(f.i1, q("3/5i+4/5j"));
        assert!(f.is_valid());
        let (_, f2) = reduce_automorphism(&AutomorphismSpec::ByUnit(q("6i+8j"))).unwrap();
        assert_eq!(f, f2);
        let (_, f3) = reduce_automorphism(&AutomorphismSpec::ByUnit(q("5i"))).unwrap();
        assert!(f3.is_standard());
    }

    #[test]
    fn reduce_uses_rotation_when_crosses_are_irrational() {
        // every e x t has irrational length, yet a rational frame exists
        let (_, f) = reduce_automorphism(&AutomorphismSpec::ByUnit(q("i+2j+2k"))).unwrap();
        assert_eq!(f.i1, q("1/3i+2/3j+2/3k"));
        assert!(f.is_valid());
        let (_, f) = reduce_automorphism(&AutomorphismSpec::ByUnit(q("-i"))).unwrap();
        assert!(f.is_valid());
    }

    #[test]
    fn reduce_errors() {
        assert!(matches!(
            reduce_automorphism(&AutomorphismSpec::ByUnit(q("i+j"))),
            Err(Error::ExactFrameUnavailable(_))
        ));
        assert!(matches!(
            reduce_automorphism(&AutomorphismSpec::ByUnit(q("1+i"))),
            Err(Error::NotInvolutive(_))
        ));
        assert!(matches!(
            reduce_automorphism(&AutomorphismSpec::ByUnit(QRat::zero())),
            Err(Error::NotInvolutive(_))
        ));
        assert_eq!(
            reduce_automorphism(&AutomorphismSpec::ByUnit(q("-2"))).unwrap().0,
            Sigma::One
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn hat_is_ring_automorphism(x in quat(), y in quat()) {
            let h = |v: &QRat| apply_hat(v, Sigma::I);
            prop_assert_eq!(h(&(&x * &y)), h(&x) * h(&y));
            prop_assert_eq!(h(&(&x + &y)), h(&x) + h(&y));
            prop_assert_eq!(h(&h(&x)), x.clone());
            prop_assert_eq!(h(&x), -(QRat::i() * &x * QRat::i()));
        }

        #[test]
        fn complex_split_law(x in quat()) {
            let (u, v) = x.split();
            let expected = QRat::from(u) - QRat::from(v) * QRat::j();
            prop_assert_eq!(apply_hat(&x, Sigma::I), expected);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn frame_transport_matches_automorphism(
            idx in 0usize..7,
            scale in 1i64..5,
            h in quat(),
        ) {
            // directions with rational length
            let dirs = [q("i"), q("3i+4j"), q("2i-j+2k"), q("-6i+2j+3k"), q("j"), q("4j-3k"), q("-k")];
            let tau = dirs[idx].scale(&Rat::from_int(scale));
            let spec = AutomorphismSpec::ByUnit(tau);
            let (sigma, frame) = reduce_automorphism(&spec).unwrap();
            prop_assert!(frame.is_valid());
            let via_frame = frame.from_frame(&apply_hat(&frame.to_frame(&h), sigma));
            prop_assert_eq!(&via_frame, &apply_automorphism(&h, &spec));
            let twice = apply_automorphism(&apply_automorphism(&h, &spec), &spec);
            prop_assert_eq!(twice, h.clone());
            prop_assert_eq!(frame.from_frame(&frame.to_frame(&h)), h);
        }
    }
}
