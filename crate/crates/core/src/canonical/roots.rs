//! Exact roots in Q(i) of polynomials with Gaussian rational coefficients.
//!
//! The squarefree part `s` of degree `d` is rescaled by `y = L x`, with `L`
//! the least integer making `L^d s(y / L)` a monic polynomial over Z[i].
//! Its roots in Q(i) are then Gaussian integers dividing the constant term,
//! which are enumerated from the factorization of that constant.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::One;

use super::gaussint::{gaussian_divisors, min_power_multiple, GaussInt};
use super::Poly;
use crate::scalar::{CRat, Rat, Scalar};
use crate::{Error, Result};

/// Roots of `p` in Q(i) with multiplicities, ordered by (re, im).
///
/// Fails with [`Error::EigenvaluesNotGaussianRational`] when a factor
/// without roots in Q(i) remains; the error names that factor.
pub fn gaussian_rational_roots(p: &Poly) -> Result<Vec<(CRat, usize)>> {
    let p = p.monic();
    if p.degree() == 0 {
        return Ok(Vec::new());
    }
    let zero_mult = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let nonzero_part = Poly::new(p.coeffs()[zero_mult..].to_vec());

    let mut roots: Vec<CRat> = Vec::new();
    if zero_mult > 0 {
        roots.push(CRat::zero());
    }
    let s = nonzero_part.squarefree_part();
    if s.degree() > 0 {
        let (scale, mut q) = integral_rescale(&s);
        let l = Rat::from(BigInt::from(scale.clone()));
        let l_inv = l.inv().expect("positive scale");
        let candidates = gaussian_divisors(&q[0]);
        for cand in candidates {
            if q.len() <= 1 {
                break;
            }
            if let Some(deflated) = deflate(&q, &cand) {
                q = deflated;
                roots.push(CRat::new(
                    Rat::from(cand.re.clone()) * &l_inv,
                    Rat::from(cand.im.clone()) * &l_inv,
                ));
            }
        }
        if q.len() > 1 {
            return Err(Error::EigenvaluesNotGaussianRational {
                residual: unscale(&q, &l).to_string(),
            });
        }
    }

    let mut out: Vec<(CRat, usize)> = roots
        .into_iter()
        .map(|r| {
            let lin = Poly::linear(&r);
            let mut rest = p.clone();
            let mut mult = 0;
            loop {
                let (quot, rem) = rest.div_rem(&lin);
                if !rem.is_zero() {
                    break;
                }
                rest = quot;
                mult += 1;
            }
            (r, mult)
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp_lex(&b.0));
    Ok(out)
}

/// `(L, coefficients of L^d s(y / L))` for monic `s` of degree `d`, with the
/// coefficients in increasing degree.
fn integral_rescale(s: &Poly) -> (BigUint, Vec<GaussInt>) {
    let d = s.degree();
    let mut scale = BigUint::one();
    for (k, c) in s.coeffs().iter().enumerate().take(d) {
        let den = c.re.denom().lcm(c.im.denom());
        let den = den.to_biguint().expect("positive denominator");
        let need = min_power_multiple(&den, (d - k) as u32);
        scale = scale.lcm(&need);
    }
    let l = BigInt::from(scale.clone());
    let coeffs = s
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| {
            let f = Rat::from(num_traits::pow(l.clone(), d - k));
            let scaled = c.scale(&f);
            debug_assert!(scaled.re.is_integer() && scaled.im.is_integer());
            GaussInt::new(scaled.re.numer().clone(), scaled.im.numer().clone())
        })
        .collect();
    (scale, coeffs)
}

/// Divides the monic `q` by `y - r` if `r` is a root.
fn deflate(q: &[GaussInt], r: &GaussInt) -> Option<Vec<GaussInt>> {
    let n = q.len() - 1;
    let mut quot = vec![GaussInt::from_ints(0, 0); n];
    let mut acc = q[n].clone();
    for k in (0..n).rev() {
        quot[k] = acc.clone();
        acc = acc.mul(r).add(&q[k]);
    }
    acc.is_zero().then_some(quot)
}

fn unscale(q: &[GaussInt], l: &Rat) -> Poly {
    let d = q.len() - 1;
    let l_inv = l.inv().expect("positive scale");
    Poly::new(
        q.iter()
            .enumerate()
            .map(|(k, g)| {
                let f = pow_rat(&l_inv, d - k);
                CRat::new(Rat::from(g.re.clone()), Rat::from(g.im.clone())).scale(&f)
            })
            .collect(),
    )
}

fn pow_rat(r: &Rat, e: usize) -> Rat {
    (0..e).fold(Rat::one(), |acc, _| acc * r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: i64, im: i64) -> CRat {
        CRat::from_ints(re, im)
    }

    #[test]
    fn unit_circle_pair() {
        let p = Poly::new(vec![c(1, 0), c(0, 0), c(1, 0)]);
        assert_eq!(gaussian_rational_roots(&p).unwrap(), vec![(c(0, -1), 1), (c(0, 1), 1)]);
    }

    #[test]
    fn irrational_roots_are_reported() {
        let p = Poly::new(vec![c(-2, 0), c(0, 0), c(1, 0)]);
        match gaussian_rational_roots(&p) {
            Err(Error::EigenvaluesNotGaussianRational { residual }) => {
                assert_eq!(residual, "x^2 - 2")
            }
            other => panic!("{other:?}"),
        }
        // a rational root is split off; the residual is what remains
        let p = Poly::new(vec![c(-2, 0), c(0, 0), c(1, 0)]).mul(&Poly::linear(&c(3, 0)));
        match gaussian_rational_roots(&p) {
            Err(Error::EigenvaluesNotGaussianRational { residual }) => {
                assert_eq!(residual, "x^2 - 2")
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn repeated_and_rational_roots() {
        // oracle: expand the product, then re-factor
        let expected = vec![(c(1, 1), 2), (c(3, 0), 1)];
        let p = Poly::from_roots(&expected);
        let mut got = gaussian_rational_roots(&p).unwrap();
        got.sort_by(|a, b| b.0.cmp_lex(&a.0));
        let mut want = expected.clone();
        want.sort_by(|a, b| b.0.cmp_lex(&a.0));
        assert_eq!(got, want);

        let half = CRat::new(Rat::new(1, 2), Rat::new(-2, 3));
        let expected = vec![(CRat::zero(), 2), (half.clone(), 3), (c(-5, 4), 1)];
        let got = gaussian_rational_roots(&Poly::from_roots(&expected)).unwrap();
        assert_eq!(got.len(), 3);
        for r in &expected {
            assert!(got.contains(r), "{r:?} missing from {got:?}");
        }
    }

    #[test]
    fn scale_is_minimal() {
        // (x - 1/2)^1 needs L = 2; x^2 - 1/4 also only needs L = 2
        let s = Poly::new(vec![CRat::real(Rat::new(-1, 4)), c(0, 0), c(1, 0)]);
        assert_eq!(integral_rescale(&s).0, BigUint::from(2u32));
    }
}
