//! Gaussian integers and their factorization, for the rational root test
//! over Q(i).

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: BigInt, im: BigInt) -> GaussInt {
        GaussInt { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> GaussInt {
        GaussInt::new(re.into(), im.into())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> GaussInt {
        GaussInt::new(self.re.clone(), -&self.im)
    }

    pub fn add(&self, o: &GaussInt) -> GaussInt {
        GaussInt::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &GaussInt) -> GaussInt {
        GaussInt::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &GaussInt) -> GaussInt {
        GaussInt::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    /// `self / o` when it is a Gaussian integer.
    pub fn div_exact(&self, o: &GaussInt) -> Option<GaussInt> {
        let n = o.norm();
        if n.is_zero() {
            return None;
        }
        let num = self.mul(&o.conj());
        let (qr, rr) = num.re.div_rem(&n);
        let (qi, ri) = num.im.div_rem(&n);
        (rr.is_zero() && ri.is_zero()).then(|| GaussInt::new(qr, qi))
    }

    /// Euclidean remainder with the quotient rounded to the nearest lattice
    /// point, so `N(r) <= N(o) / 2`.
    fn rem_euclid(&self, o: &GaussInt) -> GaussInt {
        let n = o.norm();
        let num = self.mul(&o.conj());
        let round = |x: &BigInt| -> BigInt {
            let twice: BigInt = x * 2 + &n;
            twice.div_floor(&(&n * 2))
        };
        let q = GaussInt::new(round(&num.re), round(&num.im));
        self.sub(&q.mul(o))
    }

    pub fn gcd(&self, o: &GaussInt) -> GaussInt {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem_euclid(&b);
            a = b;
            b = r;
        }
        a
    }
}

const SMALL_PRIME_LIMIT: u32 = 20_000;

/// Prime factorization of a positive integer.
pub(crate) fn factor_integer(n: &BigUint) -> Vec<(BigUint, u32)> {
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    let mut rest = n.clone();
    if rest.is_zero() {
        return out;
    }
    let push = |p: BigUint, out: &mut Vec<(BigUint, u32)>| match out.iter_mut().find(|(q, _)| *q == p) {
        Some((_, e)) => *e += 1,
        None => out.push((p, 1)),
    };
    let mut d = 2u32;
    while d <= SMALL_PRIME_LIMIT {
        let bd = BigUint::from(d);
        if &bd * &bd > rest {
            break;
        }
        while (&rest % &bd).is_zero() {
            rest /= &bd;
            push(bd.clone(), &mut out);
        }
        d += if d == 2 { 1 } else { 2 };
    }
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_probable_prime(&m) {
            push(m, &mut out);
            continue;
        }
        let f = pollard_brent(&m);
        stack.push(&m / &f);
        stack.push(f);
    }
    out.sort();
    out
}

fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let bp = BigUint::from(p);
        if *n == bp {
            return true;
        }
        if (n % &bp).is_zero() {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of an odd composite.
fn pollard_brent(n: &BigUint) -> BigUint {
    let mut c = BigUint::one();
    loop {
        let f = |x: &BigUint| (x * x + &c) % n;
        let (mut x, mut y) = (BigUint::from(2u32), BigUint::from(2u32));
        let mut d = BigUint::one();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
        }
        if d != *n {
            return d;
        }
        c += 1u32;
    }
}

/// Square root of -1 modulo a prime `p = 1 (mod 4)`.
fn sqrt_minus_one(p: &BigUint) -> BigUint {
    let exp = (p - 1u32) >> 2;
    let minus_one = p - 1u32;
    let mut c = BigUint::from(2u32);
    loop {
        let x = c.modpow(&exp, p);
        if (&x * &x) % p == minus_one {
            return x;
        }
        c += 1u32;
    }
}

/// Gaussian prime factors of `g` (nonzero) with exponents; the product of
/// the prime powers equals `g` up to a unit.
pub(crate) fn factor_gaussian(g: &GaussInt) -> Vec<(GaussInt, u32)> {
    let norm = g.norm().to_biguint().expect("norm is nonnegative");
    let mut rest = g.clone();
    let mut out = Vec::new();
    for (p, _) in factor_integer(&norm) {
        let pi = BigInt::from_biguint(Sign::Plus, p.clone());
        let primes: Vec<GaussInt> = if p == BigUint::from(2u32) {
            vec![GaussInt::from_ints(1, 1)]
        } else if (&p % 4u32).to_u32() == Some(3) {
            vec![GaussInt::new(pi, BigInt::zero())]
        } else {
            let x = BigInt::from_biguint(Sign::Plus, sqrt_minus_one(&p));
            let pi1 = GaussInt::new(pi.clone(), BigInt::zero()).gcd(&GaussInt::new(x, BigInt::one()));
            let pi2 = pi1.conj();
            vec![pi1, pi2]
        };
        for prime in primes {
            let mut e = 0;
            while let Some(q) = rest.div_exact(&prime) {
                rest = q;
                e += 1;
            }
            if e > 0 {
                out.push((prime, e));
            }
        }
    }
    debug_assert!(rest.norm().is_one());
    out
}

/// Every Gaussian integer dividing `g` (nonzero), each associate listed
/// once, in order of increasing norm.
pub(crate) fn gaussian_divisors(g: &GaussInt) -> Vec<GaussInt> {
    let mut divs = vec![GaussInt::from_ints(1, 0)];
    for (prime, e) in factor_gaussian(g) {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut cur = d.clone();
            next.push(cur.clone());
            for _ in 0..e {
                cur = cur.mul(&prime);
                next.push(cur.clone());
            }
        }
        divs = next;
    }
    let units = [(1, 0), (0, 1), (-1, 0), (0, -1)].map(|(a, b)| GaussInt::from_ints(a, b));
    let mut all: Vec<GaussInt> = divs
        .iter()
        .flat_map(|d| units.iter().map(move |u| d.mul(u)))
        .collect();
    all.sort_by(|a, b| {
        a.norm()
            .cmp(&b.norm())
            .then_with(|| a.re.cmp(&b.re))
            .then_with(|| a.im.cmp(&b.im))
    });
    all
}

/// Smallest positive `l` with `d | l^k`.
pub(crate) fn min_power_multiple(d: &BigUint, k: u32) -> BigUint {
    factor_integer(d)
        .into_iter()
        .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(e.div_ceil(k)))
}

#[cfg(test)]
mod tests {
    fn is_unit(g: &GaussInt) -> bool {
        g.norm().is_one()
    }

    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn integer_factoring() {
        assert_eq!(factor_integer(&big(360)), vec![(big(2), 3), (big(3), 2), (big(5), 1)]);
        assert_eq!(factor_integer(&big(1)), vec![]);
        // two primes above the trial-division bound
        let p = 1_000_003u64;
        let q = 998_244_353u64;
        assert_eq!(factor_integer(&(big(p) * big(q) * big(q))), vec![(big(p), 1), (big(q), 2)]);
    }

    #[test]
    fn gaussian_factoring_reassembles() {
        for (a, b) in [(5, 0), (3, 4), (2, 0), (7, 1), (-6, 9), (0, 13), (30, -21)] {
            let g = GaussInt::from_ints(a, b);
            let prod = factor_gaussian(&g).iter().fold(GaussInt::from_ints(1, 0), |acc, (p, e)| {
                (0..*e).fold(acc, |acc, _| acc.mul(p))
            });
            let unit = g.div_exact(&prod).expect("product divides g");
            assert!(is_unit(&unit), "{a}+{b}i");
        }
    }

    #[test]
    fn divisor_enumeration_is_complete() {
        // brute force over a box containing every divisor of 6+8i (norm 100)
        let g = GaussInt::from_ints(6, 8);
        let divs = gaussian_divisors(&g);
        let mut brute = Vec::new();
        for a in -10i64..=10 {
            for b in -10i64..=10 {
                let d = GaussInt::from_ints(a, b);
                if !d.is_zero() && g.div_exact(&d).is_some() {
                    brute.push(d);
                }
            }
        }
        assert_eq!(divs.len(), brute.len());
        assert!(brute.iter().all(|d| divs.contains(d)));
    }

    #[test]
    fn power_multiple() {
        assert_eq!(min_power_multiple(&big(8), 2), big(4));
        assert_eq!(min_power_multiple(&big(12), 3), big(6));
        assert_eq!(min_power_multiple(&big(1), 5), big(1));
    }
}
