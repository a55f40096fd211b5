//! Arbitrary-precision rationals and the integer helpers built on them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// The representation is always reduced with a positive denominator.
pub type Rational = BigRational;

/// The rational `n / d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p` or `p/q` with optional sign.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

/// Whether a nonnegative integer is a perfect square.
pub fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

/// Prime factorization of `|n|` by trial division, primes in increasing order.
///
/// Intended for the small and smooth integers that occur in this crate.
pub fn factorize(n: &BigInt) -> Vec<(BigInt, u32)> {
    let mut m = n.abs();
    let mut out = Vec::new();
    if m.is_zero() {
        return out;
    }
    let mut p = BigInt::from(2u32);
    while &p * &p <= m {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            out.push((p.clone(), e));
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if !m.is_one() {
        out.push((m, 1));
    }
    out
}

/// Writes a nonzero integer as `sign * s^2 * f` with `f` square-free and
/// positive; returns `(sign * f, s)`.
pub fn squarefree_decompose(n: &BigInt) -> (BigInt, BigInt) {
    assert!(!n.is_zero(), "square-free decomposition of zero");
    let mut free = BigInt::one();
    let mut root = BigInt::one();
    for (p, e) in factorize(n) {
        if e % 2 == 1 {
            free *= &p;
        }
        for _ in 0..e / 2 {
            root *= &p;
        }
    }
    if n.is_negative() {
        free = -free;
    }
    (free, root)
}

/// Square class of a nonzero rational as a square-free integer with sign.
pub fn square_class(r: &Rational) -> BigInt {
    assert!(!r.is_zero(), "square class of zero");
    squarefree_decompose(&(r.numer() * r.denom())).0
}

/// Converts a small integer-valued rational to `i64`, if possible.
pub(crate) fn to_i64(r: &Rational) -> Option<i64> {
    if r.is_integer() {
        r.numer().to_i64()
    } else {
        None
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn int_like(&self, n: i64) -> Self {
        int(n)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Field for Rational {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn squarefree_parts() {
        assert_eq!(squarefree_decompose(&BigInt::from(-72)), (BigInt::from(-2), BigInt::from(6)));
        assert_eq!(square_class(&rat(3, 12)), BigInt::from(1));
        assert_eq!(square_class(&rat(-2, 3)), BigInt::from(-6));
    }

    #[test]
    fn factorization_is_complete() {
        let n = BigInt::from(2u64 * 2 * 3 * 97 * 101);
        let f = factorize(&n);
        let back = f.iter().fold(BigInt::one(), |acc, (p, e)| acc * p.pow(*e));
        assert_eq!(back, n);
        assert!(is_square(&BigInt::from(144)));
        assert!(!is_square(&BigInt::from(-4)));
    }
}
