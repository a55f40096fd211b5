//! Places of `Q` and Hilbert symbols by the classical closed formulas.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{factorize, Rational};

/// A place of `Q`: an odd prime, the prime 2, or the real place.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    /// The prime 2.
    Two,
    /// An odd prime.
    Odd(u64),
    /// The archimedean place.
    Infinity,
}

impl Place {
    /// The place of a prime `p`, which must actually be prime.
    pub fn prime(p: u64) -> Result<Place> {
        if !is_prime(p) {
            return Err(Error::Precondition(format!("{p} is not prime")));
        }
        Ok(if p == 2 { Place::Two } else { Place::Odd(p) })
    }

    /// The underlying prime, `None` at infinity.
    pub fn prime_number(&self) -> Option<u64> {
        match self {
            Place::Two => Some(2),
            Place::Odd(p) => Some(*p),
            Place::Infinity => None,
        }
    }

    /// Parses `inf`, `2`, or an odd prime.
    pub fn parse(s: &str) -> Result<Place> {
        match s.trim() {
            "inf" | "infinity" | "oo" => Ok(Place::Infinity),
            t => {
                let p: u64 = t.parse().map_err(|_| Error::Parse(format!("not a place: {s:?}")))?;
                Place::prime(p)
            }
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Two => write!(f, "2"),
            Place::Odd(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Deterministic primality by trial division, for the small primes used here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// All primes up to and including `n`.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    (2..=n).filter(|&p| is_prime(p)).collect()
}

/// Integer representative of the square class of a nonzero rational.
fn integral_rep(r: &Rational) -> BigInt {
    r.numer() * r.denom()
}

/// Splits `n = p^v * u` with `p` not dividing `u`.
fn split_valuation(n: &BigInt, p: u64) -> (u32, BigInt) {
    let p = BigInt::from(p);
    let mut u = n.clone();
    let mut v = 0;
    while (&u % &p).is_zero() {
        u /= &p;
        v += 1;
    }
    (v, u)
}

/// Legendre symbol `(u / p)` for an odd prime `p` not dividing `u`.
fn legendre(u: &BigInt, p: u64) -> i8 {
    let pb = BigInt::from(p);
    let r = u.mod_floor(&pb).modpow(&BigInt::from((p - 1) / 2), &pb);
    if r.is_one() {
        1
    } else {
        -1
    }
}

/// The Hilbert symbol `(a, b)_v` of two nonzero rationals.
///
/// Odd primes use the valuation and Legendre symbol formula, the prime 2 the
/// formula with the exponents `eps(u) = (u-1)/2` and `omega(u) = (u^2-1)/8`,
/// and the real place the signs.
pub fn hilbert_symbol(a: &Rational, b: &Rational, v: Place) -> i8 {
    assert!(!a.is_zero() && !b.is_zero(), "Hilbert symbol of zero");
    let a = integral_rep(a);
    let b = integral_rep(b);
    match v {
        Place::Infinity => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Odd(p) => {
            let (alpha, u) = split_valuation(&a, p);
            let (beta, w) = split_valuation(&b, p);
            let mut s: i8 = 1;
            if (alpha * beta) % 2 == 1 && (p % 4) == 3 {
                s = -s;
            }
            if beta % 2 == 1 {
                s *= legendre(&u, p);
            }
            if alpha % 2 == 1 {
                s *= legendre(&w, p);
            }
            s
        }
        Place::Two => {
            let (alpha, u) = split_valuation(&a, 2);
            let (beta, w) = split_valuation(&b, 2);
            let m8 = |x: &BigInt| x.mod_floor(&BigInt::from(8)).to_u8().expect("residue mod 8");
            let (u8_, w8) = (m8(&u), m8(&w));
            let eps = |r: u8| u32::from(r % 4 == 3);
            let omega = |r: u8| u32::from(r == 3 || r == 5);
            let e = eps(u8_) * eps(w8) + alpha * omega(w8) + beta * omega(u8_);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
    }
}

/// The places where a Hilbert symbol of products of `values` can be
/// nontrivial: 2, infinity, and every odd prime dividing a numerator or
/// denominator. Sorted as `2 < odd primes < infinity`.
pub fn support_places(values: &[Rational]) -> Vec<Place> {
    let mut primes = std::collections::BTreeSet::new();
    for v in values {
        if v.is_zero() {
            continue;
        }
        for part in [v.numer(), v.denom()] {
            for (p, _) in factorize(part) {
                if let Some(p) = p.to_u64() {
                    if p > 2 {
                        primes.insert(p);
                    }
                }
            }
        }
    }
    let mut out = vec![Place::Two];
    out.extend(primes.into_iter().map(Place::Odd));
    out.push(Place::Infinity);
    out
}

/// Product of `(a, b)_v` over all places; Hilbert reciprocity says it is `+1`.
pub fn hilbert_product(a: &Rational, b: &Rational) -> i8 {
    support_places(&[a.clone(), b.clone()]).into_iter().map(|v| hilbert_symbol(a, b, v)).product()
}

/// Whether a nonzero rational `c` is a norm from `Q(sqrt d)`, decided by the
/// Hasse norm theorem: `(c, d)_v = +1` at every place.
pub fn is_norm_from_quadratic(c: &Rational, d: i64) -> bool {
    let dr = Rational::from_integer(BigInt::from(d));
    support_places(&[c.clone(), dr.clone()]).into_iter().all(|v| hilbert_symbol(c, &dr, v) == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    #[test]
    fn textbook_values() {
        assert_eq!(hilbert_symbol(&int(-1), &int(-1), Place::Infinity), -1);
        assert_eq!(hilbert_symbol(&int(-1), &int(-1), Place::Two), -1);
        assert_eq!(hilbert_symbol(&int(-1), &int(-1), Place::Odd(3)), 1);
        assert_eq!(hilbert_symbol(&int(2), &int(3), Place::Odd(3)), -1);
        assert_eq!(hilbert_symbol(&int(2), &int(3), Place::Two), -1);
        assert_eq!(hilbert_symbol(&int(3), &int(3), Place::Odd(3)), -1);
        assert_eq!(hilbert_symbol(&int(3), &int(3), Place::Two), -1);
        assert_eq!(hilbert_symbol(&int(5), &int(5), Place::Odd(5)), 1);
        for v in [Place::Two, Place::Odd(7), Place::Infinity] {
            assert_eq!(hilbert_symbol(&int(1), &int(-7), v), 1);
        }
    }

    #[test]
    fn rational_arguments_use_square_classes() {
        assert_eq!(
            hilbert_symbol(&rat(3, 4), &rat(1, 3), Place::Odd(3)),
            hilbert_symbol(&int(3), &int(3), Place::Odd(3))
        );
    }

    #[test]
    fn reciprocity_on_small_pairs() {
        for a in -12i64..=12 {
            for b in -12i64..=12 {
                if a != 0 && b != 0 {
                    assert_eq!(hilbert_product(&int(a), &int(b)), 1, "({a},{b})");
                }
            }
        }
    }

    #[test]
    fn norms_from_quadratic_fields() {
        assert!(is_norm_from_quadratic(&int(4), 3));
        assert!(is_norm_from_quadratic(&int(-2), 3)); // 1 - 3 = -2
        assert!(!is_norm_from_quadratic(&int(-1), 3));
        assert!(is_norm_from_quadratic(&int(-1), 2)); // 1 - 2 = -1
    }

    #[test]
    fn places_parse_and_print() {
        assert_eq!(Place::parse("inf").unwrap(), Place::Infinity);
        assert_eq!(Place::parse("2").unwrap(), Place::Two);
        assert_eq!(Place::parse("7").unwrap().to_string(), "7");
        assert!(Place::parse("9").is_err());
        assert_eq!(primes_up_to(12), vec![2, 3, 5, 7, 11]);
    }
}
