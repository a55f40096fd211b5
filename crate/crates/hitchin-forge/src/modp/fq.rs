//! Prime fields `F_p` and their quadratic extensions `F_p[r]/(r^2 - c)`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactnum::{Field, Ring};
use crate::qforms::is_prime;

/// `F_p` (degree 1) or `F_{p^2} = F_p[r]/(r^2 - c)` for a non-residue `c` (degree 2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fq {
    p: u32,
    nr: u32,
    degree: u8,
}

/// Largest prime accepted, so that products of two residues fit comfortably in `u64`.
const MAX_P: u32 = 1 << 15;

fn is_square_mod(x: u32, p: u32) -> bool {
    let x = x % p;
    x == 0 || (0..p).any(|y| (u64::from(y) * u64::from(y)) % u64::from(p) == u64::from(x))
}

impl Fq {
    /// The prime field `F_p`.
    pub fn prime(p: u32) -> Result<Fq> {
        if !is_prime(u64::from(p)) || p >= MAX_P {
            return Err(Error::Precondition(format!("{p} is not a prime below {MAX_P}")));
        }
        Ok(Fq { p, nr: 0, degree: 1 })
    }

    /// `F_{p^2}` with `r^2` equal to the smallest non-residue modulo an odd prime `p`.
    pub fn quadratic(p: u32) -> Result<Fq> {
        let base = Fq::prime(p)?;
        if p == 2 {
            return Err(Error::Precondition("quadratic extensions are built for odd p".into()));
        }
        let nr = (2..p).find(|&c| !is_square_mod(c, p)).expect("odd primes have non-residues");
        Ok(Fq { nr, degree: 2, ..base })
    }

    /// `F_{p^2}` with `r^2 = c` for a given non-residue `c`.
    pub fn quadratic_with(p: u32, c: i64) -> Result<Fq> {
        let base = Fq::prime(p)?;
        let c = c.rem_euclid(i64::from(p)) as u32;
        if p == 2 || is_square_mod(c, p) {
            return Err(Error::Precondition(format!("{c} is a square modulo {p}")));
        }
        Ok(Fq { nr: c, degree: 2, ..base })
    }

    /// The characteristic.
    pub fn p(&self) -> u32 {
        self.p
    }

    /// 1 or 2.
    pub fn degree(&self) -> u8 {
        self.degree
    }

    /// The number of elements.
    pub fn order(&self) -> u32 {
        self.p.pow(u32::from(self.degree))
    }

    /// `r^2` for degree 2 (zero for prime fields).
    pub fn nonresidue(&self) -> u32 {
        self.nr
    }

    /// The prime subfield.
    pub fn base(&self) -> Fq {
        Fq { p: self.p, nr: 0, degree: 1 }
    }

    /// `a + b r` reduced modulo `p`; `b` must vanish for prime fields.
    pub fn elem(&self, a: i64, b: i64) -> FqElem {
        let p = i64::from(self.p);
        let b = if self.degree == 1 { 0 } else { b.rem_euclid(p) as u32 };
        FqElem { fq: *self, a: a.rem_euclid(p) as u32, b }
    }

    /// The image of an integer.
    pub fn int(&self, a: i64) -> FqElem {
        self.elem(a, 0)
    }

    /// The generator `r` of a quadratic extension.
    pub fn r(&self) -> Result<FqElem> {
        if self.degree != 2 {
            return Err(Error::Precondition("prime fields have no generator r".into()));
        }
        Ok(self.elem(0, 1))
    }

    /// Every element, ordered by [`Fq::code`].
    pub fn elements(&self) -> Vec<FqElem> {
        (0..self.order()).map(|c| self.from_code(c)).collect()
    }

    /// `a + p b`, a bijection onto `0..q`.
    pub fn code(&self, x: &FqElem) -> u32 {
        x.a + self.p * x.b
    }

    /// Inverse of [`Fq::code`].
    pub fn from_code(&self, c: u32) -> FqElem {
        FqElem { fq: *self, a: c % self.p, b: c / self.p }
    }
}

impl fmt::Display for Fq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 1 {
            write!(f, "F_{}", self.p)
        } else {
            write!(f, "F_{}[r]/(r^2-{})", self.p, self.nr)
        }
    }
}

/// An element `a + b r` of [`Fq`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqElem {
    fq: Fq,
    a: u32,
    b: u32,
}

impl FqElem {
    /// The field.
    pub fn fq(&self) -> Fq {
        self.fq
    }

    /// `(a, b)` with `self = a + b r`.
    pub fn coords(&self) -> (u32, u32) {
        (self.a, self.b)
    }

    /// Whether `self` lies in the prime field.
    pub fn is_base(&self) -> bool {
        self.b == 0
    }

    /// The Frobenius conjugate `a - b r`.
    pub fn conj(&self) -> FqElem {
        self.fq.elem(i64::from(self.a), -i64::from(self.b))
    }

    /// `x conj(x)`, in the prime field.
    pub fn norm(&self) -> FqElem {
        self.times(&self.conj())
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, mut e: u64) -> FqElem {
        let mut base = *self;
        let mut acc = self.one_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order, `None` for zero.
    pub fn multiplicative_order(&self) -> Option<u64> {
        if self.is_zero_elem() {
            return None;
        }
        let group = u64::from(self.fq.order()) - 1;
        let mut best = group;
        for k in 1..=group {
            if group % k == 0 && self.pow(k).is_one_elem() {
                best = k;
                break;
            }
        }
        Some(best)
    }

    /// Parses `3`, `r`, `2r`, `1+2r`, `2*r` or `-1` in the given field.
    pub fn parse(s: &str, fq: Fq) -> Result<FqElem> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty field element".into()));
        }
        let mut acc = fq.int(0);
        let mut start = 0;
        let bytes = t.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i] == b'+' || bytes[i] == b'-' {
                let term = &t[start..i];
                acc = acc.plus(&parse_term(term, fq, s)?);
                start = i;
            }
        }
        Ok(acc)
    }
}

fn parse_term(term: &str, fq: Fq, whole: &str) -> Result<FqElem> {
    let bad = || Error::Parse(format!("not a field element: {whole:?}"));
    let (sign, body) = match term.as_bytes().first() {
        Some(b'-') => (-1i64, &term[1..]),
        Some(b'+') => (1, &term[1..]),
        _ => (1, term),
    };
    if let Some(coef) = body.strip_suffix('r') {
        let coef = coef.strip_suffix('*').unwrap_or(coef);
        let c: i64 = if coef.is_empty() { 1 } else { coef.parse().map_err(|_| bad())? };
        let r = fq.r()?;
        Ok(r.times(&fq.int(sign * c)))
    } else {
        let c: i64 = body.parse().map_err(|_| bad())?;
        Ok(fq.int(sign * c))
    }
}

impl fmt::Display for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "r"),
            (0, b) => write!(f, "{b}r"),
            (a, 1) => write!(f, "{a}+r"),
            (a, b) => write!(f, "{a}+{b}r"),
        }
    }
}

impl fmt::Debug for FqElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for FqElem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Ring for FqElem {
    fn zero_like(&self) -> Self {
        self.fq.int(0)
    }

    fn one_like(&self) -> Self {
        self.fq.int(1)
    }

    fn int_like(&self, n: i64) -> Self {
        self.fq.int(n)
    }

    fn is_zero_elem(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    fn plus(&self, o: &Self) -> Self {
        debug_assert_eq!(self.fq, o.fq);
        let p = self.fq.p;
        FqElem { fq: self.fq, a: (self.a + o.a) % p, b: (self.b + o.b) % p }
    }

    fn minus(&self, o: &Self) -> Self {
        debug_assert_eq!(self.fq, o.fq);
        let p = self.fq.p;
        FqElem { fq: self.fq, a: (self.a + p - o.a) % p, b: (self.b + p - o.b) % p }
    }

    fn times(&self, o: &Self) -> Self {
        debug_assert_eq!(self.fq, o.fq);
        let p = u64::from(self.fq.p);
        let (a1, b1, a2, b2) = (u64::from(self.a), u64::from(self.b), u64::from(o.a), u64::from(o.b));
        let a = (a1 * a2 + (b1 * b2 % p) * u64::from(self.fq.nr)) % p;
        let b = (a1 * b2 + a2 * b1) % p;
        FqElem { fq: self.fq, a: a as u32, b: b as u32 }
    }

    fn negated(&self) -> Self {
        self.fq.elem(-i64::from(self.a), -i64::from(self.b))
    }
}

impl Field for FqElem {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero_elem() {
            return None;
        }
        let n = self.norm().a;
        let p = self.fq.p;
        let n_inv = self.fq.int(i64::from(n)).pow(u64::from(p) - 2);
        Some(self.conj().times(&n_inv))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms_in_f9() {
        let f9 = Fq::quadratic(3).unwrap();
        assert_eq!(f9.nonresidue(), 2);
        let els = f9.elements();
        assert_eq!(els.len(), 9);
        for x in &els {
            if !x.is_zero_elem() {
                assert!(x.times(&x.inverse().unwrap()).is_one_elem());
                assert!(x.pow(8).is_one_elem());
            }
            assert!(x.norm().is_base());
            assert_eq!(x.conj(), x.pow(3));
        }
    }

    #[test]
    fn parse_and_print() {
        let f9 = Fq::quadratic(3).unwrap();
        for s in ["0", "2", "r", "2r", "1+r", "2+2r"] {
            assert_eq!(FqElem::parse(s, f9).unwrap().to_string(), s);
        }
        assert_eq!(FqElem::parse("-1", f9).unwrap().to_string(), "2");
        assert_eq!(FqElem::parse("1-r", f9).unwrap().to_string(), "1+2r");
        assert!(FqElem::parse("r", Fq::prime(3).unwrap()).is_err());
        assert!(Fq::quadratic_with(5, 4).is_err());
        assert_eq!(Fq::prime(7).unwrap().int(2).multiplicative_order(), Some(3));
    }
}
