//! Reduction of `Z[sqrt d]` modulo a prime.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::fq::{Fq, FqElem};
use crate::error::{Error, Result};
use crate::exactnum::{FieldDescriptor, FieldElem, Matrix, Rational, Ring};

/// How `sqrt d` is sent to the residue field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReductionMode {
    /// `d` is a nonzero square modulo `p`; `sqrt d` goes to the smaller root.
    Split {
        /// A square root of `d` modulo `p`.
        root: u32,
    },
    /// `d` is a non-residue; `sqrt d` goes to `r` in `F_p[r]/(r^2 - d)`.
    Inert,
    /// `p` divides `d`; `sqrt d` goes to zero (the residue field of the prime above `p`).
    Ramified,
}

impl fmt::Display for ReductionMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionMode::Split { root } => write!(f, "split(sqrt d -> {root})"),
            ReductionMode::Inert => write!(f, "inert"),
            ReductionMode::Ramified => write!(f, "ramified"),
        }
    }
}

/// A ring homomorphism from `Z[sqrt d]` (localized away from `p`) to a finite field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionContext {
    /// The prime.
    pub p: u32,
    /// The radicand (1 for plain rational data).
    pub d: i64,
    /// Split, inert or ramified.
    pub mode: ReductionMode,
    #[serde(skip)]
    target: Fq,
}

fn residue(x: &BigInt, p: u32) -> u32 {
    let p = BigInt::from(p);
    ((x % &p + &p) % &p).to_u32().expect("residue below p")
}

impl ReductionContext {
    /// Split or inert reduction for an odd prime `p` not dividing `d`.
    ///
    /// `d = 1` gives the reduction of rational data to `F_p`.
    pub fn new(p: u32, d: i64) -> Result<Self> {
        let base = Fq::prime(p).map_err(|e| Error::Reduction(e.to_string()))?;
        if p == 2 {
            return Err(Error::Reduction("p = 2 is excluded".into()));
        }
        if d.rem_euclid(i64::from(p)) == 0 {
            return Err(Error::Reduction(format!("{p} divides d = {d}")));
        }
        let dm = d.rem_euclid(i64::from(p)) as u64;
        let root = (0..p).find(|&y| (u64::from(y) * u64::from(y)) % u64::from(p) == dm);
        Ok(match root {
            Some(root) => ReductionContext { p, d, mode: ReductionMode::Split { root }, target: base },
            None => ReductionContext { p, d, mode: ReductionMode::Inert, target: Fq::quadratic_with(p, d)? },
        })
    }

    /// Reduction modulo the prime above an odd `p` dividing `d`.
    pub fn ramified(p: u32, d: i64) -> Result<Self> {
        let base = Fq::prime(p).map_err(|e| Error::Reduction(e.to_string()))?;
        if p == 2 || d.rem_euclid(i64::from(p)) != 0 {
            return Err(Error::Reduction(format!("{p} is not an odd prime dividing d = {d}")));
        }
        Ok(ReductionContext { p, d, mode: ReductionMode::Ramified, target: base })
    }

    /// [`ReductionContext::new`], or [`ReductionContext::ramified`] when `p` divides `d`.
    pub fn auto(p: u32, d: i64) -> Result<Self> {
        if d.rem_euclid(i64::from(p)) == 0 {
            Self::ramified(p, d)
        } else {
            Self::new(p, d)
        }
    }

    /// The residue field.
    pub fn target(&self) -> Fq {
        self.target
    }

    /// Reduces a rational with denominator prime to `p`.
    pub fn reduce_rational(&self, r: &Rational) -> Result<FqElem> {
        let den = residue(r.denom(), self.p);
        if den == 0 {
            return Err(Error::Reduction(format!("{p} divides the denominator of {r}", p = self.p)));
        }
        let num = residue(r.numer(), self.p);
        let f = self.target;
        let inv = f.int(i64::from(den)).pow(u64::from(self.p) - 2);
        Ok(f.int(i64::from(num)).times(&inv))
    }

    /// The image of `x + y sqrt d`.
    pub fn reduce(&self, x: &FieldElem) -> Result<FqElem> {
        let f = self.target;
        if let Some(r) = x.as_rational() {
            return self.reduce_rational(&r);
        }
        let desc = Arc::new(FieldDescriptor::new(vec![self.d]).map_err(|e| Error::Reduction(e.to_string()))?);
        let y = x
            .lift_to(&desc)
            .map_err(|_| Error::Reduction(format!("{x} is not in Q(sqrt {})", self.d)))?;
        let c0 = self.reduce_rational(y.coeff(0))?;
        let c1 = self.reduce_rational(y.coeff(1))?;
        let s = match self.mode {
            ReductionMode::Split { root } => f.int(i64::from(root)),
            ReductionMode::Inert => f.r()?,
            ReductionMode::Ramified => f.int(0),
        };
        Ok(c0.plus(&c1.times(&s)))
    }

    /// Entrywise reduction.
    pub fn reduce_matrix(&self, m: &Matrix<FieldElem>) -> Result<Matrix<FqElem>> {
        m.try_map(|e| self.reduce(e))
    }
}
