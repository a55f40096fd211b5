//! Fundamental units of `Z[sqrt d]` through the continued fraction of `sqrt d`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::field::FieldElem;
use super::rational::{squarefree_decompose, Rational};
use crate::error::{Error, Result};

/// The fundamental unit `x + y sqrt d` of `Z[sqrt d]` and its norm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellUnit {
    /// The radicand.
    pub d: i64,
    /// Rational part, positive and minimal.
    pub x: BigInt,
    /// Coefficient of `sqrt d`, positive and minimal.
    pub y: BigInt,
    /// `x^2 - d y^2`, either `+1` or `-1`.
    pub norm: i8,
}

impl PellUnit {
    /// The unit as an element of `Q(sqrt d)`.
    pub fn element(&self) -> FieldElem {
        let e = FieldElem::quadratic(self.d, 0, 0).expect("validated radicand");
        FieldElem::from_coeffs(
            e.descriptor(),
            vec![Rational::from_integer(self.x.clone()), Rational::from_integer(self.y.clone())],
        )
        .expect("two coefficients")
    }
}

/// JSON form used by the command-line front end.
#[derive(Serialize)]
pub struct PellUnitJson {
    /// The unit as text.
    pub unit: String,
    /// `+1` or `-1`.
    pub norm: i8,
}

impl From<&PellUnit> for PellUnitJson {
    fn from(u: &PellUnit) -> Self {
        PellUnitJson { unit: u.element().to_string(), norm: u.norm }
    }
}

/// Smallest `x + y sqrt d > 1` with `x^2 - d y^2 = +-1`.
///
/// The convergents `p/q` of the continued fraction of `sqrt d` are scanned
/// until one satisfies the Pell equation with either sign; the first such
/// convergent is the fundamental solution.
pub fn fundamental_unit(d: i64) -> Result<PellUnit> {
    if d <= 1 || !squarefree_decompose(&BigInt::from(d)).1.is_one() {
        return Err(Error::InvalidRadicand(format!("{d} is not a square-free integer > 1")));
    }
    let dd = BigInt::from(d);
    let a0 = dd.sqrt();
    // sqrt(d) = [a0; a1, a2, ...] with (m, den, a) recurrences.
    let (mut m, mut den, mut a) = (BigInt::zero(), BigInt::one(), a0.clone());
    let (mut p_prev, mut p) = (BigInt::one(), a0.clone());
    let (mut q_prev, mut q) = (BigInt::zero(), BigInt::one());
    loop {
        let value = &p * &p - &dd * &q * &q;
        if value.is_one() || value == -BigInt::one() {
            let norm = value.to_i8().expect("+-1");
            return Ok(PellUnit { d, x: p, y: q, norm });
        }
        m = &den * &a - &m;
        den = (&dd - &m * &m) / &den;
        a = (&a0 + &m) / &den;
        let p_next = &a * &p + &p_prev;
        let q_next = &a * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{GaloisAction, Ring};

    /// Minimal positive solution of `x^2 - d y^2 = +-1` by exhaustive search.
    fn brute_force(d: i64, bound: i64) -> Option<(i64, i64, i64)> {
        for x in 1..=bound {
            for y in 1..=bound {
                let v = x * x - d * y * y;
                if v == 1 || v == -1 {
                    return Some((x, y, v));
                }
            }
        }
        None
    }

    #[test]
    fn small_radicands() {
        let u3 = fundamental_unit(3).unwrap();
        assert_eq!((u3.x.clone(), u3.y.clone(), u3.norm), (2.into(), 1.into(), 1));
        assert_eq!(u3.element().to_string(), "2+sqrt(3)");
        let u2 = fundamental_unit(2).unwrap();
        assert_eq!((u2.x, u2.y, u2.norm), (1.into(), 1.into(), -1));
        assert!(fundamental_unit(4).is_err());
        assert!(fundamental_unit(1).is_err());
    }

    #[test]
    fn agrees_with_brute_force() {
        for d in 2..120i64 {
            if squarefree_decompose(&BigInt::from(d)).1 != BigInt::one() {
                continue;
            }
            let u = fundamental_unit(d).unwrap();
            // Search in increasing x: the first hit is the minimal solution.
            if let Some((x, y, v)) = brute_force(d, 400) {
                assert_eq!((u.x.to_i64(), u.y.to_i64(), u.norm as i64), (Some(x), Some(y), v), "d={d}");
            } else {
                assert!(u.x > BigInt::from(400), "d={d}");
            }
        }
    }

    #[test]
    fn large_fundamental_unit() {
        // d = 61 has the classical solution 29718 + 3805 sqrt 61 of norm -1.
        let u = fundamental_unit(61).unwrap();
        assert_eq!((u.x, u.y, u.norm), (29718.into(), 3805.into(), -1));
    }

    #[test]
    fn unit_times_conjugate_is_norm() {
        for d in [2, 3, 5, 6, 7, 13, 94] {
            let u = fundamental_unit(d).unwrap();
            let w = u.element();
            let g = GaloisAction::flipping(w.descriptor(), d);
            let prod = w.times(&g.apply(&w).unwrap());
            assert_eq!(prod, w.int_like(u.norm as i64));
        }
    }
}
