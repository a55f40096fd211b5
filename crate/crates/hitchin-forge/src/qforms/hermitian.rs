//! Invariants of Hermitian forms over a real quadratic field `Q(sqrt d)`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::hilbert::is_norm_from_quadratic;
use crate::error::{Error, Result};
use crate::exactnum::{is_square, square_class, FieldElem, GaloisAction, Matrix, Rational, Ring};

/// Class of the discriminant of a Hermitian form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum DiscClass {
    /// A positive rational square.
    PlusSquare,
    /// Minus a rational square.
    MinusSquare,
    /// Anything else, with its square-free representative and whether it is
    /// a norm from `Q(sqrt d)` (so that the form is still congruent to the identity).
    Other {
        /// Square-free representative with sign.
        #[serde(serialize_with = "ser_big")]
        representative: BigInt,
        /// Whether the discriminant is a norm `x sigma(x)`.
        is_norm: bool,
    },
}

fn ser_big<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Rank and discriminant data of a Hermitian matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HermitianInvariants {
    /// The radicand of the quadratic field.
    pub d: i64,
    /// Rank of the matrix.
    pub rank: usize,
    /// Determinant, a rational because the matrix is Hermitian; `None` when singular.
    #[serde(serialize_with = "ser_opt_rat")]
    pub disc: Option<Rational>,
    /// Class of the determinant, `None` when singular.
    pub disc_class: Option<DiscClass>,
    /// Full rank with discriminant a square or minus a square.
    pub congruent_to_identity: bool,
}

fn ser_opt_rat<S: serde::Serializer>(v: &Option<Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_none(),
    }
}

/// Rank and discriminant class of a `sigma`-Hermitian matrix over `Q(sqrt d)`.
///
/// The matrix must satisfy `sigma(H)^T = H` for the automorphism negating
/// `sqrt d`. The determinant is then fixed by `sigma`, hence rational.
pub fn hermitian_invariants(h: &Matrix<FieldElem>, d: i64) -> Result<HermitianInvariants> {
    if !h.is_square() {
        return Err(Error::Dimension("Hermitian matrix must be square".into()));
    }
    let desc = h[(0, 0)].descriptor().clone();
    let radicands = desc.radicands();
    if !(radicands.is_empty() || radicands == [d]) {
        return Err(Error::WrongField(format!("entries lie in {desc}, expected Q(sqrt({d}))")));
    }
    let sigma = GaloisAction::new(&[(d, -1)])?;
    let conj = h.try_map(|e| sigma.apply(e))?.transpose();
    if conj != *h {
        return Err(Error::NotHermitian);
    }
    let rank = h.rank();
    let det = h.det()?;
    let (disc, disc_class) = if det.is_zero_elem() {
        (None, None)
    } else {
        let r = det.as_rational().ok_or_else(|| Error::Verification("Hermitian determinant is not rational".into()))?;
        let class = classify(&r, d);
        (Some(r), Some(class))
    };
    let congruent_to_identity = rank == h.rows()
        && matches!(disc_class, Some(DiscClass::PlusSquare) | Some(DiscClass::MinusSquare));
    Ok(HermitianInvariants { d, rank, disc, disc_class, congruent_to_identity })
}

fn classify(r: &Rational, d: i64) -> DiscClass {
    let is_rational_square = |x: &Rational| x.is_positive() && is_square(x.numer()) && is_square(x.denom());
    if is_rational_square(r) {
        DiscClass::PlusSquare
    } else if is_rational_square(&-r) {
        DiscClass::MinusSquare
    } else {
        debug_assert!(!r.is_zero());
        DiscClass::Other { representative: square_class(r), is_norm: is_norm_from_quadratic(r, d) }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;
    use crate::exactnum::FieldDescriptor;

    fn q3() -> Arc<FieldDescriptor> {
        Arc::new(FieldDescriptor::new(vec![3]).unwrap())
    }

    fn diag(entries: &[&str]) -> Matrix<FieldElem> {
        let d = q3();
        Matrix::diagonal(&entries.iter().map(|s| FieldElem::parse(s, &d).unwrap()).collect::<Vec<_>>())
    }

    #[test]
    fn identity_and_diag_212() {
        let inv = hermitian_invariants(&diag(&["1", "1", "1"]), 3).unwrap();
        assert_eq!((inv.rank, inv.disc_class.clone()), (3, Some(DiscClass::PlusSquare)));
        let inv = hermitian_invariants(&diag(&["2", "1", "2"]), 3).unwrap();
        assert_eq!(inv.disc, Some(Rational::from_integer(4.into())));
        assert!(inv.congruent_to_identity);
        // -2 = 1 - 3 is a norm from Q(sqrt 3); -6 is not, since (-6, 3) at 3 is -1.
        let inv = hermitian_invariants(&diag(&["-1", "2", "1"]), 3).unwrap();
        assert_eq!(
            inv.disc_class,
            Some(DiscClass::Other { representative: (-2).into(), is_norm: true })
        );
        assert!(!inv.congruent_to_identity);
        let inv = hermitian_invariants(&diag(&["-1", "2", "3"]), 3).unwrap();
        assert_eq!(
            inv.disc_class,
            Some(DiscClass::Other { representative: (-6).into(), is_norm: false })
        );
    }

    #[test]
    fn off_diagonal_hermitian_entries() {
        let d = q3();
        let e = |s: &str| FieldElem::parse(s, &d).unwrap();
        let h = Matrix::from_rows(vec![vec![e("2"), e("1+sqrt(3)")], vec![e("1-sqrt(3)"), e("1")]]).unwrap();
        // det = 2 - (1 - 3) = 4
        let inv = hermitian_invariants(&h, 3).unwrap();
        assert_eq!(inv.disc, Some(Rational::from_integer(4.into())));
        let bad = Matrix::from_rows(vec![vec![e("2"), e("1+sqrt(3)")], vec![e("1+sqrt(3)"), e("1")]]).unwrap();
        assert_eq!(hermitian_invariants(&bad, 3), Err(Error::NotHermitian));
        assert_eq!(hermitian_invariants(&diag(&["sqrt(3)", "1"]), 3), Err(Error::NotHermitian));
    }
}
