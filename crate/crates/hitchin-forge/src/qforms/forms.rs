//! Diagonalization, invariants and equivalence of quadratic forms over `Q`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::hilbert::{hilbert_symbol, support_places, Place};
use crate::error::{Error, Result};
use crate::exactnum::{square_class, Matrix, Rational, Ring};

/// A diagonal form congruent to the input, with the congruence witness.
#[derive(Clone, Debug, PartialEq)]
pub struct Diagonalization {
    /// Diagonal values of `P^T S P`.
    pub diagonal: Vec<Rational>,
    /// Square classes of the diagonal values (square-free with sign, zero for zero).
    pub classes: Vec<BigInt>,
    /// Invertible `P` with `P^T S P = diag(diagonal)`.
    pub witness: Matrix<Rational>,
}

/// Rank, discriminant, signature and Hasse invariants of a form over `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormInvariants {
    /// Dimension of the (nondegenerate) form.
    pub rank: usize,
    /// Discriminant square class as a square-free integer with sign.
    #[serde(serialize_with = "ser_bigint")]
    pub disc: BigInt,
    /// Numbers of positive and negative diagonal entries.
    pub signature: (usize, usize),
    /// Hasse invariants on the scanned support; `+1` at every other place.
    #[serde(serialize_with = "ser_hasse")]
    pub hasse: BTreeMap<Place, i8>,
}

fn ser_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn ser_hasse<S: serde::Serializer>(
    v: &BTreeMap<Place, i8>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for (place, sign) in v {
        seq.serialize_element(&(place.to_string(), sign))?;
    }
    seq.end()
}

impl FormInvariants {
    /// Hasse invariant at any place, `+1` outside the stored support.
    pub fn hasse_at(&self, v: Place) -> i8 {
        self.hasse.get(&v).copied().unwrap_or(1)
    }

    /// Product of the stored Hasse invariants; Hilbert reciprocity forces `+1`.
    pub fn hasse_product(&self) -> i8 {
        self.hasse.values().product()
    }
}

fn check_symmetric(s: &Matrix<Rational>) -> Result<()> {
    if !s.is_square() {
        return Err(Error::Dimension("quadratic form matrix must be square".into()));
    }
    if *s != s.transpose() {
        return Err(Error::Precondition("quadratic form matrix must be symmetric".into()));
    }
    Ok(())
}

/// Symmetric elimination on `a` (and on the columns of `p`): adds `f` times
/// basis vector `src` to basis vector `dst`.
fn add_basis_multiple(a: &mut Matrix<Rational>, p: &mut Matrix<Rational>, dst: usize, src: usize, f: &Rational) {
    let n = a.rows();
    for k in 0..n {
        let v = &a[(k, dst)] + f * &a[(k, src)];
        a[(k, dst)] = v;
    }
    for k in 0..n {
        let v = &a[(dst, k)] + f * &a[(src, k)];
        a[(dst, k)] = v;
    }
    for k in 0..n {
        let v = &p[(k, dst)] + f * &p[(k, src)];
        p[(k, dst)] = v;
    }
}

fn swap_basis(a: &mut Matrix<Rational>, p: &mut Matrix<Rational>, i: usize, j: usize) {
    if i == j {
        return;
    }
    let n = a.rows();
    for k in 0..n {
        let t = a[(k, i)].clone();
        a[(k, i)] = a[(k, j)].clone();
        a[(k, j)] = t;
    }
    for k in 0..n {
        let t = a[(i, k)].clone();
        a[(i, k)] = a[(j, k)].clone();
        a[(j, k)] = t;
        let t = p[(k, i)].clone();
        p[(k, i)] = p[(k, j)].clone();
        p[(k, j)] = t;
    }
}

/// Diagonalizes a symmetric rational matrix by congruence.
///
/// At each step the first remaining nonzero diagonal entry is used as pivot;
/// when every remaining diagonal entry vanishes, a nonzero off-diagonal pair
/// `(i, j)` is split by replacing `e_i` with `e_i + e_j`.
pub fn diagonalize_qform(s: &Matrix<Rational>) -> Result<Diagonalization> {
    check_symmetric(s)?;
    let n = s.rows();
    let zero = Rational::zero();
    let mut a = s.clone();
    let mut p = Matrix::identity(n, &zero);
    for i in 0..n {
        if let Some(j) = (i..n).find(|&j| !a[(j, j)].is_zero()) {
            swap_basis(&mut a, &mut p, i, j);
        } else {
            let pair = (i..n).flat_map(|r| (r + 1..n).map(move |c| (r, c))).find(|&(r, c)| !a[(r, c)].is_zero());
            let Some((r, c)) = pair else {
                break;
            };
            swap_basis(&mut a, &mut p, i, r);
            let c = if c == i { r } else { c };
            add_basis_multiple(&mut a, &mut p, i, c, &Rational::from_integer(1.into()));
        }
        let pivot = a[(i, i)].clone();
        for j in i + 1..n {
            if a[(i, j)].is_zero() {
                continue;
            }
            let f = -(&a[(i, j)] / &pivot);
            add_basis_multiple(&mut a, &mut p, j, i, &f);
        }
    }
    let diagonal = a.diagonal_entries();
    let classes = diagonal
        .iter()
        .map(|d| if d.is_zero() { BigInt::zero() } else { square_class(d) })
        .collect();
    Ok(Diagonalization { diagonal, classes, witness: p })
}

/// Invariants of a nondegenerate diagonal form given by its entries.
pub fn diagonal_invariants(diag: &[Rational]) -> Result<FormInvariants> {
    if diag.iter().any(Zero::is_zero) {
        return Err(Error::DegenerateForm);
    }
    let pos = diag.iter().filter(|d| d.is_positive()).count();
    let det = diag.iter().fold(Rational::from_integer(1.into()), |acc, d| acc * d);
    let places = support_places(diag);
    let mut hasse = BTreeMap::new();
    for v in places {
        let mut e = 1i8;
        for i in 0..diag.len() {
            for j in i + 1..diag.len() {
                e *= hilbert_symbol(&diag[i], &diag[j], v);
            }
        }
        hasse.insert(v, e);
    }
    Ok(FormInvariants { rank: diag.len(), disc: square_class(&det), signature: (pos, diag.len() - pos), hasse })
}

/// Rank, discriminant class, signature and Hasse invariants of a symmetric matrix.
pub fn form_invariants(s: &Matrix<Rational>) -> Result<FormInvariants> {
    let d = diagonalize_qform(s)?;
    diagonal_invariants(&d.diagonal)
}

/// Hasse-Minkowski: two nondegenerate forms over `Q` are equivalent iff
/// rank, discriminant, signature and every Hasse invariant agree.
pub fn forms_equivalent(s1: &Matrix<Rational>, s2: &Matrix<Rational>) -> Result<bool> {
    let a = form_invariants(s1)?;
    let b = form_invariants(s2)?;
    if a.rank != b.rank || a.disc != b.disc || a.signature != b.signature {
        return Ok(false);
    }
    let places: std::collections::BTreeSet<Place> = a.hasse.keys().chain(b.hasse.keys()).copied().collect();
    Ok(places.into_iter().all(|v| a.hasse_at(v) == b.hasse_at(v)))
}

/// The diagonal form `I_{p,q}` with `p` entries `+1` then `q` entries `-1`.
pub fn indefinite_identity(p: usize, q: usize) -> Matrix<Rational> {
    let one = Rational::from_integer(1.into());
    let mut entries = vec![one.clone(); p];
    entries.extend(std::iter::repeat_n(-one, q));
    Matrix::diagonal(&entries)
}

/// Whether `P^T S P = D` for the returned witness (used to validate diagonalizations).
pub fn witness_holds(s: &Matrix<Rational>, d: &Diagonalization) -> bool {
    let p = &d.witness;
    let lhs = &(&p.transpose() * s) * p;
    let rhs = Matrix::diagonal(&d.diagonal);
    lhs == rhs && !p.det().map(|x| x.is_zero_elem()).unwrap_or(true)
}
