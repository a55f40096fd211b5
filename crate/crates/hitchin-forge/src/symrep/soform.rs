//! The orthogonal form attached to the cocycle `T^{a,b}` on `SO(J_n)` for odd
//! `n`: the twisting map `f(x) = sum_g T_g g(x)` applied to explicit vectors
//! `v_1, ..., v_n` gives `S^-1 = (f(v_1) | ... | f(v_n))`, and `S^-T J_n S^-1`
//! is a rational diagonal form.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::Serialize;

use super::{cocycle_matrix, factorial, j_matrix, tau, SignPair};
use crate::error::{Error, Result};
use crate::exactnum::{int, is_square, FieldDescriptor, FieldElem, GaloisAction, Matrix, Rational, Ring};
use crate::qforms::{diagonal_invariants, form_invariants, hilbert_symbol, support_places, FormInvariants, Place};

/// Which of `sqrt a`, `sqrt b` are rational, as a field degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtensionCase {
    /// `a` and `b` are both squares.
    Trivial,
    /// `a` and `b` are non-squares with `ab` a square.
    Degree2,
    /// `Q(sqrt a, sqrt b)` has degree 4.
    Degree4,
}

impl ExtensionCase {
    /// Parses `trivial`, `degree-2` or `degree-4` (also `1`, `2`, `4`).
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "trivial" | "1" | "degree-1" => Ok(ExtensionCase::Trivial),
            "degree-2" | "degree2" | "2" => Ok(ExtensionCase::Degree2),
            "degree-4" | "degree4" | "4" => Ok(ExtensionCase::Degree4),
            _ => Err(Error::Parse(format!("unknown extension case {s:?}"))),
        }
    }

    /// The case determined by the squareness of `a`, `b` and `ab`.
    pub fn of(a: i64, b: i64) -> Result<Self> {
        let desc = FieldDescriptor::generated_by(&[a, b])?;
        Ok(match desc.degree() {
            1 => ExtensionCase::Trivial,
            2 => ExtensionCase::Degree2,
            _ => ExtensionCase::Degree4,
        })
    }
}

impl fmt::Display for ExtensionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtensionCase::Trivial => "trivial",
            ExtensionCase::Degree2 => "degree-2",
            ExtensionCase::Degree4 => "degree-4",
        })
    }
}

/// Result of the cocycle-to-form construction.
#[derive(Clone, Debug)]
pub struct SoForm {
    /// Odd dimension.
    pub n: usize,
    /// First parameter.
    pub a: i64,
    /// Second parameter.
    pub b: i64,
    /// Extension case.
    pub case: ExtensionCase,
    /// `S^-1 = (f(v_1) | ... | f(v_n))` over `Q(sqrt a, sqrt b)`.
    pub s_inverse: Matrix<FieldElem>,
    /// `S^-T J_n S^-1`, a rational symmetric matrix (diagonal unless trivial).
    pub form: Matrix<Rational>,
    /// Invariants of `form`.
    pub invariants: FormInvariants,
    /// The closed-form Hasse invariant at every place of the support.
    pub closed_form_hasse: BTreeMap<Place, i8>,
}

/// Sign `s` with `tau_n(lift of T) = s tau_n(T)` for a lift of `T` to `SL(2)`:
/// the lift of a determinant `-1` matrix is `i T`, which picks up `i^{n-1}`.
fn lift_sign(n: usize, signs: SignPair) -> i64 {
    let det_negative = signs.a * signs.b < 0;
    if det_negative && ((n - 1) / 2) % 2 == 1 {
        -1
    } else {
        1
    }
}

/// The operator matrices `tau_n(lift of T_g)` for every Galois element `g`.
fn operators(n: usize, a: i64, b: i64, desc: &Arc<FieldDescriptor>) -> Result<Vec<(GaloisAction, Matrix<FieldElem>)>> {
    let mut out = Vec::new();
    for g in GaloisAction::all(desc) {
        let signs = SignPair::new(g.sign_on_sqrt(desc, a)?, g.sign_on_sqrt(desc, b)?)?;
        let t = tau(n, &cocycle_matrix(signs))?.scale(&int(lift_sign(n, signs)));
        out.push((g, t.map(|x| FieldElem::from_rational(desc, x.clone()))));
    }
    Ok(out)
}

/// Applies the twisting map `f(x) = sum_g L_g g(x)`.
fn twist(ops: &[(GaloisAction, Matrix<FieldElem>)], x: &[FieldElem]) -> Result<Vec<FieldElem>> {
    let n = x.len();
    let mut out = vec![x[0].zero_like(); n];
    for (g, l) in ops {
        let gx: Vec<FieldElem> = x.iter().map(|e| g.apply(e)).collect::<Result<_>>()?;
        for (i, slot) in out.iter_mut().enumerate() {
            for (j, e) in gx.iter().enumerate() {
                if !l[(i, j)].is_zero_elem() && !e.is_zero_elem() {
                    *slot = slot.plus(&l[(i, j)].times(e));
                }
            }
        }
    }
    Ok(out)
}

/// The vectors `v_1, ..., v_n` of the construction, as columns.
///
/// Position `j <= k` is paired with `j' = n + 1 - j`; the middle vector is a
/// multiple of `e_{k+1}`.
fn basis_vectors(n: usize, a: i64, b: i64, case: ExtensionCase, desc: &Arc<FieldDescriptor>) -> Result<Vec<Vec<FieldElem>>> {
    let k = (n - 1) / 2;
    let zero = FieldElem::zero(desc);
    let half = int(1) / int(2);
    let quarter = int(1) / int(4);
    let mut v = vec![vec![zero.clone(); n]; n];
    if case == ExtensionCase::Trivial {
        for (j, col) in v.iter_mut().enumerate() {
            col[j] = FieldElem::one(desc);
        }
        return Ok(v);
    }
    let one = FieldElem::one(desc);
    let ra = FieldElem::sqrt(desc, a)?;
    let rb = FieldElem::sqrt(desc, b)?;
    let rab = ra.times(&rb);
    let n_mod4 = n % 4;
    for j in 1..=k {
        let jp = n + 1 - j;
        let (ji, jpi) = (j - 1, jp - 1);
        let odd = j % 2 == 1;
        match (n_mod4, case) {
            (1, ExtensionCase::Degree2) => {
                let s = if odd { int(1) } else { int(-1) };
                v[ji][ji] = one.scale(&half);
                v[ji][jpi] = one.scale(&(&half * &s));
                v[jpi][ji] = ra.scale(&half);
                v[jpi][jpi] = ra.scale(&(-(&half * &s)));
            }
            (1, _) => {
                if odd {
                    v[ji][ji] = ra.scale(&half);
                    v[jpi][jpi] = one.scale(&half);
                } else {
                    v[ji][ji] = rb.scale(&half);
                    v[jpi][jpi] = rab.scale(&(-&half));
                }
            }
            (_, ExtensionCase::Degree2) => {
                v[ji][ji] = one.clone();
                v[jpi][jpi] = if odd { ra.negated() } else { ra.clone() };
            }
            _ => {
                if odd {
                    v[ji][ji] = rb.scale(&half);
                    v[jpi][jpi] = rab.scale(&half);
                } else {
                    v[ji][ji] = one.scale(&half);
                    v[jpi][jpi] = ra.scale(&half);
                }
            }
        }
    }
    v[k][k] = match (n_mod4, case) {
        (1, ExtensionCase::Degree2) => one.scale(&half),
        (1, _) => one.scale(&quarter),
        (_, ExtensionCase::Degree2) => ra.scale(&half),
        _ => ra.scale(&quarter),
    };
    Ok(v)
}

/// The diagonal the construction is expected to produce, with
/// `|J_j| = (n-j)! (j-1)!` at position `j` and at its mirror `n+1-j`.
pub fn expected_diagonal(n: usize, a: i64, b: i64, case: ExtensionCase) -> Result<Vec<Rational>> {
    if case == ExtensionCase::Trivial {
        return Err(Error::Precondition("the trivial case yields J_n, which is not diagonal".into()));
    }
    check_dimension(n)?;
    let k = (n - 1) / 2;
    let (a, b) = (int(a), int(b));
    let mut d = vec![int(0); n];
    for j in 1..=k {
        let jj = factorial(n - j) * factorial(j - 1);
        let odd = j % 2 == 1;
        let (first, mirror) = match (n % 4, case, odd) {
            (1, ExtensionCase::Degree2, _) | (3, ExtensionCase::Degree2, _) => (int(2), -int(2) * &a),
            (1, _, true) => (-int(2) * &a, int(2)),
            (1, _, false) => (-int(2) * &b, int(2) * &a * &b),
            (_, _, true) => (-int(2) * &b, int(2) * &a * &b),
            (_, _, false) => (int(2), -int(2) * &a),
        };
        d[j - 1] = first * &jj;
        d[n - j] = mirror * &jj;
    }
    let kk = factorial(k) * factorial(k);
    d[k] = if n % 4 == 1 { kk } else { -a * kk };
    Ok(d)
}

fn symbol_power(x: &Rational, y: &Rational, e: usize, v: Place) -> i8 {
    if e.is_multiple_of(2) {
        1
    } else {
        hilbert_symbol(x, y, v)
    }
}

/// The closed-form Hasse invariant of the constructed form at place `v`.
///
/// Trivial case: that of `J_n`. Otherwise, with `m = (n-1)/4` for `n = 1 mod 4`
/// and `m = (n+1)/4` for `n = 3 mod 4`, it is `(-1,-1)^m` times
/// `(a, (-1)^m)`, `(a, b^m)`, `(a, (-1)^{(n-3)/4} a)` or `(a, b^m)` in the
/// four branches (n mod 4, degree) = (1,2), (1,4), (3,2), (3,4).
pub fn closed_form_hasse(n: usize, a: i64, b: i64, case: ExtensionCase, v: Place) -> Result<i8> {
    check_dimension(n)?;
    let m1 = int(-1);
    let (ar, br) = (int(a), int(b));
    if case == ExtensionCase::Trivial {
        return Ok(form_invariants(&j_matrix(n))?.hasse_at(v));
    }
    let m = if n % 4 == 1 { (n - 1) / 4 } else { (n + 1) / 4 };
    let base = symbol_power(&m1, &m1, m, v);
    let twist = match (n % 4, case) {
        (1, ExtensionCase::Degree2) => symbol_power(&ar, &m1, m, v),
        (3, ExtensionCase::Degree2) => {
            let c = if ((n - 3) / 4) % 2 == 1 { -ar.clone() } else { ar.clone() };
            hilbert_symbol(&ar, &c, v)
        }
        _ => symbol_power(&ar, &br, m, v),
    };
    Ok(base * twist)
}

fn check_dimension(n: usize) -> Result<()> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::Precondition(format!("n must be odd and at least 3, got {n}")));
    }
    Ok(())
}

fn check_case(a: i64, b: i64, case: ExtensionCase) -> Result<()> {
    if a <= 0 || b <= 0 {
        return Err(Error::Precondition("a and b must be positive".into()));
    }
    let actual = ExtensionCase::of(a, b)?;
    let a_sq = is_square(&BigInt::from(a));
    let b_sq = is_square(&BigInt::from(b));
    let consistent = match case {
        ExtensionCase::Trivial => a_sq && b_sq,
        ExtensionCase::Degree2 => actual == ExtensionCase::Degree2 && !a_sq && !b_sq,
        ExtensionCase::Degree4 => actual == ExtensionCase::Degree4,
    };
    if !consistent {
        return Err(Error::CaseMismatch(format!(
            "(a, b) = ({a}, {b}) does not match the {case} case"
        )));
    }
    Ok(())
}

/// Builds `S^-1` from the explicit vectors, returns `S^-T J_n S^-1` with its
/// invariants, and checks the Hasse invariant against the closed form at
/// every place of the support (and the diagonal against the expected one).
pub fn so_form_from_cocycle(n: usize, a: i64, b: i64, case: ExtensionCase) -> Result<SoForm> {
    check_dimension(n)?;
    check_case(a, b, case)?;
    let desc = Arc::new(FieldDescriptor::generated_by(&[a, b])?);
    let ops = operators(n, a, b, &desc)?;
    let vs = basis_vectors(n, a, b, case, &desc)?;
    let cols: Vec<Vec<FieldElem>> = vs.iter().map(|v| twist(&ops, v)).collect::<Result<_>>()?;
    let mut s_inv = Matrix::zeros(n, n, &FieldElem::zero(&desc));
    for (j, col) in cols.iter().enumerate() {
        for (i, e) in col.iter().enumerate() {
            s_inv[(i, j)] = e.clone();
        }
    }
    let j = j_matrix(n).map(|x| FieldElem::from_rational(&desc, x.clone()));
    let g = &(&s_inv.transpose() * &j) * &s_inv;
    let form = g.try_map(|e| {
        e.as_rational().ok_or_else(|| Error::Verification(format!("entry {e} of S^-T J S^-1 is not rational")))
    })?;
    let invariants = if case == ExtensionCase::Trivial {
        form_invariants(&form)?
    } else {
        if !form.is_diagonal() {
            return Err(Error::Verification("S^-T J S^-1 is not diagonal".into()));
        }
        let expected = expected_diagonal(n, a, b, case)?;
        if form.diagonal_entries() != expected {
            return Err(Error::Verification(format!(
                "diagonal {:?} differs from the expected {:?}",
                form.diagonal_entries().iter().map(ToString::to_string).collect::<Vec<_>>(),
                expected.iter().map(ToString::to_string).collect::<Vec<_>>()
            )));
        }
        diagonal_invariants(&expected)?
    };
    let mut places: BTreeSet<Place> = invariants.hasse.keys().copied().collect();
    places.extend(support_places(&[int(a), int(b)]));
    let mut closed = BTreeMap::new();
    for v in places {
        let c = closed_form_hasse(n, a, b, case, v)?;
        if c != invariants.hasse_at(v) {
            return Err(Error::Verification(format!(
                "Hasse invariant at {v} is {} but the closed form gives {c}",
                invariants.hasse_at(v)
            )));
        }
        closed.insert(v, c);
    }
    Ok(SoForm { n, a, b, case, s_inverse: s_inv, form, invariants, closed_form_hasse: closed })
}
