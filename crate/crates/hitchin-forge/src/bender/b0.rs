//! The diagonal bending matrices `B_0` used for each target lattice, and the
//! checks of their membership and breaking pattern.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{FieldDescriptor, FieldElem, GaloisAction, Matrix, Ring};
use crate::g2core::in_g2;
use crate::lattices::{centralizer_conditions, in_su_sqrt_d, is_tau_pgl2_diagonal, j_matrix_over, preserves_form, CentralizerConditions};

/// The families of diagonal bending matrices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum B0Kind {
    /// `diag(w^4, 1, ..., 1, w^-2, w^-2)`, odd `n >= 3`, for `SU(I_n; Z[sqrt a])`.
    #[serde(rename = "SU_split_a")]
    SuSplitA,
    /// `diag(t^2, 1, ..., 1, t^-4, 1, ..., 1, t^2)`, odd `n >= 3`, for `SU(I_n; Z[sqrt d])`
    /// with `sqrt a` outside `Q(sqrt d)`.
    #[serde(rename = "SU_nonsplit")]
    SuNonsplit,
    /// `diag(w^4, 1, ..., 1, w^-2, w^-2)`, even `n >= 4`, for `SU(I_n; Z[sqrt d])`.
    #[serde(rename = "SU_even_split")]
    SuEvenSplit,
    /// `diag(t^2, t^-2, 1, ..., 1, t^-2, t^2)`, even `n >= 4`, for the quaternionic unitary group.
    #[serde(rename = "SU_quat_even")]
    SuQuatEven,
    /// `diag(w^2, 1, ..., 1, sigma(w)^2)`, odd `n >= 5`, for `SO`.
    #[serde(rename = "SO_odd")]
    SoOdd,
    /// `diag(w^2, sigma(w)^2, 1, 1, 1, w^2, sigma(w)^2)` for `SO(J_7)` outside `G_2`.
    #[serde(rename = "SO_n7")]
    SoN7,
    /// `diag(w^2, w^2, 1, 1, 1, sigma(w)^2, sigma(w)^2)` in `G_2`.
    G2,
    /// `diag(w^2, ..., w^2, sigma(w)^2, ..., sigma(w)^2)`, even `n >= 4`, for `Sp`.
    Sp,
}

impl B0Kind {
    /// Every kind.
    pub const ALL: [B0Kind; 8] = [
        B0Kind::SuSplitA,
        B0Kind::SuNonsplit,
        B0Kind::SuEvenSplit,
        B0Kind::SuQuatEven,
        B0Kind::SoOdd,
        B0Kind::SoN7,
        B0Kind::G2,
        B0Kind::Sp,
    ];

    /// The printed name, e.g. `SU_split_a`.
    pub fn name(&self) -> &'static str {
        match self {
            B0Kind::SuSplitA => "SU_split_a",
            B0Kind::SuNonsplit => "SU_nonsplit",
            B0Kind::SuEvenSplit => "SU_even_split",
            B0Kind::SuQuatEven => "SU_quat_even",
            B0Kind::SoOdd => "SO_odd",
            B0Kind::SoN7 => "SO_n7",
            B0Kind::G2 => "G2",
            B0Kind::Sp => "Sp",
        }
    }

    /// Parses a kind name (case-insensitive).
    pub fn parse(s: &str) -> Result<Self> {
        B0Kind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown B0 kind {s:?}")))
    }

    /// Whether `n` is an allowed dimension.
    pub fn allows(&self, n: usize) -> bool {
        match self {
            B0Kind::SuSplitA | B0Kind::SuNonsplit => n >= 3 && n % 2 == 1,
            B0Kind::SuEvenSplit | B0Kind::SuQuatEven | B0Kind::Sp => n >= 4 && n.is_multiple_of(2),
            B0Kind::SoOdd => n >= 5 && n % 2 == 1,
            B0Kind::SoN7 | B0Kind::G2 => n == 7,
        }
    }

    /// The smallest allowed dimension.
    pub fn default_n(&self) -> usize {
        (2..).find(|&n| self.allows(n)).expect("some n")
    }

    /// Whether the lattice is unitary (`SU` kinds) rather than orthogonal,
    /// symplectic or `G_2`.
    pub fn is_unitary(&self) -> bool {
        matches!(self, B0Kind::SuSplitA | B0Kind::SuNonsplit | B0Kind::SuEvenSplit | B0Kind::SuQuatEven)
    }
}

impl fmt::Display for B0Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The radicand `d` of a unit `x + y sqrt d`, with checks that it is an
/// integral unit of a real quadratic field.
fn unit_radicand(unit: &FieldElem) -> Result<i64> {
    let r = unit.descriptor().radicands();
    if r.len() != 1 {
        return Err(Error::Precondition(format!("{unit} is not in a real quadratic field")));
    }
    let n = unit.norm();
    if !unit.is_integral() || !(n == crate::exactnum::int(1) || n == crate::exactnum::int(-1)) {
        return Err(Error::Precondition(format!("{unit} is not a unit of Z[sqrt {}]", r[0])));
    }
    Ok(r[0])
}

/// The diagonal entries of `B_0` before raising to the power `k`.
fn entries(kind: B0Kind, n: usize, w: &FieldElem, sw: &FieldElem) -> Vec<FieldElem> {
    let one = w.one_like();
    let mut e = vec![one; n];
    let w2 = w.pow(2);
    let s2 = sw.pow(2);
    match kind {
        B0Kind::SuSplitA | B0Kind::SuEvenSplit => {
            e[0] = w.pow(4);
            e[n - 2] = w.pow(-2);
            e[n - 1] = w.pow(-2);
        }
        B0Kind::SuNonsplit => {
            e[0] = w2.clone();
            e[n / 2] = w.pow(-4);
            e[n - 1] = w2;
        }
        B0Kind::SuQuatEven => {
            e[0] = w2.clone();
            e[1] = w.pow(-2);
            e[n - 2] = w.pow(-2);
            e[n - 1] = w2;
        }
        B0Kind::SoOdd => {
            e[0] = w2;
            e[n - 1] = s2;
        }
        B0Kind::SoN7 => {
            e[0] = w2.clone();
            e[1] = s2.clone();
            e[5] = w2;
            e[6] = s2;
        }
        B0Kind::G2 => {
            e[0] = w2.clone();
            e[1] = w2;
            e[5] = s2.clone();
            e[6] = s2;
        }
        B0Kind::Sp => {
            for (i, x) in e.iter_mut().enumerate() {
                *x = if i < n / 2 { w2.clone() } else { s2.clone() };
            }
        }
    }
    e
}

/// Membership and breaking data for a diagonal bending matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct B0Report {
    /// The family.
    pub kind: B0Kind,
    /// Dimension.
    pub n: usize,
    /// Radicand of the unit.
    pub d: i64,
    /// `det B = 1`.
    pub det_one: bool,
    /// Entries in `Z[sqrt d]`.
    pub integral: bool,
    /// Membership in `SU(I_n, sigma; Z[sqrt d])`.
    pub in_su: bool,
    /// `B^T J_n B = J_n`.
    pub preserves_j: bool,
    /// `B^T J_n B = lambda J_n` for a scalar.
    pub preserves_j_up_to_scalar: bool,
    /// Scalar multiple of `tau_n(diag(mu, 1/mu))`.
    pub tau_pgl2: bool,
    /// `G_2` membership (dimension 7 only).
    pub in_g2: Option<bool>,
    /// Conditions on the diagonal entries.
    pub centralizer: CentralizerConditions,
    /// Whether the claimed lattice membership holds.
    pub membership: bool,
    /// Whether the claimed breaking predicates hold.
    pub breaking: bool,
}

/// Computes every predicate on `B` and compares with the pattern claimed for `kind`.
pub fn verify_b0(kind: B0Kind, b: &Matrix<FieldElem>) -> Result<B0Report> {
    let n = b.rows();
    if !b.is_diagonal() {
        return Err(Error::Precondition("bending matrices are diagonal".into()));
    }
    let diag = b.diagonal_entries();
    let d = diag
        .iter()
        .find_map(|e| e.descriptor().radicands().first().copied())
        .ok_or_else(|| Error::Precondition("B has no irrational entry".into()))?;
    let desc = Arc::new(FieldDescriptor::new(vec![d])?);
    let b = b.try_map(|e| e.lift_to(&desc))?;
    let one = FieldElem::one(&desc);
    let det_one = b.det()?.is_one_elem();
    let integral = b.entries().iter().all(FieldElem::is_integral);
    let j = j_matrix_over(n, &one);
    let preserves_j = preserves_form(&b, &j, false)?;
    let preserves_j_up_to_scalar = preserves_form(&b, &j, true)?;
    let tau_pgl2 = is_tau_pgl2_diagonal(&b)?;
    let g2 = if n == 7 { Some(in_g2(&b)?) } else { None };
    let centralizer = centralizer_conditions(&b.diagonal_entries(), d)?;
    let in_su = in_su_sqrt_d(&b, d)?;
    let membership = det_one
        && integral
        && match kind {
            B0Kind::SuSplitA | B0Kind::SuEvenSplit => in_su,
            B0Kind::SuNonsplit | B0Kind::SuQuatEven => in_su && centralizer.palindromic && centralizer.mirrored_unitary,
            B0Kind::SoOdd | B0Kind::SoN7 => preserves_j && centralizer.sigma_swaps,
            B0Kind::G2 => g2 == Some(true),
            B0Kind::Sp => preserves_j,
        };
    let breaking = !tau_pgl2
        && match kind {
            k if k.is_unitary() => !preserves_j_up_to_scalar,
            B0Kind::SoN7 => g2 == Some(false),
            _ => true,
        };
    Ok(B0Report {
        kind,
        n,
        d,
        det_one,
        integral,
        in_su,
        preserves_j,
        preserves_j_up_to_scalar,
        tau_pgl2,
        in_g2: g2,
        centralizer,
        membership,
        breaking,
    })
}

/// `B_0^k` for the given family, dimension and unit, verified to have
/// determinant one and to lie in the claimed lattice.
pub fn b0_family(kind: B0Kind, n: usize, unit: &FieldElem, k: i64) -> Result<Matrix<FieldElem>> {
    if !kind.allows(n) {
        return Err(Error::Precondition(format!("{kind} is not defined in dimension {n}")));
    }
    let d = unit_radicand(unit)?;
    let sigma = GaloisAction::flipping(unit.descriptor(), d);
    let sw = sigma.apply(unit)?;
    let e: Vec<FieldElem> = entries(kind, n, unit, &sw).iter().map(|x| x.pow(k)).collect();
    let b = Matrix::diagonal(&e);
    let report = verify_b0(kind, &b)?;
    if !report.det_one {
        return Err(Error::Verification(format!("{kind} has determinant different from one")));
    }
    if !report.membership {
        return Err(Error::Verification(format!("{kind} fails its lattice membership")));
    }
    Ok(b)
}

/// Whether `B^k1 != B^k2` for a diagonal `B`; by the rigidity of bendings this
/// means the two bent representations are not conjugate.
///
/// Returns `false` when every diagonal entry is `+-1`, since `B` then has finite order.
pub fn distinct_bendings(b: &Matrix<FieldElem>, k1: i64, k2: i64) -> Result<bool> {
    if !b.is_diagonal() {
        return Err(Error::Precondition("bending matrices are diagonal".into()));
    }
    let diag = b.diagonal_entries();
    if diag.iter().all(|e| e.is_one_elem() || e.negated().is_one_elem()) {
        return Ok(false);
    }
    let p1: Vec<FieldElem> = diag.iter().map(|e| e.pow(k1)).collect();
    let p2: Vec<FieldElem> = diag.iter().map(|e| e.pow(k2)).collect();
    Ok(p1 != p2)
}
