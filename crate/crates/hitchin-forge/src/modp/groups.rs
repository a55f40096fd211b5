//! Finite matrix groups: closure, order formulas, trace sets and trace witnesses.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use super::fq::{Fq, FqElem};
use crate::error::{Error, Result};
use crate::exactnum::{Matrix, Ring};

/// Default bound on the number of elements a closure may produce.
pub const DEFAULT_CAP: usize = 5_000_000;

/// Precomputed addition and multiplication tables on element codes.
struct Tables {
    q: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
}

impl Tables {
    fn new(fq: Fq) -> Result<Self> {
        let q = fq.order() as usize;
        if q > 1024 {
            return Err(Error::Precondition(format!("closures are limited to fields of size at most 1024, not {q}")));
        }
        let els = fq.elements();
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for (i, x) in els.iter().enumerate() {
            for (j, y) in els.iter().enumerate() {
                add[i * q + j] = fq.code(&x.plus(y)) as u16;
                mul[i * q + j] = fq.code(&x.times(y)) as u16;
            }
        }
        Ok(Tables { q, add, mul })
    }

    fn matmul(&self, n: usize, x: &[u16], y: &[u16], out: &mut Vec<u16>) {
        out.clear();
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u16;
                for k in 0..n {
                    let prod = self.mul[x[i * n + k] as usize * self.q + y[k * n + j] as usize];
                    acc = self.add[acc as usize * self.q + prod as usize];
                }
                out.push(acc);
            }
        }
    }
}

fn encode(m: &Matrix<FqElem>) -> Vec<u16> {
    m.entries().iter().map(|e| e.fq().code(e) as u16).collect()
}

fn decode(fq: Fq, n: usize, codes: &[u16]) -> Matrix<FqElem> {
    Matrix::new(n, n, codes.iter().map(|&c| fq.from_code(u32::from(c))).collect()).expect("n x n")
}

/// Canonical little-endian byte encoding of a matrix, used as the hash key.
fn key(codes: &[u16]) -> Box<[u8]> {
    codes.iter().flat_map(|c| c.to_le_bytes()).collect()
}

fn check_gens(gens: &[Matrix<FqElem>]) -> Result<(Fq, usize)> {
    let first = gens.first().ok_or_else(|| Error::Precondition("closure needs at least one generator".into()))?;
    let n = first.rows();
    let fq = first.entries()[0].fq();
    for g in gens {
        if g.rows() != n || g.cols() != n {
            return Err(Error::Dimension("generators must be square of one size".into()));
        }
        if g.entries().iter().any(|e| e.fq() != fq) {
            return Err(Error::Precondition("generators must live over one field".into()));
        }
        if g.det()?.is_zero_elem() {
            return Err(Error::Singular);
        }
    }
    Ok((fq, n))
}

/// Visits every element of the group generated by `gens` breadth first,
/// failing with [`Error::CapExceeded`] once more than `cap` elements are found.
fn visit(gens: &[Matrix<FqElem>], cap: usize, mut f: impl FnMut(&[u16])) -> Result<usize> {
    let (fq, n) = check_gens(gens)?;
    let tables = Tables::new(fq)?;
    let gens: Vec<Vec<u16>> = gens.iter().map(encode).collect();
    let id = encode(&Matrix::identity(n, &fq.int(1)));
    let mut seen: HashSet<Box<[u8]>> = HashSet::new();
    seen.insert(key(&id));
    f(&id);
    let mut frontier = vec![id];
    let mut buf = Vec::with_capacity(n * n);
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in &gens {
                tables.matmul(n, x, g, &mut buf);
                if seen.insert(key(&buf)) {
                    if seen.len() > cap {
                        return Err(Error::CapExceeded(seen.len() - 1));
                    }
                    f(&buf);
                    next.push(buf.clone());
                }
            }
        }
        frontier = next;
    }
    Ok(seen.len())
}

/// Order of the group generated by invertible matrices over a finite field.
pub fn group_closure(gens: &[Matrix<FqElem>], cap: usize) -> Result<usize> {
    visit(gens, cap, |_| {})
}

/// Every element of the group generated by `gens`.
pub fn closure_elements(gens: &[Matrix<FqElem>], cap: usize) -> Result<Vec<Matrix<FqElem>>> {
    let (fq, n) = check_gens(gens)?;
    let mut out = Vec::new();
    visit(gens, cap, |c| out.push(decode(fq, n, c)))?;
    Ok(out)
}

/// The set of traces of the group generated by `gens`.
pub fn trace_set(gens: &[Matrix<FqElem>], cap: usize) -> Result<BTreeSet<FqElem>> {
    let (fq, n) = check_gens(gens)?;
    let mut out = BTreeSet::new();
    visit(gens, cap, |c| {
        let t = (0..n).fold(fq.int(0), |acc, i| acc.plus(&fq.from_code(u32::from(c[i * n + i]))));
        out.insert(t);
    })?;
    Ok(out)
}

/// Traces of all reduced words of length at most `l` in the generators and their inverses.
pub fn trace_set_words(gens: &[Matrix<FqElem>], l: usize) -> Result<BTreeSet<FqElem>> {
    let (fq, n) = check_gens(gens)?;
    let mut letters = Vec::new();
    for g in gens {
        letters.push(g.clone());
        letters.push(g.inverse()?);
    }
    let mut out = BTreeSet::new();
    let id = Matrix::identity(n, &fq.int(1));
    out.insert(id.trace());
    // (word value, index of its last letter)
    let mut layer: Vec<(Matrix<FqElem>, usize)> = vec![(id, usize::MAX)];
    for _ in 0..l {
        let mut next = Vec::new();
        for (w, last) in &layer {
            for (i, g) in letters.iter().enumerate() {
                if *last != usize::MAX && i == (*last ^ 1) {
                    continue;
                }
                let v = w * g;
                out.insert(v.trace());
                next.push((v, i));
            }
        }
        layer = next;
    }
    Ok(out)
}

/// The classical groups used by the trace lemmas.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum GroupFamily {
    /// `SL(n, F_p)`.
    SL,
    /// `SU(I_n, F_p)` inside `SL(n, F_{p^2})`.
    SU,
    /// `Sp(n, F_p)` for the block form `diag([[0,1],[-1,0]], ...)`.
    Sp,
    /// `SO(I_n, F_p)`.
    SO,
    /// `Omega(I_n, F_p)`, the commutator subgroup of `SO(I_n, F_p)`.
    Omega,
}

impl GroupFamily {
    /// Parses `SL`, `SU`, `Sp`, `SO` or `Omega` (case-insensitive).
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sl" => Ok(GroupFamily::SL),
            "su" => Ok(GroupFamily::SU),
            "sp" => Ok(GroupFamily::Sp),
            "so" => Ok(GroupFamily::SO),
            "omega" | "ω" => Ok(GroupFamily::Omega),
            _ => Err(Error::Parse(format!("unknown group family {s:?}"))),
        }
    }

    /// The field the matrices live over.
    pub fn field(&self, p: u32) -> Result<Fq> {
        match self {
            GroupFamily::SU => Fq::quadratic(p),
            _ => Fq::prime(p),
        }
    }

    fn validate(&self, n: usize, p: u32) -> Result<()> {
        let ok = match self {
            GroupFamily::SL => n >= 2,
            GroupFamily::SU => n >= 2 && p != 2,
            GroupFamily::Sp => n >= 2 && n.is_multiple_of(2),
            GroupFamily::SO | GroupFamily::Omega => n >= 3 && p != 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Precondition(format!("{self} is not available for n = {n}, p = {p}")))
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupFamily::SL => "SL",
            GroupFamily::SU => "SU",
            GroupFamily::Sp => "Sp",
            GroupFamily::SO => "SO",
            GroupFamily::Omega => "Omega",
        };
        f.write_str(s)
    }
}

/// The standard order formulas for `SL(n,q)`, `SU(n,q)` and `Sp(n,q)`.
pub fn group_order_formula(family: GroupFamily, n: usize, q: u64) -> Result<u128> {
    let q = u128::from(q);
    let n32 = n as u32;
    match family {
        GroupFamily::SL if n >= 1 => Ok(q.pow(n32 * (n32 - 1) / 2) * (2..=n32).map(|i| q.pow(i) - 1).product::<u128>()),
        GroupFamily::SU if n >= 1 => Ok(q.pow(n32 * (n32 - 1) / 2)
            * (2..=n32).map(|i| if i % 2 == 0 { q.pow(i) - 1 } else { q.pow(i) + 1 }).product::<u128>()),
        GroupFamily::Sp if n >= 2 && n.is_multiple_of(2) => {
            let m = n32 / 2;
            Ok(q.pow(m * m) * (1..=m).map(|i| q.pow(2 * i) - 1).product::<u128>())
        }
        _ => Err(Error::Precondition(format!("no order formula for {family} with n = {n}"))),
    }
}

/// The Gram matrix of the form preserved by a family.
pub fn family_form(family: GroupFamily, n: usize, fq: Fq) -> Matrix<FqElem> {
    let one = fq.int(1);
    match family {
        GroupFamily::Sp => {
            let mut m = Matrix::zeros(n, n, &fq.int(0));
            for k in 0..n / 2 {
                m[(2 * k, 2 * k + 1)] = one;
                m[(2 * k + 1, 2 * k)] = one.negated();
            }
            m
        }
        _ => Matrix::identity(n, &one),
    }
}

/// Membership of `m` in the family: determinant one and preservation of the
/// family's form (Hermitian for `SU`, bilinear otherwise).
///
/// For `Omega` only `SO` membership is checked.
pub fn in_family(family: GroupFamily, m: &Matrix<FqElem>) -> Result<bool> {
    if family == GroupFamily::SL {
        return Ok(m.det()?.is_one_elem());
    }
    let n = m.rows();
    let fq = m.entries()[0].fq();
    let form = family_form(family, n, fq);
    preserves_mod_form(m, &form, family == GroupFamily::SU)
}

/// Whether `det m = 1` and `m*^T F m = F`, with `m* = conj(m)` when `hermitian`.
pub fn preserves_mod_form(m: &Matrix<FqElem>, form: &Matrix<FqElem>, hermitian: bool) -> Result<bool> {
    if !m.det()?.is_one_elem() {
        return Ok(false);
    }
    let mt = if hermitian { m.map(FqElem::conj).transpose() } else { m.transpose() };
    Ok(&(&mt * form) * m == *form)
}

fn transvection(n: usize, fq: Fq, i: usize, j: usize) -> Matrix<FqElem> {
    let mut m = Matrix::identity(n, &fq.int(1));
    m[(i, j)] = fq.int(1);
    m
}

fn embed_block(n: usize, fq: Fq, i: usize, j: usize, block: [[FqElem; 2]; 2]) -> Matrix<FqElem> {
    let mut m = Matrix::identity(n, &fq.int(1));
    m[(i, i)] = block[0][0];
    m[(i, j)] = block[0][1];
    m[(j, i)] = block[1][0];
    m[(j, j)] = block[1][1];
    m
}

/// Reflection in `v` for the identity form: `x -> x - 2 (x.v / v.v) v`.
fn reflection(v: &[FqElem]) -> Option<Matrix<FqElem>> {
    let fq = v[0].fq();
    let n = v.len();
    let vv = v.iter().fold(fq.int(0), |acc, x| acc.plus(&x.times(x)));
    let inv = crate::exactnum::Field::inverse(&vv)?;
    let two = fq.int(2).times(&inv);
    let mut m = Matrix::identity(n, &fq.int(1));
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = m[(i, j)].minus(&two.times(&v[i]).times(&v[j]));
        }
    }
    Some(m)
}

/// Generators of `SO(I_n, F_p)`: products of the reflection in `e_1` with the
/// reflections in every anisotropic vector whose first nonzero coordinate is 1.
fn so_generators(n: usize, fq: Fq) -> Vec<Matrix<FqElem>> {
    let p = fq.p() as usize;
    let mut e1 = vec![fq.int(0); n];
    e1[0] = fq.int(1);
    let r1 = reflection(&e1).expect("e1 is anisotropic");
    let mut out = Vec::new();
    let total = p.pow(n as u32);
    for code in 1..total {
        let mut c = code;
        let v: Vec<FqElem> = (0..n)
            .map(|_| {
                let x = fq.int((c % p) as i64);
                c /= p;
                x
            })
            .collect();
        if v.iter().find(|x| !x.is_zero_elem()).map(|x| x.is_one_elem()) != Some(true) {
            continue;
        }
        if let Some(r) = reflection(&v) {
            let g = &r1 * &r;
            if !g.is_identity() {
                out.push(g);
            }
        }
    }
    out
}

/// Generators of the family over `F_p` (or `F_{p^2}` for `SU`).
///
/// `SL` uses the elementary transvections, `SU` every `SU(2)` block
/// `[[a, b], [-conj b, conj a]]` in adjacent coordinate planes, `Sp` the
/// symplectic transvections in `e_i` and `e_i + e_j`, `SO` products of two
/// reflections, and `Omega` the commutators `[g, x]` of the `SO` generators
/// `g` with every element `x` of `SO`, which generate the commutator subgroup.
pub fn family_generators(family: GroupFamily, n: usize, p: u32) -> Result<Vec<Matrix<FqElem>>> {
    family.validate(n, p)?;
    let fq = family.field(p)?;
    let one = fq.int(1);
    Ok(match family {
        GroupFamily::SL => (0..n).flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j))).map(|(i, j)| transvection(n, fq, i, j)).collect(),
        GroupFamily::SU => {
            let els = fq.elements();
            let mut out = Vec::new();
            for a in &els {
                for b in &els {
                    if a.norm().plus(&b.norm()).is_one_elem() {
                        let block = [[*a, *b], [b.conj().negated(), a.conj()]];
                        for i in 0..n - 1 {
                            let g = embed_block(n, fq, i, i + 1, block);
                            if !g.is_identity() {
                                out.push(g);
                            }
                        }
                    }
                }
            }
            out
        }
        GroupFamily::Sp => {
            let form = family_form(family, n, fq);
            let mut vs: Vec<Vec<FqElem>> = Vec::new();
            for i in 0..n {
                let mut v = vec![fq.int(0); n];
                v[i] = one;
                vs.push(v.clone());
                for j in i + 1..n {
                    let mut w = v.clone();
                    w[j] = one;
                    vs.push(w);
                }
            }
            vs.iter()
                .map(|v| {
                    // x -> x + omega(x, v) v, i.e. I + v (F v)^T up to the sign convention of F.
                    let fv: Vec<FqElem> = (0..n).map(|k| (0..n).fold(fq.int(0), |acc, l| acc.plus(&form[(k, l)].times(&v[l])))).collect();
                    let mut m = Matrix::identity(n, &one);
                    for r in 0..n {
                        for c in 0..n {
                            m[(r, c)] = m[(r, c)].plus(&v[r].times(&fv[c]));
                        }
                    }
                    m
                })
                .collect()
        }
        GroupFamily::SO => so_generators(n, fq),
        GroupFamily::Omega => {
            let gens = so_generators(n, fq);
            let elements = closure_elements(&gens, DEFAULT_CAP)?;
            let mut seen = HashSet::new();
            let mut out = Vec::new();
            for g in &gens {
                let gi = g.inverse()?;
                for x in &elements {
                    let c = &(&(g * x) * &gi) * &x.inverse()?;
                    if !c.is_identity() && seen.insert(encode(&c)) {
                        out.push(c);
                    }
                }
            }
            out
        }
    })
}

/// Order of the family computed by closure.
pub fn family_order(family: GroupFamily, n: usize, p: u32, cap: usize) -> Result<usize> {
    group_closure(&family_generators(family, n, p)?, cap)
}

/// Full trace set of the family.
pub fn family_trace_set(family: GroupFamily, n: usize, p: u32, cap: usize) -> Result<BTreeSet<FqElem>> {
    trace_set(&family_generators(family, n, p)?, cap)
}

/// A matrix of the family with a prescribed trace, following the explicit
/// constructions of the trace lemmas.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceWitness {
    /// The family.
    pub family: GroupFamily,
    /// The requested value.
    pub target: FqElem,
    /// The witness matrix `M`.
    #[serde(serialize_with = "ser_matrix")]
    pub matrix: Matrix<FqElem>,
    /// Which trace realizes the target: `Tr(M)` or, for `Omega`, `Tr(M^2)` with `M^2` in `Omega`.
    pub realized: String,
    /// The realized trace value.
    pub trace: FqElem,
    /// The invariant form checked (`M` preserves it and has determinant one); unused for `SL`.
    #[serde(serialize_with = "ser_matrix")]
    pub form: Matrix<FqElem>,
    /// Whether the membership equations hold modulo `p`.
    pub verified: bool,
}

fn ser_matrix<S: serde::Serializer>(m: &Matrix<FqElem>, s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(m.rows()))?;
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        seq.serialize_element(&row)?;
    }
    seq.end()
}

fn antidiagonal_ones(n: usize, fq: Fq) -> Matrix<FqElem> {
    Matrix::antidiagonal(&vec![fq.int(1); n])
}

fn embed_top_left(m: &Matrix<FqElem>, n: usize) -> Matrix<FqElem> {
    m.embed_top_left(n)
}

/// Constructs and verifies a trace witness.
///
/// * `SL`, `Sp`: `[[a - (n-2), 1], [-1, 0]]` in the top-left corner, trace `a`.
/// * `SU` (`n >= 3`, `a` in `F_{p^2}`): `[[a, b, 1], [conj b, -1, 0], [1, 0, 0]]` with
///   `N(b) = -a - conj a`, trace `a - 1`, unitary for the antidiagonal Hermitian form.
///   The target `a` is shifted so that the realized trace equals the request.
/// * `Omega` (`n >= 4`, `a != 0`): `[[0,0,-a,a],[0,0,1,0],[1,1,0,0],[1/a,0,0,0]]`
///   preserving the antidiagonal form; `Tr(M^2) = -2a + 4 + (n - 4)`.
pub fn trace_witness(family: GroupFamily, n: usize, p: u32, target: FqElem) -> Result<TraceWitness> {
    family.validate(n, p)?;
    let fq = family.field(p)?;
    if target.fq().p() != p || (target.fq().degree() == 2 && fq.degree() == 1 && !target.is_base()) {
        return Err(Error::Precondition(format!("{target} is not in {fq}")));
    }
    let a = fq.elem(i64::from(target.coords().0), i64::from(target.coords().1));
    let one = fq.int(1);
    let zero = fq.int(0);
    let (matrix, realized, trace, form, hermitian) = match family {
        GroupFamily::SL | GroupFamily::Sp => {
            let top = a.minus(&fq.int(n as i64 - 2));
            let m2 = Matrix::from_rows(vec![vec![top, one], vec![one.negated(), zero]])?;
            let m = embed_top_left(&m2, n);
            let t = m.trace();
            (m, "Tr(M)".to_string(), t, family_form(family, n, fq), false)
        }
        GroupFamily::SU => {
            if n < 3 {
                return Err(Error::NoWitness("the unitary construction needs n >= 3".into()));
            }
            // Tr(M) = a' - 1 + (n - 3) for the corner block with parameter a'.
            let ap = a.plus(&fq.int(1)).minus(&fq.int(n as i64 - 3));
            let need = ap.plus(&ap.conj()).negated();
            let b = fq
                .elements()
                .into_iter()
                .find(|b| b.norm() == need)
                .ok_or_else(|| Error::NoWitness(format!("no b with N(b) = {need}")))?;
            let m3 = Matrix::from_rows(vec![vec![ap, b, one], vec![b.conj(), one.negated(), zero], vec![one, zero, zero]])?;
            let m = embed_top_left(&m3, n);
            let t = m.trace();
            let form = embed_top_left(&antidiagonal_ones(3, fq), n);
            (m, "Tr(M)".to_string(), t, form, true)
        }
        GroupFamily::Omega => {
            if n < 4 {
                return Err(Error::NoWitness("the orthogonal construction needs n >= 4".into()));
            }
            // Tr(M^2) = -2 a' + 4 + (n - 4); solve for a'.
            let two_inv = crate::exactnum::Field::inverse(&fq.int(2)).expect("p odd");
            let ap = fq.int(n as i64).minus(&a).times(&two_inv);
            let api = crate::exactnum::Field::inverse(&ap).ok_or_else(|| {
                Error::NoWitness(format!("trace {a} needs the excluded parameter a = 0"))
            })?;
            let m4 = Matrix::from_rows(vec![
                vec![zero, zero, ap.negated(), ap],
                vec![zero, zero, one, zero],
                vec![one, one, zero, zero],
                vec![api, zero, zero, zero],
            ])?;
            let m = embed_top_left(&m4, n);
            let t = (&m * &m).trace();
            let form = embed_top_left(&antidiagonal_ones(4, fq), n);
            (m, "Tr(M^2)".to_string(), t, form, false)
        }
        GroupFamily::SO => {
            return Err(Error::NoWitness("no explicit construction for SO; use Omega".into()));
        }
    };
    let member = if family == GroupFamily::SL { matrix.det()?.is_one_elem() } else { preserves_mod_form(&matrix, &form, hermitian)? };
    let verified = member && trace == a;
    Ok(TraceWitness { family, target: a, matrix, realized, trace, form, verified })
}
