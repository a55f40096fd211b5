//! Zariski-density certificates for bent representations.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::spec::BendingSpec;
use crate::error::{Error, Result};
use crate::exactnum::{span_dimension, FieldElem, Matrix, Ring};
use crate::g2core::in_g2;
use crate::lattices::{is_tau_pgl2_diagonal, j_matrix_over, preserves_form};
use crate::symrep::tau;

/// The theorem names every certificate depends on.
pub const DENSITY_ASSUMPTION: &str = "Hitchin + Guichard classification";

/// The group whose density is certified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DensityTarget {
    /// `SL(n, R)`.
    SLn,
    /// `Sp(J_n)` for even `n`.
    Sp,
    /// `SO(J_n)` for odd `n`.
    SO,
    /// `G_2` inside `SO(J_7)`.
    G2,
}

impl DensityTarget {
    /// Parses `SLn`, `Sp`, `SO` or `G2` (case-insensitive).
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "sln" | "sl" => Ok(DensityTarget::SLn),
            "sp" => Ok(DensityTarget::Sp),
            "so" => Ok(DensityTarget::SO),
            "g2" => Ok(DensityTarget::G2),
            _ => Err(Error::Parse(format!("unknown density target {s:?}"))),
        }
    }
}

impl fmt::Display for DensityTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            DensityTarget::SLn => "SLn",
            DensityTarget::Sp => "Sp",
            DensityTarget::SO => "SO",
            DensityTarget::G2 => "G2",
        };
        f.write_str(s)
    }
}

/// Evidence that the 2x2 preimages generate a Zariski-dense subgroup of `SL(2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sl2Evidence {
    /// Dimension of the algebra spanned by the preimages (4 means irreducible).
    pub span_rank: usize,
    /// Word of an element with `|trace| > 2`, if one was found.
    pub infinite_order_word: Option<String>,
    /// Its trace.
    pub infinite_order_trace: Option<String>,
    /// A generator that moves the eigenline pair of that element.
    pub eigenline_breaking_generator: Option<String>,
    /// All three checks passed.
    pub dense: bool,
}

/// Which subgroups the bending matrix escapes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BreakingFlags {
    /// `B` does not preserve `J_n` up to a scalar.
    pub form_jn: bool,
    /// `B` is not a scalar multiple of an element of `tau_n(PGL_2)`.
    pub tau_pgl2: bool,
    /// `B` is not in `G_2` (dimension 7 only).
    pub g2: Option<bool>,
}

/// A conditional certificate that the bent representation is Zariski dense in the target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityCertificate {
    /// The target group.
    pub target: DensityTarget,
    /// Dimension.
    pub n: usize,
    /// Density of the unbent 2x2 data.
    pub sl2_dense: Sl2Evidence,
    /// The escapes achieved by `B`.
    pub breaks: BreakingFlags,
    /// Names of the flags the target needs.
    pub required: Vec<String>,
    /// Whether `B` lies in the target group, so that the bent image stays inside it.
    pub contained_in_target: bool,
    /// Theorems assumed.
    pub assumptions: Vec<String>,
    /// Whether every required check passed.
    pub valid: bool,
}

fn sl2_evidence(pre: &BTreeMap<String, Matrix<FieldElem>>) -> Result<Sl2Evidence> {
    let names: Vec<&String> = pre.keys().collect();
    let mats: Vec<&Matrix<FieldElem>> = pre.values().collect();
    let owned: Vec<Matrix<FieldElem>> = mats.iter().map(|m| (*m).clone()).collect();
    let span_rank = span_dimension(&owned)?;
    let mut candidates: Vec<(String, Matrix<FieldElem>)> = names.iter().map(|g| (g.to_string(), pre[*g].clone())).collect();
    for (i, g) in names.iter().enumerate() {
        for h in &names[i..] {
            candidates.push((format!("{g}*{h}"), &pre[*g] * &pre[*h]));
        }
    }
    let hyperbolic = candidates.into_iter().find(|(_, m)| {
        let t = m.trace();
        let two = t.int_like(2);
        t.minus(&two).signum() > 0 || t.plus(&two).signum() < 0
    });
    let mut ev = Sl2Evidence {
        span_rank,
        infinite_order_word: None,
        infinite_order_trace: None,
        eigenline_breaking_generator: None,
        dense: false,
    };
    if let Some((word, a)) = hyperbolic {
        ev.infinite_order_trace = Some(a.trace().to_string());
        ev.infinite_order_word = Some(word);
        for (g, m) in pre {
            let c = &(m * &a) * &m.inverse()?;
            if &c * &a != &a * &c {
                ev.eigenline_breaking_generator = Some(g.clone());
                break;
            }
        }
    }
    ev.dense = span_rank == 4 && ev.infinite_order_word.is_some() && ev.eigenline_breaking_generator.is_some();
    Ok(ev)
}

/// Builds the density certificate of the bent representation of `spec` in `target`.
///
/// The unbent generators must be `tau_n` of the recorded 2x2 preimages.
pub fn density_certificate(spec: &BendingSpec, target: DensityTarget) -> Result<DensityCertificate> {
    let n = spec.n();
    let pre = spec
        .sl2
        .as_ref()
        .ok_or_else(|| Error::Precondition("density certificates need the 2x2 preimages of the generators".into()))?;
    let field = spec.field();
    let mut lifted = BTreeMap::new();
    for (g, m) in pre {
        let m = m.try_map(|e| e.lift_to(field))?;
        let image = spec.assignment.get(g).ok_or_else(|| Error::UnknownGenerator(g.clone()))?;
        if tau(n, &m)? != *image {
            return Err(Error::Precondition(format!("generator {g} is not tau_{n} of its recorded preimage")));
        }
        lifted.insert(g.clone(), m);
    }
    match target {
        DensityTarget::Sp if n % 2 == 1 => return Err(Error::Precondition("Sp needs even n".into())),
        DensityTarget::SO if n.is_multiple_of(2) => return Err(Error::Precondition("SO needs odd n".into())),
        DensityTarget::G2 if n != 7 => return Err(Error::Precondition("G2 needs n = 7".into())),
        _ => {}
    }
    let sl2_dense = sl2_evidence(&lifted)?;
    let b = &spec.b;
    let j = j_matrix_over(n, &b[(0, 0)].one_like());
    let g2_member = if n == 7 { Some(in_g2(b)?) } else { None };
    let breaks = BreakingFlags {
        form_jn: !preserves_form(b, &j, true)?,
        tau_pgl2: !is_tau_pgl2_diagonal(b)?,
        g2: g2_member.map(|x| !x),
    };
    let mut required = vec!["tau_pgl2".to_string()];
    if target == DensityTarget::SLn {
        required.insert(0, "form_jn".to_string());
    }
    if target == DensityTarget::SO && n == 7 {
        required.push("g2".to_string());
    }
    let flag = |name: &str| match name {
        "form_jn" => breaks.form_jn,
        "tau_pgl2" => breaks.tau_pgl2,
        _ => breaks.g2 == Some(true),
    };
    let contained_in_target = match target {
        DensityTarget::SLn => true,
        DensityTarget::Sp | DensityTarget::SO => preserves_form(b, &j, false)?,
        DensityTarget::G2 => g2_member == Some(true),
    };
    let valid = sl2_dense.dense && required.iter().all(|r| flag(r)) && contained_in_target;
    Ok(DensityCertificate {
        target,
        n,
        sl2_dense,
        breaks,
        required,
        contained_in_target,
        assumptions: vec![DENSITY_ASSUMPTION.to_string()],
        valid,
    })
}
