//! Parsing of matrices and named built-in objects given on the command line.

use std::sync::Arc;

use serde_json::Value;

use crate::bender::{b0_family, common_field, B0Kind};
use crate::error::{Error, Result};
use crate::exactnum::{fundamental_unit, FieldDescriptor, FieldElem, Matrix, Rational};
use crate::symrep::{cocycle_matrix, j_matrix, SignPair};

/// Parameters that named matrices may depend on.
#[derive(Clone, Copy, Debug)]
pub(crate) struct NameContext {
    /// Dimension for `B_0` kinds.
    pub n: Option<usize>,
    /// Radicand of the unit for `B_0` kinds.
    pub d: i64,
    /// Exponent for `B_0` kinds.
    pub k: i64,
}

fn rational_matrix(m: &Matrix<Rational>) -> Matrix<FieldElem> {
    m.map(|r| FieldElem::rational(r.clone()))
}

/// Resolves `J2`..`J9` (any `Jn`), `In`, `T++`/`T+-`/`T-+`/`T--` and the `B_0` kind names.
pub(crate) fn named_matrix(name: &str, ctx: NameContext) -> Result<Option<Matrix<FieldElem>>> {
    let t = name.trim();
    if let Some(rest) = t.strip_prefix('J').or_else(|| t.strip_prefix('I')) {
        if let Ok(n) = rest.parse::<usize>() {
            if n == 0 || n > 64 {
                return Err(Error::Precondition(format!("matrix size {n} out of range")));
            }
            let q = if t.starts_with('J') { j_matrix(n) } else { Matrix::identity(n, &Rational::from_integer(1.into())) };
            return Ok(Some(rational_matrix(&q)));
        }
    }
    if let Some(rest) = t.strip_prefix('T') {
        if let Ok(signs) = SignPair::parse(rest) {
            return Ok(Some(rational_matrix(&cocycle_matrix(signs))));
        }
    }
    if let Ok(kind) = B0Kind::parse(t) {
        let n = ctx.n.unwrap_or_else(|| kind.default_n());
        let unit = fundamental_unit(ctx.d)?.element();
        return Ok(Some(b0_family(kind, n, &unit, ctx.k)?));
    }
    Ok(None)
}

fn entry_text(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string()),
        _ => Err(Error::Parse(format!("matrix entries must be strings or integers, got {v}"))),
    }
}

/// Parses a JSON array of rows (entries as strings over the field grammar, or
/// integers) or a named matrix, lifting every entry to the smallest common field.
pub(crate) fn parse_matrix(text: &str, ctx: NameContext) -> Result<Matrix<FieldElem>> {
    if let Some(m) = named_matrix(text, ctx)? {
        return Ok(m);
    }
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(format!("not a matrix name or JSON array: {e}")))?;
    let rows = value.as_array().ok_or_else(|| Error::Parse("a matrix is a JSON array of rows".into()))?;
    let parsed: Vec<Vec<FieldElem>> = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| Error::Parse("each matrix row is a JSON array".into()))?
                .iter()
                .map(|e| FieldElem::parse_auto(&entry_text(e)?))
                .collect()
        })
        .collect::<Result<_>>()?;
    let m = Matrix::from_rows(parsed)?;
    let desc = common_field(std::iter::once(&m))?;
    m.try_map(|e| e.lift_to(&desc))
}

/// Converts a matrix with rational entries, failing otherwise.
pub(crate) fn to_rational(m: &Matrix<FieldElem>) -> Result<Matrix<Rational>> {
    m.try_map(|e| e.as_rational().ok_or_else(|| Error::WrongField(format!("{e} is not rational"))))
}

/// Lifts a matrix to `Q(sqrt d)`.
pub(crate) fn lift_to_radicand(m: &Matrix<FieldElem>, d: i64) -> Result<Matrix<FieldElem>> {
    let desc = Arc::new(FieldDescriptor::new(vec![d])?);
    m.try_map(|e| e.lift_to(&desc))
}

