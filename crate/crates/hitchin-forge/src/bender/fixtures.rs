//! Ready-made bending specs used by tests, examples and the command line.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::ToPrimitive;

use super::spec::{BendingMode, BendingSpec, CurveSpec, Role, SurfacePresentation};
use crate::error::{Error, Result};
use crate::exactnum::{fundamental_unit, rat, FieldDescriptor, FieldElem, Matrix, Rational};
use crate::quatalg::GammaElement;
use crate::symrep::tau;

fn qmat(rows: [[Rational; 2]; 2]) -> Matrix<Rational> {
    Matrix::from_rows(rows.into_iter().map(Vec::from).collect()).expect("2x2")
}

/// `A = [[4,1],[3,1]]`, `B = [[2,1/2],[30,8]]` and `D = diag(4, 1/4)` with
/// `A B A^-1 B^-1 = D`.
pub fn commutator_triple() -> (Matrix<Rational>, Matrix<Rational>, Matrix<Rational>) {
    let i = |x: i64| rat(x, 1);
    let a = qmat([[i(4), i(1)], [i(3), i(1)]]);
    let b = qmat([[i(2), rat(1, 2)], [i(30), i(8)]]);
    let d = qmat([[i(4), i(0)], [i(0), rat(1, 4)]]);
    (a, b, d)
}

fn lift_rational(m: &Matrix<Rational>, desc: &Arc<FieldDescriptor>) -> Matrix<FieldElem> {
    m.map(|r| FieldElem::from_rational(desc, r.clone()))
}

/// A genus-2 representation `tau_n` of 2x2 rational matrices satisfying the
/// surface relator, bent by the diagonal `b` along `curve`.
///
/// Separating (`h = 1`): `a1 = A, b1 = B, a2 = B, b2 = A`, so the curve
/// `[a1,b1]` maps to the diagonal `tau_n(D)`.
/// Non-separating (handle 1): `a1 = D, b1 = A, a2 = A, b2 = D`, so the curve
/// `a1` is diagonal.
pub fn genus2_spec(n: usize, b: &Matrix<FieldElem>, curve: CurveSpec) -> Result<BendingSpec> {
    let (a, bb, d) = commutator_triple();
    let desc = b[(0, 0)].descriptor().clone();
    let order: [&Matrix<Rational>; 4] = match curve {
        CurveSpec::Separating { h: 1 } => [&a, &bb, &bb, &a],
        CurveSpec::NonSeparating { handle: 1 } => [&d, &a, &a, &d],
        other => return Err(Error::Precondition(format!("the genus-2 fixture supports h = 1 or handle 1, not {other:?}"))),
    };
    let mut assignment = BTreeMap::new();
    let mut sl2 = BTreeMap::new();
    for (name, m) in ["a1", "b1", "a2", "b2"].into_iter().zip(order) {
        let m = lift_rational(m, &desc);
        assignment.insert(name.to_string(), tau(n, &m)?);
        sl2.insert(name.to_string(), m);
    }
    let mode = BendingMode::Presentation { presentation: SurfacePresentation::new(2)?, curve };
    BendingSpec::new(mode, assignment, b.clone(), Some(sl2))
}

/// The norm-one unit `x + y sqrt m` with `y > 0` of smallest size.
fn norm_one_unit(m: i64) -> Result<(i64, i64)> {
    let u = fundamental_unit(m)?;
    let (x, y) = if u.norm == 1 { (u.x.clone(), u.y.clone()) } else { (&u.x * &u.x + m * &u.y * &u.y, 2 * &u.x * &u.y) };
    let conv = |v: &num_bigint::BigInt| v.to_i64().ok_or_else(|| Error::Precondition(format!("unit for {m} is too large")));
    Ok((conv(&x)?, conv(&y)?))
}

/// A free-mode spec on two elements of `Gamma_{a,b}`:
/// `g1 = x + y i` (diagonal, the curve) and `g2 = x' + y' j` (conjugated by `B`),
/// where `x + y sqrt a` and `x' + y' sqrt b` are norm-one units.
pub fn gamma_free_spec(a: i64, b: i64, n: usize, bend: &Matrix<FieldElem>) -> Result<BendingSpec> {
    let (x1, y1) = norm_one_unit(a)?;
    let (x2, y2) = norm_one_unit(b)?;
    let g1 = GammaElement::new(a, b, [x1, y1, 0, 0])?.matrix()?;
    let g2 = GammaElement::new(a, b, [x2, 0, y2, 0])?.matrix()?;
    let desc = super::spec::common_field([&g1, &g2, bend])?;
    let lift = |m: &Matrix<FieldElem>| m.try_map(|e| e.lift_to(&desc));
    let (g1, g2) = (lift(&g1)?, lift(&g2)?);
    let mut assignment = BTreeMap::new();
    assignment.insert("g1".to_string(), tau(n, &g1)?);
    assignment.insert("g2".to_string(), tau(n, &g2)?);
    let sl2 = BTreeMap::from([("g1".to_string(), g1), ("g2".to_string(), g2)]);
    let roles = BTreeMap::from([("g2".to_string(), Role::Conjugated)]);
    let mode = BendingMode::Free { gamma: "g1".to_string(), roles };
    BendingSpec::new(mode, assignment, bend.clone(), Some(sl2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Ring;

    #[test]
    fn commutator_triple_holds() {
        let (a, b, d) = commutator_triple();
        let c = &(&(&a * &b) * &a.inverse().unwrap()) * &b.inverse().unwrap();
        assert_eq!(c, d);
        assert!(b.det().unwrap().is_one_elem());
    }

    #[test]
    fn norm_one_units() {
        assert_eq!(norm_one_unit(3).unwrap(), (2, 1));
        assert_eq!(norm_one_unit(2).unwrap(), (3, 2));
    }
}
