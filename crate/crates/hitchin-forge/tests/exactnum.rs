//! Field, Galois and matrix identities over multiquadratic fields, and Pell units.

use std::sync::Arc;

use hitchin_forge::exactnum::{
    fundamental_unit, int, rat, Field, FieldDescriptor, FieldElem, GaloisAction, Matrix, Rational, Ring,
};
use proptest::prelude::*;

fn desc23() -> Arc<FieldDescriptor> {
    Arc::new(FieldDescriptor::new(vec![2, 3]).unwrap())
}

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn elem23() -> impl Strategy<Value = FieldElem> {
    prop::collection::vec(small_rational(), 4).prop_map(|c| FieldElem::from_coeffs(&desc23(), c).unwrap())
}

fn rational_matrix(n: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(small_rational(), n * n).prop_map(move |v| Matrix::new(n, n, v).unwrap())
}

proptest! {
    #[test]
    fn field_axioms_in_q_sqrt2_sqrt3(x in elem23(), y in elem23(), z in elem23()) {
        prop_assert_eq!(x.times(&y).times(&z), x.times(&y.times(&z)));
        prop_assert_eq!(x.times(&y.plus(&z)), x.times(&y).plus(&x.times(&z)));
        prop_assert_eq!(x.times(&y), y.times(&x));
        if !x.is_zero_elem() {
            prop_assert!(x.times(&x.inverse().unwrap()).is_one_elem());
        }
    }

    #[test]
    fn galois_actions_are_ring_homomorphisms(x in elem23(), y in elem23()) {
        for g in GaloisAction::all(&desc23()) {
            let gx = g.apply(&x).unwrap();
            let gy = g.apply(&y).unwrap();
            prop_assert_eq!(g.apply(&x.times(&y)).unwrap(), gx.times(&gy));
            prop_assert_eq!(g.apply(&x.plus(&y)).unwrap(), gx.plus(&gy));
            prop_assert_eq!(g.apply(&gx).unwrap(), x.clone());
        }
    }

    #[test]
    fn text_round_trip(x in elem23()) {
        let back = FieldElem::parse(&x.to_string(), &desc23()).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn quadratic_norm_is_multiplicative(a in -30i64..30, b in -30i64..30, c in -30i64..30, e in -30i64..30) {
        let x = FieldElem::quadratic(5, a, b).unwrap();
        let y = FieldElem::quadratic(5, c, e).unwrap();
        prop_assert_eq!(x.times(&y).norm(), x.norm() * y.norm());
        prop_assert_eq!(x.norm(), int(a * a - 5 * b * b));
    }

    #[test]
    fn determinant_is_multiplicative(a in rational_matrix(3), b in rational_matrix(3)) {
        prop_assert_eq!((&a * &b).det().unwrap(), a.det().unwrap() * b.det().unwrap());
    }

    #[test]
    fn inverse_is_two_sided(a in rational_matrix(4)) {
        if let Ok(inv) = a.inverse() {
            prop_assert!((&a * &inv).is_identity());
            prop_assert!((&inv * &a).is_identity());
        } else {
            prop_assert_eq!(a.det().unwrap(), int(0));
        }
    }
}

#[test]
fn pell_units_solve_the_equation() {
    for d in [2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 29, 31, 43, 46, 61, 94] {
        let u = fundamental_unit(d).unwrap();
        let w = u.element();
        assert_eq!(w.norm(), int(i64::from(u.norm)), "d = {d}");
        assert!(w.is_integral());
    }
    assert_eq!(fundamental_unit(3).unwrap().element().to_string(), "2+sqrt(3)");
    assert!(fundamental_unit(9).is_err());
}

#[test]
fn unit_powers_stay_units() {
    let w = fundamental_unit(3).unwrap().element();
    for k in -4..=4 {
        assert!(w.pow(k).norm() == int(1));
        assert!(w.pow(k).times(&w.pow(-k)).is_one_elem());
    }
}
