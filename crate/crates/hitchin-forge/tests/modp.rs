//! Reduction modulo primes, finite fields, group closures and trace witnesses.

mod common;

use hitchin_forge::exactnum::{fundamental_unit, FieldElem, Field, Ring};
use hitchin_forge::modp::{
    family_generators, family_order, group_closure, group_order_formula, in_family, trace_witness, Fq, GroupFamily,
    ReductionContext, ReductionMode, DEFAULT_CAP,
};
use hitchin_forge::Error;
use proptest::prelude::*;

fn zsqrt3() -> impl Strategy<Value = FieldElem> {
    (-500i64..500, -500i64..500).prop_map(|(x, y)| FieldElem::quadratic(3, x, y).unwrap())
}

proptest! {
    #[test]
    fn reduction_is_a_ring_homomorphism(x in zsqrt3(), y in zsqrt3(), p in prop::sample::select(vec![3u32, 5, 7, 11, 13, 23])) {
        let ctx = ReductionContext::auto(p, 3).unwrap();
        let (rx, ry) = (ctx.reduce(&x).unwrap(), ctx.reduce(&y).unwrap());
        prop_assert_eq!(ctx.reduce(&x.times(&y)).unwrap(), rx.times(&ry));
        prop_assert_eq!(ctx.reduce(&x.plus(&y)).unwrap(), rx.plus(&ry));
    }

    #[test]
    fn finite_field_inverses(p in prop::sample::select(vec![3u32, 5, 7, 11]), a in 0i64..121, b in 0i64..121) {
        let fq = Fq::quadratic(p).unwrap();
        let x = fq.elem(a, b);
        if !x.is_zero_elem() {
            prop_assert!(x.times(&x.inverse().unwrap()).is_one_elem());
            prop_assert_eq!(x.pow(u64::from(fq.order()) - 1), fq.int(1));
        }
        prop_assert_eq!(x.norm(), x.times(&x.conj()));
    }
}

#[test]
fn reduction_modes() {
    assert!(matches!(ReductionContext::auto(11, 3).unwrap().mode, ReductionMode::Split { .. }));
    assert_eq!(ReductionContext::auto(5, 3).unwrap().mode, ReductionMode::Inert);
    assert_eq!(ReductionContext::auto(3, 3).unwrap().mode, ReductionMode::Ramified);
    assert!(ReductionContext::new(3, 3).is_err());
    let w = fundamental_unit(3).unwrap().element();
    let ctx = ReductionContext::auto(5, 3).unwrap();
    assert_eq!(ctx.reduce(&w).unwrap().to_string(), "2+r");
    let half = FieldElem::quadratic(3, 0, 0).unwrap().int_like(2).inverse().unwrap();
    assert_eq!(ctx.reduce(&half).unwrap(), ctx.target().int(3));
}

#[test]
fn closure_orders_match_formulas() {
    for (fam, n, p) in [(GroupFamily::SL, 2, 7), (GroupFamily::SL, 3, 2), (GroupFamily::SU, 2, 5), (GroupFamily::Sp, 2, 7), (GroupFamily::Sp, 4, 2)] {
        let formula = group_order_formula(fam, n, u64::from(p)).unwrap();
        let got = family_order(fam, n, p, DEFAULT_CAP).unwrap();
        assert_eq!(got as u128, formula, "{fam}({n},{p})");
    }
    assert_eq!(common::order_su(3, 3), group_order_formula(GroupFamily::SU, 3, 3).unwrap());
    assert_eq!(family_order(GroupFamily::SO, 3, 5, DEFAULT_CAP).unwrap(), 120);
    assert_eq!(family_order(GroupFamily::Omega, 3, 5, DEFAULT_CAP).unwrap(), 60);
}

#[test]
fn generators_lie_in_their_family() {
    for (fam, n, p) in [(GroupFamily::SL, 3, 5), (GroupFamily::SU, 3, 3), (GroupFamily::Sp, 4, 3), (GroupFamily::SO, 4, 5), (GroupFamily::Omega, 4, 5)] {
        for g in family_generators(fam, n, p).unwrap() {
            assert!(in_family(fam, &g).unwrap(), "{fam}({n},{p})");
        }
    }
}

#[test]
fn closure_cap_is_reported() {
    let gens = family_generators(GroupFamily::SL, 3, 5).unwrap();
    assert!(matches!(group_closure(&gens, 1000), Err(Error::CapExceeded(_))));
}

#[test]
fn trace_witnesses_cover_the_fields() {
    for (fam, n, p) in [(GroupFamily::SL, 3, 7), (GroupFamily::Sp, 4, 7), (GroupFamily::SU, 3, 5), (GroupFamily::SU, 4, 3), (GroupFamily::Omega, 4, 7), (GroupFamily::Omega, 5, 7)] {
        let fq = fam.field(p).unwrap();
        for t in fq.elements() {
            match trace_witness(fam, n, p, t) {
                Ok(w) => {
                    assert!(w.verified, "{fam}({n},{p}) target {t}");
                    assert_eq!(w.trace, t);
                }
                Err(Error::NoWitness(_)) => assert_eq!(fam, GroupFamily::Omega, "{fam}({n},{p}) target {t}"),
                Err(e) => panic!("{fam}({n},{p}) target {t}: {e}"),
            }
        }
    }
}
