//! `tau_n`, `J_n`, the trace polynomial and the cocycle matrices.

mod common;

use hitchin_forge::exactnum::{int, Matrix, Rational};
use hitchin_forge::modp::poly_image;
use hitchin_forge::symrep::{
    cocycle_commutes_with_j, cocycle_matrix, hermitian_h, hermitian_symmetry_holds, j_matrix, so_form_from_cocycle, tau,
    trace_poly, ExtensionCase, SignPair,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sl2q() -> impl Strategy<Value = Matrix<Rational>> {
    any::<u64>().prop_map(|seed| common::random_sl2q(&mut ChaCha8Rng::seed_from_u64(seed), 12))
}

proptest! {
    #[test]
    fn tau_matches_polynomial_expansion(m in sl2q(), n in 1usize..=7) {
        prop_assert_eq!(tau(n, &m).unwrap(), common::tau_expand(n, &m));
    }

    #[test]
    fn trace_polynomial_gives_traces(m in sl2q(), n in 1usize..=8) {
        let t = tau(n, &m).unwrap().trace();
        prop_assert_eq!(trace_poly(n).unwrap().eval(&m.trace()), t);
    }

    #[test]
    fn tau_preserves_j(m in sl2q(), n in 2usize..=8) {
        let t = tau(n, &m).unwrap();
        let j = j_matrix(n);
        prop_assert_eq!(&(&t.transpose() * &j) * &t, j);
    }
}

#[test]
fn j_matrix_matches_definition_and_parity() {
    for n in 1..=9 {
        let j = j_matrix(n);
        assert_eq!(j, common::j_direct(n));
        let expected = if n % 2 == 1 { j.clone() } else { j.negated() };
        assert_eq!(j.transpose(), expected, "n = {n}");
    }
}

#[test]
fn polynomial_images_match_brute_force() {
    for n in 2..=8 {
        for p in common::odd_primes(31) {
            let image: Vec<u64> = poly_image(n, p as u32).unwrap().into_iter().map(u64::from).collect();
            let brute: Vec<u64> = common::trace_image_brute(n, p).into_iter().collect();
            assert_eq!(image, brute, "n = {n}, p = {p}");
        }
    }
}

#[test]
fn cocycle_matrices_and_hermitian_forms() {
    for s in SignPair::ALL {
        let t = cocycle_matrix(s);
        let det = t.det().unwrap();
        assert_eq!(det, int(i64::from(s.a * s.b)));
        for n in 2..=8 {
            assert!(hermitian_symmetry_holds(n, s).unwrap(), "n = {n}, {s}");
            assert!(cocycle_commutes_with_j(n, s).unwrap(), "n = {n}, {s}");
            assert!(!hermitian_h(n, s).unwrap().det().unwrap().eq(&int(0)));
        }
    }
    assert_eq!(SignPair::parse("-,+").unwrap(), SignPair { a: -1, b: 1 });
    assert!(SignPair::parse("+").is_err());
}

#[test]
fn orthogonal_forms_for_larger_dimensions() {
    for n in [9, 11] {
        for (case, a, b) in [(ExtensionCase::Degree2, 3, 3), (ExtensionCase::Degree4, 2, 3)] {
            let r = so_form_from_cocycle(n, a, b, case).unwrap();
            let expected = common::displayed_diagonal(n, a, b, case == ExtensionCase::Degree4);
            assert_eq!(r.form, Matrix::diagonal(&expected), "n = {n}, {case}");
            assert_eq!(r.invariants.hasse_product(), 1);
        }
    }
    assert!(so_form_from_cocycle(5, 3, 5, ExtensionCase::Degree2).is_err());
    assert!(so_form_from_cocycle(4, 3, 5, ExtensionCase::Degree4).is_err());
}
