//! Lattice membership predicates and the batch containment check.

mod common;

use hitchin_forge::exactnum::{int, Matrix, Rational};
use hitchin_forge::lattices::{containment_check, containment_check_with, in_sl_n_z, in_so_q, in_sp};
use hitchin_forge::symrep::{j_matrix, tau, SignPair};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sl2z() -> impl Strategy<Value = Matrix<Rational>> {
    (any::<u64>(), 1usize..10).prop_map(|(seed, len)| common::random_sl2z_word(&mut ChaCha8Rng::seed_from_u64(seed), len))
}

proptest! {
    #[test]
    fn tau_of_integer_matrices_lies_in_the_lattices(m in sl2z(), n in 2usize..=7) {
        let t = tau(n, &m).unwrap();
        prop_assert!(in_sl_n_z(&t).unwrap());
        if n % 2 == 1 {
            prop_assert!(in_so_q(&t, &j_matrix(n)).unwrap());
        } else {
            prop_assert!(in_sp(&t, &j_matrix(n)).unwrap());
        }
    }
}

#[test]
fn non_integral_matrices_are_rejected() {
    let m = Matrix::from_rows(vec![vec![int(2), int(0)], vec![int(0), Rational::new(1.into(), 2.into())]]).unwrap();
    assert!(!in_sl_n_z(&m).unwrap());
    assert!(!in_so_q(&tau(3, &m).unwrap(), &j_matrix(3)).unwrap());
}

#[test]
fn containment_for_every_sign_pattern() {
    for (a, b) in [(2, 3), (3, 5)] {
        for s in SignPair::ALL.into_iter().skip(1) {
            for n in 2..=5 {
                let r = containment_check(a, b, n, s, 2).unwrap();
                assert!(r.total > 0 && r.failures.is_empty(), "({a},{b}) {s} n={n}: {:?}", r.failures);
            }
        }
    }
}

#[test]
fn corrupted_matrices_all_fail() {
    let r = containment_check_with(3, 3, 3, SignPair::parse("--").unwrap(), 2, true).unwrap();
    assert_eq!(r.passed, 0);
    assert_eq!(r.failures.len(), r.total);
    assert!(containment_check(3, 3, 3, SignPair::parse("+-").unwrap(), 1).is_err());
}
