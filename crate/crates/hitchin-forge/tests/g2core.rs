//! Cross product identities, the split octonion norm and `G_2` membership.

mod common;

use hitchin_forge::bender::{b0_family, B0Kind};
use hitchin_forge::exactnum::{fundamental_unit, int, Rational};
use hitchin_forge::g2core::{cross7, in_g2, j7_pairing, oct_mul, oct_norm, Octonion};
use hitchin_forge::symrep::tau;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn vec7() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-15i64..=15, 1i64..=5).prop_map(|(n, d)| Rational::new(n.into(), d.into())), 7)
}

proptest! {
    #[test]
    fn cross_product_identities(v in vec7(), w in vec7()) {
        let c = cross7(&v, &w).unwrap();
        prop_assert_eq!(j7_pairing(&v, &c).unwrap(), int(0));
        prop_assert_eq!(j7_pairing(&w, &c).unwrap(), int(0));
        let vw = j7_pairing(&v, &w).unwrap();
        let rhs = j7_pairing(&v, &v).unwrap() * j7_pairing(&w, &w).unwrap() - &vw * &vw;
        prop_assert_eq!(j7_pairing(&c, &c).unwrap(), rhs);
        let anti: Vec<Rational> = cross7(&w, &v).unwrap().into_iter().map(|x| -x).collect();
        prop_assert_eq!(c, anti);
    }

    #[test]
    fn octonion_norm_is_multiplicative(v in vec7(), w in vec7(), t in -9i64..9, s in -9i64..9) {
        let x = Octonion::new(int(t), v).unwrap();
        let y = Octonion::new(int(s), w).unwrap();
        prop_assert_eq!(oct_norm(&oct_mul(&x, &y).unwrap()).unwrap(), oct_norm(&x).unwrap() * oct_norm(&y).unwrap());
        let one = Octonion::one(&int(0));
        prop_assert_eq!(oct_mul(&one, &x).unwrap(), x);
    }

    #[test]
    fn tau7_lands_in_g2(seed in any::<u64>()) {
        let m = common::random_sl2q(&mut ChaCha8Rng::seed_from_u64(seed), 9);
        prop_assert!(in_g2(&tau(7, &m).unwrap()).unwrap());
    }
}

#[test]
fn bending_matrices_inside_and_outside_g2() {
    let w = fundamental_unit(3).unwrap().element();
    assert!(in_g2(&b0_family(B0Kind::G2, 7, &w, 1).unwrap()).unwrap());
    assert!(!in_g2(&b0_family(B0Kind::SoN7, 7, &w, 1).unwrap()).unwrap());
    assert!(!in_g2(&b0_family(B0Kind::SoOdd, 7, &w, 1).unwrap()).unwrap());
}
