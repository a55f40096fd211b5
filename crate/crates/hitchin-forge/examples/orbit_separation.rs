//! Orbit-separation certificates from non-surjective trace polynomials modulo p.

use hitchin_forge::bender::{b0_family, B0Kind};
use hitchin_forge::exactnum::fundamental_unit;
use hitchin_forge::modp::{find_nonsurjective_primes, separation_certificate};

fn main() -> hitchin_forge::Result<()> {
    let w = fundamental_unit(3)?.element();
    let b = b0_family(B0Kind::SuSplitA, 3, &w, 1)?;
    for p in [3, 5, 7] {
        let c = separation_certificate(3, &b, p, 3)?;
        println!(
            "p = {p}: image {:?} of {}, ord(B mod p) = {} (verified {}), sampled traces inside image: {}",
            c.image, c.trace_polynomial, c.b_order, c.b_order_verified, c.sampled_within_image
        );
    }
    println!("P_5 is not surjective modulo {:?}", find_nonsurjective_primes(5, 50)?);
    Ok(())
}
