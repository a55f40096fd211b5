//! Fundamental units of real quadratic orders and their Galois conjugates.

use hitchin_forge::exactnum::{fundamental_unit, GaloisAction, Ring};

fn main() -> hitchin_forge::Result<()> {
    for d in [2, 3, 5, 7, 13, 61] {
        let u = fundamental_unit(d)?;
        let w = u.element();
        let conj = GaloisAction::flipping(w.descriptor(), d).apply(&w)?;
        println!("d = {d:>2}: unit {w}, norm {:+}, conjugate {conj}, product {}", u.norm, w.times(&conj));
    }
    Ok(())
}
