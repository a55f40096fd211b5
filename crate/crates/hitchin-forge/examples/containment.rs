//! Element-by-element check that `tau_n` of the norm-one lattice preserves the Hermitian form.

use hitchin_forge::lattices::{containment_check, containment_check_with};
use hitchin_forge::symrep::SignPair;

fn main() -> hitchin_forge::Result<()> {
    let signs = SignPair::parse("--")?;
    for n in [3, 4, 5] {
        let r = containment_check(3, 3, n, signs, 3)?;
        println!("n = {n}: {} of {} elements pass", r.passed, r.total);
    }
    let bad = containment_check_with(3, 3, 3, signs, 2, true)?;
    println!("corrupted control: {} of {} pass", bad.passed, bad.total);
    Ok(())
}
