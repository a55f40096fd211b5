//! The quaternion algebra (3,3), its ramification and a few norm-one lattice elements.

use hitchin_forge::quatalg::{gamma_enumerate, is_division, QuatAlgebra};

fn main() -> hitchin_forge::Result<()> {
    let alg = QuatAlgebra::new(3, 3)?;
    let r = is_division(&alg);
    let places: Vec<String> = r.ramified.iter().map(ToString::to_string).collect();
    println!("(3,3): division = {}, ramified at {}", r.is_division, places.join(", "));
    let els = gamma_enumerate(3, 3, 1)?;
    println!("{} elements of height at most 1:", els.len());
    for g in els.iter().take(4) {
        let m = g.matrix()?;
        println!("  {:?} -> [[{}, {}], [{}, {}]]", g.x, m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]);
    }
    Ok(())
}
