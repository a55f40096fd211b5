//! Zariski-density certificates for bent representations of a pair of lattice elements.

use hitchin_forge::bender::{b0_family, density_certificate, gamma_free_spec, B0Kind, DensityTarget};
use hitchin_forge::exactnum::fundamental_unit;

fn main() -> hitchin_forge::Result<()> {
    let w = fundamental_unit(3)?.element();
    let cases = [
        (B0Kind::SuSplitA, 3, DensityTarget::SLn),
        (B0Kind::Sp, 4, DensityTarget::Sp),
        (B0Kind::SoOdd, 5, DensityTarget::SO),
        (B0Kind::SoN7, 7, DensityTarget::SO),
        (B0Kind::G2, 7, DensityTarget::G2),
    ];
    for (kind, n, target) in cases {
        let b = b0_family(kind, n, &w, 1)?;
        let cert = density_certificate(&gamma_free_spec(3, 3, n, &b)?, target)?;
        println!("{kind:<10} -> {target:<3}: valid {}, requires {:?}", cert.valid, cert.required);
    }
    Ok(())
}
