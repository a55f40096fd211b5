//! Bending a genus-2 representation along a separating and a non-separating curve.

use hitchin_forge::bender::{b0_family, bend_eval_str, genus2_spec, verify_b0, B0Kind, CurveSpec};
use hitchin_forge::exactnum::{fundamental_unit, Ring};

fn main() -> hitchin_forge::Result<()> {
    let w = fundamental_unit(3)?.element();
    for kind in B0Kind::ALL {
        let n = kind.default_n();
        let b = b0_family(kind, n, &w, 1)?;
        let r = verify_b0(kind, &b)?;
        println!("{kind:<14} n = {n}: membership {}, breaking {}", r.membership, r.breaking);
    }
    let b = b0_family(B0Kind::SuSplitA, 3, &w, 1)?;
    for curve in [CurveSpec::Separating { h: 1 }, CurveSpec::NonSeparating { handle: 1 }] {
        let spec = genus2_spec(3, &b, curve)?;
        let r = spec.relator_ok()?;
        let relator = bend_eval_str(&spec, "[a1,b1][a2,b2]")?;
        println!("{curve:?}: relator holds {}, identity {}", r.holds, relator.is_identity());
    }
    let mut bad = b.clone();
    bad[(0, 1)] = w.one_like();
    let r = genus2_spec(3, &bad, CurveSpec::Separating { h: 1 })?.relator_ok()?;
    println!("non-commuting control: relator holds {}", r.holds);
    Ok(())
}
