//! Hilbert symbols and the invariants of the forms `J_n`.

use hitchin_forge::exactnum::int;
use hitchin_forge::qforms::{form_invariants, forms_equivalent, hilbert_symbol, indefinite_identity, Place};
use hitchin_forge::symrep::j_matrix;

fn main() -> hitchin_forge::Result<()> {
    for (a, b) in [(-1, -1), (2, 3), (3, 3)] {
        let at = |v| hilbert_symbol(&int(a), &int(b), v);
        println!("({a},{b}): at 2 {:+}, at 3 {:+}, at inf {:+}", at(Place::Two), at(Place::Odd(3)), at(Place::Infinity));
    }
    for n in (3..=11).step_by(2) {
        let inv = form_invariants(&j_matrix(n))?;
        let k = (n - 1) / 2;
        let i = indefinite_identity(k + 1, k);
        let twin = forms_equivalent(&j_matrix(n), &i)? || forms_equivalent(&j_matrix(n), &i.negated())?;
        println!(
            "J_{n}: signature {:?}, disc {}, hasse at 2 {:+}, equivalent to +-I_{{{},{}}}: {twin}",
            inv.signature,
            inv.disc,
            inv.hasse_at(Place::Two),
            k + 1,
            k
        );
    }
    Ok(())
}
