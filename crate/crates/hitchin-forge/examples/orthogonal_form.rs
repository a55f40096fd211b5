//! The rational orthogonal form obtained from the cocycle in dimensions 5 and 7.

use hitchin_forge::symrep::{so_form_from_cocycle, ExtensionCase};

fn main() -> hitchin_forge::Result<()> {
    for (n, a, b) in [(5, 3, 3), (5, 3, 5), (7, 2, 2), (7, 2, 3)] {
        let case = ExtensionCase::of(a, b)?;
        let r = so_form_from_cocycle(n, a, b, case)?;
        let diag: Vec<String> = r.form.diagonal_entries().iter().map(ToString::to_string).collect();
        let hasse: Vec<String> = r.invariants.hasse.iter().map(|(v, s)| format!("{v}:{s:+}")).collect();
        println!("n = {n}, (a,b) = ({a},{b}), {case}: diag({}), hasse {}", diag.join(", "), hasse.join(" "));
    }
    Ok(())
}
