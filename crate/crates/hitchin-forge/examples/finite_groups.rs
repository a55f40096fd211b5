//! Orders and trace sets of small finite classical groups.

use hitchin_forge::modp::{family_order, family_trace_set, group_order_formula, GroupFamily, DEFAULT_CAP};

fn main() -> hitchin_forge::Result<()> {
    for (fam, n, p) in [(GroupFamily::SL, 2, 5), (GroupFamily::SL, 3, 3), (GroupFamily::SU, 3, 3), (GroupFamily::Sp, 4, 3)] {
        let order = family_order(fam, n, p, DEFAULT_CAP)?;
        let formula = group_order_formula(fam, n, u64::from(p))?;
        println!("|{fam}({n},{p})| = {order} (formula {formula})");
    }
    for (fam, n, p) in [(GroupFamily::SL, 3, 5), (GroupFamily::SU, 3, 3), (GroupFamily::Omega, 4, 5)] {
        let traces: Vec<String> = family_trace_set(fam, n, p, DEFAULT_CAP)?.iter().map(ToString::to_string).collect();
        println!("Tr {fam}({n},{p}) = {{{}}}", traces.join(", "));
    }
    Ok(())
}
