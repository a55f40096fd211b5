//! Exploratory trace sets of sampled words in `G_2(F_p)` for small primes.

use hitchin_forge::modp::g2_trace_explore;

fn main() -> hitchin_forge::Result<()> {
    for p in [7, 11, 13] {
        let r = g2_trace_explore(p, 5)?;
        println!(
            "p = {p}, words up to length {}: generators in G2 {}, {} of {p} traces reached {:?}",
            r.word_length,
            r.generators_in_g2,
            r.traces.len(),
            r.traces
        );
    }
    Ok(())
}
