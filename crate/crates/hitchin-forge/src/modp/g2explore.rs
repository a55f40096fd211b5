//! Exploratory search for the trace set of `G_2(F_p)`.
//!
//! Whether every element of `F_p` is the trace of some element of `G_2(F_p)`
//! is left open here. The group is far too large for a full closure once
//! `p >= 7`, and for `p <= 5` the form `J_7` and the cross-product constants
//! vanish modulo `p`, so the search samples reduced words in a few explicit
//! elements of `G_2(F_p)` and reports only what those words reach.

use serde::Serialize;

use super::fq::{Fq, FqElem};
use super::groups::trace_set_words;
use crate::error::{Error, Result};
use crate::exactnum::Matrix;
use crate::g2core::in_g2;
use crate::symrep::tau;

/// Traces reached by sampled words in `G_2(F_p)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct G2Exploration {
    /// The prime.
    pub p: u32,
    /// Maximal reduced word length sampled.
    pub word_length: usize,
    /// Whether every generator passed the `G_2` membership test over `F_p`.
    pub generators_in_g2: bool,
    /// The traces found, as residues `0..p`.
    pub traces: Vec<u32>,
    /// Whether the traces found exhaust `F_p`.
    pub covers_field: bool,
}

/// The smallest generator of `F_p^*`.
fn primitive_root(fq: Fq) -> FqElem {
    let p = u64::from(fq.p());
    (2..fq.p())
        .map(|g| fq.int(i64::from(g)))
        .find(|g| g.multiplicative_order() == Some(p - 1))
        .expect("F_p^* is cyclic")
}

/// `tau_7(S)`, `tau_7(T)` and the torus element `diag(t, t, 1, 1, 1, 1/t, 1/t)`
/// over `F_p`, with `t` a primitive root.
pub fn g2_generators(p: u32) -> Result<Vec<Matrix<FqElem>>> {
    if p < 7 {
        return Err(Error::Precondition(format!("J_7 vanishes modulo {p}; the search needs p >= 7")));
    }
    let fq = Fq::prime(p)?;
    let m = |r: [[i64; 2]; 2]| Matrix::from_rows(r.iter().map(|row| row.iter().map(|&x| fq.int(x)).collect()).collect());
    let s = tau(7, &m([[0, -1], [1, 0]])?)?;
    let t = tau(7, &m([[1, 1], [0, 1]])?)?;
    let g = primitive_root(fq);
    let gi = g.pow(u64::from(p) - 2);
    let one = fq.int(1);
    let torus = Matrix::diagonal(&[g, g, one, one, one, gi, gi]);
    Ok(vec![s, t, torus])
}

/// Traces of all reduced words of length at most `word_length` in
/// [`g2_generators`] and their inverses.
pub fn g2_trace_explore(p: u32, word_length: usize) -> Result<G2Exploration> {
    let gens = g2_generators(p)?;
    let mut generators_in_g2 = true;
    for g in &gens {
        generators_in_g2 &= in_g2(g)?;
    }
    let traces: Vec<u32> = trace_set_words(&gens, word_length)?.into_iter().map(|t| t.coords().0).collect();
    let covers_field = traces.len() == p as usize;
    Ok(G2Exploration { p, word_length, generators_in_g2, traces, covers_field })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_lie_in_g2() {
        for p in [7, 11, 13] {
            let r = g2_trace_explore(p, 2).unwrap();
            assert!(r.generators_in_g2, "p={p}");
            assert!(r.traces.contains(&(7 % p)));
        }
    }

    #[test]
    fn small_primes_are_rejected() {
        assert!(g2_generators(5).is_err());
    }
}
