//! The orbit-separation certificate: the image of the trace polynomial modulo
//! `p` and the order of the bending matrix modulo `p`.

use std::collections::BTreeSet;

use serde::Serialize;

use super::fq::FqElem;
use super::groups::trace_set_words;
use super::reduce::{ReductionContext, ReductionMode};
use crate::bender::gamma_free_spec;
use crate::error::{Error, Result};
use crate::exactnum::{FieldElem, Matrix};
use crate::qforms::is_prime;
use crate::symrep::trace_poly;

/// Evidence that bendings by powers of `B` fall into distinct orbits.
///
/// For the representation `rho` built from two `Gamma_{d,d}` elements, every
/// trace of `tau_n` is `P_n` of an integer, so modulo `p` it lies in the image
/// of `P_n`. When that image is a proper subset of `F_p` and `B^k = I` modulo
/// `p`, the bending by `B^k` has the same traces as `rho` modulo `p`. The
/// sampled traces of the bent words are checked against the image, not
/// deduced from it.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeparationCertificate {
    /// Dimension.
    pub n: usize,
    /// The prime.
    pub p: u32,
    /// Radicand of the entries of `B`.
    pub d: i64,
    /// How `sqrt d` was reduced.
    pub mode: ReductionMode,
    /// The trace polynomial, e.g. `t^2-1`.
    pub trace_polynomial: String,
    /// `P_n(F_p)`, sorted.
    pub image: Vec<u32>,
    /// Its size.
    pub image_size: usize,
    /// Whether the image is all of `F_p`.
    pub surjective: bool,
    /// Multiplicative order `k` of `B` modulo `p`.
    pub b_order: u64,
    /// Whether `reduce(B)^k = I` was verified.
    pub b_order_verified: bool,
    /// Maximal word length of the sample.
    pub word_length: usize,
    /// Traces modulo `p` of the bending by `B^k` on every reduced word of length at most `L`.
    pub sampled_traces: Vec<FqElem>,
    /// Whether every sampled trace lies in the image.
    pub sampled_within_image: bool,
    /// Traces of the bending by `B` itself on the same words that fall outside the image.
    pub bent_traces_outside_image: Vec<FqElem>,
}

/// The image of `P_n` on `F_p`.
pub fn poly_image(n: usize, p: u32) -> Result<BTreeSet<u32>> {
    let poly = trace_poly(n)?;
    Ok((0..u64::from(p)).map(|t| poly.eval_mod(t, u64::from(p)) as u32).collect())
}

/// Odd primes `p <= bound` for which `P_n` is not surjective on `F_p`.
pub fn find_nonsurjective_primes(n: usize, bound: u32) -> Result<Vec<u32>> {
    let mut out = Vec::new();
    for p in 3..=bound {
        if is_prime(u64::from(p)) && poly_image(n, p)?.len() < p as usize {
            out.push(p);
        }
    }
    Ok(out)
}

fn radicand_of(b: &Matrix<FieldElem>) -> Result<i64> {
    let mut d = None;
    for e in b.entries() {
        match e.descriptor().radicands() {
            [] => {}
            [x] if d.is_none() || d == Some(*x) => d = Some(*x),
            _ => return Err(Error::Precondition("B must have entries in a single Q(sqrt d)".into())),
        }
    }
    Ok(d.unwrap_or(1))
}

fn order_of_diagonal(m: &Matrix<FqElem>) -> Result<u64> {
    let mut k = 1u64;
    for e in m.diagonal_entries() {
        let o = e.multiplicative_order().ok_or(Error::Singular)?;
        k = num_integer::lcm(k, o);
    }
    Ok(k)
}

fn reduced_generators(ctx: &ReductionContext, n: usize, d: i64, b: &Matrix<FieldElem>) -> Result<Vec<Matrix<FqElem>>> {
    let spec = gamma_free_spec(d, d, n, b)?;
    ["g1", "g2"]
        .iter()
        .map(|g| ctx.reduce_matrix(&spec.bent_generator(g)?.0))
        .collect()
}

/// Builds the certificate for `B` (diagonal over `Z[sqrt d]`) at an odd prime `p`,
/// sampling reduced words of length at most `l`.
///
/// Fails with [`Error::NoWitness`] when `P_n` is surjective modulo `p`.
pub fn separation_certificate(n: usize, b: &Matrix<FieldElem>, p: u32, l: usize) -> Result<SeparationCertificate> {
    if !b.is_diagonal() || b.rows() != n {
        return Err(Error::Precondition(format!("B must be a diagonal {n}x{n} matrix")));
    }
    let d = radicand_of(b)?;
    if d == 1 {
        return Err(Error::Precondition("B must have an irrational entry".into()));
    }
    let ctx = ReductionContext::auto(p, d)?;
    let image = poly_image(n, p)?;
    if image.len() == p as usize {
        return Err(Error::NoWitness(format!("P_{n} is surjective on F_{p}")));
    }
    let rb = ctx.reduce_matrix(b)?;
    let k = order_of_diagonal(&rb)?;
    let b_order_verified = rb.pow(k).is_identity();
    let bk = b.pow(k);
    let in_image = |t: &FqElem| t.is_base() && image.contains(&t.coords().0);
    let sampled: BTreeSet<FqElem> = trace_set_words(&reduced_generators(&ctx, n, d, &bk)?, l)?;
    let bent: BTreeSet<FqElem> = trace_set_words(&reduced_generators(&ctx, n, d, b)?, l)?;
    let sampled_within_image = sampled.iter().all(in_image);
    let outside: Vec<FqElem> = bent.into_iter().filter(|t| !in_image(t)).collect();
    Ok(SeparationCertificate {
        n,
        p,
        d,
        mode: ctx.mode,
        trace_polynomial: trace_poly(n)?.to_string(),
        image_size: image.len(),
        image: image.into_iter().collect(),
        surjective: false,
        b_order: k,
        b_order_verified,
        word_length: l,
        sampled_traces: sampled.into_iter().collect(),
        sampled_within_image,
        bent_traces_outside_image: outside,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bender::{b0_family, B0Kind};
    use crate::exactnum::fundamental_unit;

    #[test]
    fn images_of_p3() {
        assert_eq!(poly_image(3, 5).unwrap(), BTreeSet::from([0, 3, 4]));
        assert_eq!(poly_image(3, 3).unwrap(), BTreeSet::from([0, 2]));
        assert_eq!(poly_image(2, 7).unwrap().len(), 7);
        assert!(!find_nonsurjective_primes(5, 50).unwrap().is_empty());
    }

    #[test]
    fn certificates_for_split_su() {
        let w = fundamental_unit(3).unwrap().element();
        let b = b0_family(B0Kind::SuSplitA, 3, &w, 1).unwrap();
        for (p, size) in [(3, 2), (5, 3)] {
            let c = separation_certificate(3, &b, p, 3).unwrap();
            assert_eq!(c.image_size, size);
            assert!(c.b_order_verified && c.sampled_within_image, "{c:?}");
        }
        let c = separation_certificate(3, &b, 11, 2).unwrap();
        assert!(matches!(c.mode, ReductionMode::Split { .. }));
        let b2 = b0_family(B0Kind::Sp, 4, &w, 1).unwrap();
        assert!(matches!(separation_certificate(2, &b2, 5, 2), Err(Error::Precondition(_))));
    }
}
