//! Reduction modulo primes, finite matrix groups, trace sets and the
//! orbit-separation certificate.

mod fq;
mod g2explore;
mod groups;
mod reduce;
mod separation;

pub use fq::{Fq, FqElem};
pub use g2explore::{g2_generators, g2_trace_explore, G2Exploration};
pub use groups::{
    closure_elements, family_form, family_generators, family_order, family_trace_set, group_closure,
    group_order_formula, in_family, preserves_mod_form, trace_set, trace_set_words, trace_witness, GroupFamily,
    TraceWitness, DEFAULT_CAP,
};
pub use reduce::{ReductionContext, ReductionMode};
pub use separation::{find_nonsurjective_primes, poly_image, separation_certificate, SeparationCertificate};

