//! Exact arithmetic for thin subgroups of arithmetic lattices.
//!
//! The crate builds the concrete objects that appear when Hitchin
//! representations are deformed inside arithmetic groups: multiquadratic
//! number fields, quaternion orders, symmetric-power representations,
//! invariant bilinear and Hermitian forms, bending deformations of surface
//! group representations, and reductions of all of these modulo primes.
//! Every computation is exact; no floating point appears anywhere.
//!
//! Modules, bottom-up:
//!
//! - [`exactnum`]: rationals, multiquadratic fields, Galois actions, dense
//!   matrices over any supported ring, Pell units.
//! - [`quatalg`]: quaternion algebras `(a,b)`, their 2x2 embedding and the
//!   norm-one lattice of the standard order.
//! - [`qforms`]: Hilbert symbols, Hasse invariants, Hasse-Minkowski
//!   equivalence and Hermitian form invariants.
//! - [`symrep`]: the irreducible representation `tau_n`, the invariant form
//!   `J_n`, cocycle matrices and the cocycle-to-form construction.
//! - [`lattices`]: membership predicates for the arithmetic groups involved.
//! - [`g2core`]: the seven-dimensional cross product, split octonions and
//!   the G2 membership test.
//! - [`bender`]: surface presentations, bending, the diagonal bending
//!   families and Zariski-density certificates.
//! - [`modp`]: finite fields, finite matrix group closures, trace sets and
//!   orbit-separation certificates.
//! - [`cli`]: the JSON command-line front end.

pub mod bender;
pub mod cli;
pub mod error;
pub mod exactnum;
pub mod g2core;
pub mod lattices;
pub mod modp;
pub mod qforms;
pub mod quatalg;
pub mod symrep;

pub use error::{Error, Result};
