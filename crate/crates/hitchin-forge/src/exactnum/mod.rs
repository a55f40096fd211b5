//! Exact numbers: rationals, multiquadratic fields, matrices and Pell units.
//!
//! Everything here is an immutable value with exact arithmetic. Matrices are
//! generic over the [`Ring`] trait, which is implemented by [`Rational`],
//! [`FieldElem`], quaternions (in [`crate::quatalg`]) and finite-field
//! elements (in [`crate::modp`]).

mod field;
mod matrix;
mod pell;
mod rational;
mod ring;

pub use field::{field_mul, apply_galois, FieldDescriptor, FieldElem, GaloisAction};
pub use matrix::{span_dimension, Matrix};
pub use pell::{fundamental_unit, PellUnit};
pub use rational::{
    factorize, int, is_square, parse_rational, rat, square_class, squarefree_decompose, Rational,
};
pub use ring::{Field, Ring};

pub use pell::PellUnitJson;
pub(crate) use rational::to_i64;
