//! Quadratic and Hermitian forms: Hilbert symbols at every place of `Q`,
//! Hasse invariants, Hasse-Minkowski equivalence and Hermitian invariants
//! over real quadratic fields.

mod forms;
mod hermitian;
mod hilbert;

pub use forms::{
    diagonal_invariants, diagonalize_qform, form_invariants, forms_equivalent, indefinite_identity,
    witness_holds, Diagonalization, FormInvariants,
};
pub use hermitian::{hermitian_invariants, DiscClass, HermitianInvariants};
pub use hilbert::{
    hilbert_product, hilbert_symbol, is_norm_from_quadratic, is_prime, primes_up_to, support_places,
    Place,
};
