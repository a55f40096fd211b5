//! Minimal algebraic traits used by the generic matrix type.

use std::fmt::Debug;

/// A (not necessarily commutative) ring whose elements carry enough context
/// to build the neutral elements of their own ring.
///
/// Quaternion and multiquadratic elements store their algebra or field, so
/// zero and one are obtained from an existing element rather than from a
/// global constant.
pub trait Ring: Clone + PartialEq + Debug {
    /// The additive identity of the ring containing `self`.
    fn zero_like(&self) -> Self;
    /// The multiplicative identity of the ring containing `self`.
    fn one_like(&self) -> Self;
    /// The image of an integer in the ring containing `self`.
    fn int_like(&self, n: i64) -> Self;
    /// Whether `self` is the additive identity.
    fn is_zero_elem(&self) -> bool;
    /// Sum.
    fn plus(&self, other: &Self) -> Self;
    /// Difference.
    fn minus(&self, other: &Self) -> Self;
    /// Product `self * other`.
    fn times(&self, other: &Self) -> Self;
    /// Additive inverse.
    fn negated(&self) -> Self;

    /// Whether `self` is the multiplicative identity.
    fn is_one_elem(&self) -> bool {
        *self == self.one_like()
    }
}

/// A commutative ring in which every nonzero element is invertible.
pub trait Field: Ring {
    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;
}
