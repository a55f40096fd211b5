//! Quaternion algebras `(a,b)` over `Q`, their embedding into 2x2 matrices
//! over `Q(sqrt a, sqrt b)`, and the norm-one group `Gamma_{a,b}` of the
//! standard order.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{int, squarefree_decompose, FieldDescriptor, FieldElem, Matrix, Rational, Ring};
use crate::qforms::{hilbert_symbol, support_places, Place};

/// The quaternion algebra with `i^2 = a`, `j^2 = b`, `ij = -ji`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuatAlgebra {
    /// Square of `i`.
    pub a: i64,
    /// Square of `j`.
    pub b: i64,
}

impl QuatAlgebra {
    /// The algebra `(a, b)`; both parameters must be nonzero.
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::Precondition("quaternion parameters must be nonzero".into()));
        }
        Ok(QuatAlgebra { a, b })
    }

    /// The isomorphic algebra with square-free parameters.
    pub fn normalized(&self) -> QuatAlgebra {
        let f = |x: i64| squarefree_decompose(&BigInt::from(x)).0.to_i64().expect("fits");
        QuatAlgebra { a: f(self.a), b: f(self.b) }
    }
}

impl fmt::Display for QuatAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// An element `x0 + x1 i + x2 j + x3 ij` of a quaternion algebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuatElem {
    /// The algebra.
    pub algebra: QuatAlgebra,
    /// Coordinates in the basis `1, i, j, ij`.
    pub x: [Rational; 4],
}

impl QuatElem {
    /// Element with rational coordinates.
    pub fn new(algebra: QuatAlgebra, x: [Rational; 4]) -> Self {
        QuatElem { algebra, x }
    }

    /// Element with integer coordinates.
    pub fn from_ints(algebra: QuatAlgebra, x: [i64; 4]) -> Self {
        QuatElem { algebra, x: x.map(int) }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.algebra != other.algebra {
            return Err(Error::AlgebraMismatch(self.algebra.to_string(), other.algebra.to_string()));
        }
        Ok(())
    }

    /// Product in the algebra.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let a = int(self.algebra.a);
        let b = int(self.algebra.b);
        let ab = &a * &b;
        let [x0, x1, x2, x3] = &self.x;
        let [y0, y1, y2, y3] = &other.x;
        let z0 = x0 * y0 + &a * x1 * y1 + &b * x2 * y2 - &ab * x3 * y3;
        let z1 = x0 * y1 + x1 * y0 - &b * x2 * y3 + &b * x3 * y2;
        let z2 = x0 * y2 + x2 * y0 + &a * x1 * y3 - &a * x3 * y1;
        let z3 = x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1;
        Ok(QuatElem { algebra: self.algebra, x: [z0, z1, z2, z3] })
    }

    /// Sum in the algebra.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let x = [0, 1, 2, 3].map(|i| &self.x[i] + &other.x[i]);
        Ok(QuatElem { algebra: self.algebra, x })
    }

    /// The conjugate `x0 - x1 i - x2 j - x3 ij`.
    pub fn conj(&self) -> Self {
        let [x0, x1, x2, x3] = &self.x;
        QuatElem { algebra: self.algebra, x: [x0.clone(), -x1, -x2, -x3] }
    }

    /// The reduced norm `x conj(x) = x0^2 - a x1^2 - b x2^2 + ab x3^2`.
    pub fn nred(&self) -> Rational {
        let a = int(self.algebra.a);
        let b = int(self.algebra.b);
        let [x0, x1, x2, x3] = &self.x;
        x0 * x0 - &a * x1 * x1 - &b * x2 * x2 + a * b * x3 * x3
    }

    /// Reduced trace `2 x0`.
    pub fn trace(&self) -> Rational {
        &self.x[0] * int(2)
    }
}

impl fmt::Display for QuatElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["", "i", "j", "ij"];
        let mut out = String::new();
        for (c, name) in self.x.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if !out.is_empty() || neg {
                out.push(if neg { '-' } else { '+' });
            }
            let one = a == int(1);
            if !(one && !name.is_empty()) {
                out.push_str(&a.to_string());
            }
            out.push_str(name);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// Quaternion product, failing on an algebra mismatch.
pub fn quat_mul(x: &QuatElem, y: &QuatElem) -> Result<QuatElem> {
    x.mul(y)
}

/// Quaternion conjugation.
pub fn quat_conj(x: &QuatElem) -> QuatElem {
    x.conj()
}

/// Reduced norm.
pub fn nred(x: &QuatElem) -> Rational {
    x.nred()
}

/// The field `Q(sqrt a, sqrt b)` of the matrix embedding.
pub fn splitting_field(alg: &QuatAlgebra) -> Result<Arc<FieldDescriptor>> {
    if alg.a <= 0 || alg.b <= 0 {
        return Err(Error::Precondition("the matrix embedding needs a, b > 0".into()));
    }
    Ok(Arc::new(FieldDescriptor::generated_by(&[alg.a, alg.b])?))
}

/// The embedding
/// `x -> [[x0 + sqrt a x1, sqrt b x2 + sqrt ab x3], [sqrt b x2 - sqrt ab x3, x0 - sqrt a x1]]`.
pub fn embed_m2(x: &QuatElem) -> Result<Matrix<FieldElem>> {
    let desc = splitting_field(&x.algebra)?;
    embed_m2_in(x, &desc)
}

/// The embedding with entries in a given field containing `sqrt a, sqrt b`.
pub fn embed_m2_in(x: &QuatElem, desc: &Arc<FieldDescriptor>) -> Result<Matrix<FieldElem>> {
    let ra = FieldElem::sqrt(desc, x.algebra.a)?;
    let rb = FieldElem::sqrt(desc, x.algebra.b)?;
    let rab = ra.times(&rb);
    let c = |r: &Rational| FieldElem::from_rational(desc, r.clone());
    let [x0, x1, x2, x3] = &x.x;
    let e00 = c(x0).plus(&ra.scale(x1));
    let e11 = c(x0).minus(&ra.scale(x1));
    let e01 = rb.scale(x2).plus(&rab.scale(x3));
    let e10 = rb.scale(x2).minus(&rab.scale(x3));
    Matrix::from_rows(vec![vec![e00, e01], vec![e10, e11]])
}

/// Division test with the set of ramified places.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ramification {
    /// Whether the algebra is a division algebra.
    pub is_division: bool,
    /// Places where `(a, b)_v = -1`.
    pub ramified: Vec<Place>,
}

/// Whether `(a, b)` is a division algebra, with its ramified places among
/// 2, infinity and the odd primes dividing `ab`.
pub fn is_division(alg: &QuatAlgebra) -> Ramification {
    let a = int(alg.a);
    let b = int(alg.b);
    let ramified: Vec<Place> = support_places(&[a.clone(), b.clone()])
        .into_iter()
        .filter(|&v| hilbert_symbol(&a, &b, v) == -1)
        .collect();
    Ramification { is_division: !ramified.is_empty(), ramified }
}

/// Whether `Gamma_{a,b}` is cocompact, which holds exactly when `(a,b)` is a
/// division algebra.
pub fn is_cocompact_gamma(a: i64, b: i64) -> Result<bool> {
    if a < 1 || b < 1 {
        return Err(Error::Precondition("a and b must be positive".into()));
    }
    Ok(is_division(&QuatAlgebra::new(a, b)?).is_division)
}

/// An integer point `(x0, x1, x2, x3)` of norm one in `Gamma_{a,b}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GammaElement {
    /// First parameter.
    pub a: i64,
    /// Second parameter.
    pub b: i64,
    /// Integer coordinates.
    pub x: [i64; 4],
}

impl GammaElement {
    /// Validated element: the norm must be one.
    pub fn new(a: i64, b: i64, x: [i64; 4]) -> Result<Self> {
        let g = GammaElement { a, b, x };
        if g.norm() != 1 {
            return Err(Error::Precondition(format!("{x:?} has norm {} in Gamma_({a},{b})", g.norm())));
        }
        Ok(g)
    }

    /// `x0^2 - a x1^2 - b x2^2 + ab x3^2` in `i128`.
    pub fn norm(&self) -> i128 {
        let [x0, x1, x2, x3] = self.x.map(i128::from);
        let (a, b) = (i128::from(self.a), i128::from(self.b));
        x0 * x0 - a * x1 * x1 - b * x2 * x2 + a * b * x3 * x3
    }

    /// The element of the quaternion algebra.
    pub fn to_quat(&self) -> QuatElem {
        QuatElem::from_ints(QuatAlgebra { a: self.a, b: self.b }, self.x)
    }

    /// Its 2x2 matrix over `Q(sqrt a, sqrt b)`.
    pub fn matrix(&self) -> Result<Matrix<FieldElem>> {
        embed_m2(&self.to_quat())
    }
}

/// All norm-one integer quadruples with `|x1|, |x2|, |x3| <= h`, in
/// lexicographic order.
///
/// The coordinate `x0` is not bounded: it is solved from
/// `x0^2 = 1 + a x1^2 + b x2^2 - ab x3^2`, so height 0 gives `+-1`.
pub fn gamma_enumerate(a: i64, b: i64, h: i64) -> Result<Vec<GammaElement>> {
    if a < 1 || b < 1 || h < 0 {
        return Err(Error::Precondition("need a, b >= 1 and h >= 0".into()));
    }
    let (ai, bi) = (i128::from(a), i128::from(b));
    let mut out = Vec::new();
    for x1 in -h..=h {
        for x2 in -h..=h {
            for x3 in -h..=h {
                let sq = 1 + ai * i128::from(x1).pow(2) + bi * i128::from(x2).pow(2)
                    - ai * bi * i128::from(x3).pow(2);
                if sq < 0 {
                    continue;
                }
                let r = num_integer::Roots::sqrt(&sq);
                if r * r != sq {
                    continue;
                }
                let r = i64::try_from(r).map_err(|_| Error::Precondition("coordinate overflow".into()))?;
                out.push(GammaElement { a, b, x: [r, x1, x2, x3] });
                if r != 0 {
                    out.push(GammaElement { a, b, x: [-r, x1, x2, x3] });
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Outcome of the diagonal-lift disjointness test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Disjointness {
    /// `x2 = x3 = 0`: the element is diagonal.
    Diagonal,
    /// `(x0^2 - a x1^2)(x0^2 - a x1^2 - 1) > 0`.
    DisjointLift,
    /// `x0^2 - a x1^2` is 0 or 1, where the strict inequality cannot hold.
    Degenerate,
}

/// Classifies a norm-one element for the diagonal-lift argument.
pub fn diagonal_lift_disjointness(g: &GammaElement) -> Result<Disjointness> {
    if g.norm() != 1 {
        return Err(Error::Precondition("element does not have norm one".into()));
    }
    let [x0, x1, x2, x3] = g.x.map(i128::from);
    if x2 == 0 && x3 == 0 {
        return Ok(Disjointness::Diagonal);
    }
    let m = x0 * x0 - i128::from(g.a) * x1 * x1;
    Ok(if m * (m - 1) > 0 { Disjointness::DisjointLift } else { Disjointness::Degenerate })
}

impl Ring for QuatElem {
    fn zero_like(&self) -> Self {
        QuatElem::from_ints(self.algebra, [0; 4])
    }
    fn one_like(&self) -> Self {
        QuatElem::from_ints(self.algebra, [1, 0, 0, 0])
    }
    fn int_like(&self, n: i64) -> Self {
        QuatElem::from_ints(self.algebra, [n, 0, 0, 0])
    }
    fn is_zero_elem(&self) -> bool {
        self.x.iter().all(Zero::is_zero)
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other).unwrap_or_else(|e| panic!("{e}"))
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other).unwrap_or_else(|e| panic!("{e}"))
    }
    fn negated(&self) -> Self {
        QuatElem { algebra: self.algebra, x: self.x.clone().map(|c| -c) }
    }
}

/// An element of `(a,b) tensor Q(sqrt d_1, ...)`: a quaternion whose four
/// coordinates lie in a multiquadratic field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuatFieldElem {
    /// The quaternion algebra over `Q`.
    pub algebra: QuatAlgebra,
    /// Coordinates in the basis `1, i, j, ij`, all in one field.
    pub x: [FieldElem; 4],
}

impl QuatFieldElem {
    /// Element with the given coordinates, lifted to a common field.
    pub fn new(algebra: QuatAlgebra, x: [FieldElem; 4]) -> Result<Self> {
        let desc = x.iter().map(|c| c.descriptor().clone()).max_by_key(|d| d.degree()).expect("four");
        let x = [0, 1, 2, 3].map(|i| x[i].lift_to(&desc));
        let [x0, x1, x2, x3] = x;
        Ok(QuatFieldElem { algebra, x: [x0?, x1?, x2?, x3?] })
    }

    /// The scalar `c` of the coefficient field.
    pub fn scalar(algebra: QuatAlgebra, c: FieldElem) -> Self {
        let z = c.zero_like();
        QuatFieldElem { algebra, x: [c, z.clone(), z.clone(), z] }
    }

    /// The rational quaternion `q` with coefficients in the field of `like`.
    pub fn from_quat(q: &QuatElem, like: &FieldElem) -> Self {
        let d = like.descriptor();
        QuatFieldElem {
            algebra: q.algebra,
            x: [0, 1, 2, 3].map(|i| FieldElem::from_rational(d, q.x[i].clone())),
        }
    }

    /// The involution `conj tensor sigma`, where `sigma` negates `sqrt d`.
    pub fn partial(&self, d: i64) -> Result<Self> {
        let sigma = crate::exactnum::GaloisAction::flipping(self.x[0].descriptor(), d);
        let c = |e: &FieldElem| sigma.apply(e);
        Ok(QuatFieldElem {
            algebra: self.algebra,
            x: [c(&self.x[0])?, c(&self.x[1])?.negated(), c(&self.x[2])?.negated(), c(&self.x[3])?.negated()],
        })
    }

    /// Whether every coordinate has integer coefficients.
    pub fn is_integral(&self) -> bool {
        self.x.iter().all(FieldElem::is_integral)
    }

    /// The 2x2 matrix of the element over a field containing `sqrt a`,
    /// `sqrt b` and the coefficient field.
    pub fn embed(&self, desc: &Arc<FieldDescriptor>) -> Result<Matrix<FieldElem>> {
        let ra = FieldElem::sqrt(desc, self.algebra.a)?;
        let rb = FieldElem::sqrt(desc, self.algebra.b)?;
        let rab = ra.times(&rb);
        let x: Vec<FieldElem> = self.x.iter().map(|c| c.lift_to(desc)).collect::<Result<_>>()?;
        let e00 = x[0].plus(&ra.times(&x[1]));
        let e11 = x[0].minus(&ra.times(&x[1]));
        let e01 = rb.times(&x[2]).plus(&rab.times(&x[3]));
        let e10 = rb.times(&x[2]).minus(&rab.times(&x[3]));
        Matrix::from_rows(vec![vec![e00, e01], vec![e10, e11]])
    }
}

impl Ring for QuatFieldElem {
    fn zero_like(&self) -> Self {
        QuatFieldElem::scalar(self.algebra, self.x[0].zero_like())
    }
    fn one_like(&self) -> Self {
        QuatFieldElem::scalar(self.algebra, self.x[0].one_like())
    }
    fn int_like(&self, n: i64) -> Self {
        QuatFieldElem::scalar(self.algebra, self.x[0].int_like(n))
    }
    fn is_zero_elem(&self) -> bool {
        self.x.iter().all(FieldElem::is_zero_elem)
    }
    fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.algebra, other.algebra, "quaternion algebra mismatch");
        QuatFieldElem { algebra: self.algebra, x: [0, 1, 2, 3].map(|i| self.x[i].plus(&other.x[i])) }
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
    fn times(&self, other: &Self) -> Self {
        assert_eq!(self.algebra, other.algebra, "quaternion algebra mismatch");
        let like = &self.x[0];
        let a = like.int_like(self.algebra.a);
        let b = like.int_like(self.algebra.b);
        let ab = a.times(&b);
        let [x0, x1, x2, x3] = &self.x;
        let [y0, y1, y2, y3] = &other.x;
        let z0 = x0.times(y0).plus(&a.times(&x1.times(y1))).plus(&b.times(&x2.times(y2))).minus(&ab.times(&x3.times(y3)));
        let z1 = x0.times(y1).plus(&x1.times(y0)).minus(&b.times(&x2.times(y3))).plus(&b.times(&x3.times(y2)));
        let z2 = x0.times(y2).plus(&x2.times(y0)).plus(&a.times(&x1.times(y3))).minus(&a.times(&x3.times(y1)));
        let z3 = x0.times(y3).plus(&x3.times(y0)).plus(&x1.times(y2)).minus(&x2.times(y1));
        QuatFieldElem { algebra: self.algebra, x: [z0, z1, z2, z3] }
    }
    fn negated(&self) -> Self {
        QuatFieldElem { algebra: self.algebra, x: [0, 1, 2, 3].map(|i| self.x[i].negated()) }
    }
}

/// The `2m x 2m` matrix over `desc` obtained by embedding every entry.
pub fn embed_block_matrix(m: &Matrix<QuatFieldElem>, desc: &Arc<FieldDescriptor>) -> Result<Matrix<FieldElem>> {
    let k = m.rows();
    let mut out = Matrix::zeros(2 * k, 2 * m.cols(), &FieldElem::zero(desc));
    for r in 0..k {
        for c in 0..m.cols() {
            let e = m[(r, c)].embed(desc)?;
            for i in 0..2 {
                for j in 0..2 {
                    out[(2 * r + i, 2 * c + j)] = e[(i, j)].clone();
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn q(a: i64, b: i64, x: [i64; 4]) -> QuatElem {
        QuatElem::from_ints(QuatAlgebra::new(a, b).unwrap(), x)
    }

    #[test]
    fn norms_and_products() {
        assert_eq!(q(3, 5, [0, 1, 0, 0]).nred(), int(-3));
        assert_eq!(q(2, 3, [2, 0, 1, 0]).nred(), int(1));
        let i = q(3, 5, [0, 1, 0, 0]);
        let j = q(3, 5, [0, 0, 1, 0]);
        assert_eq!(i.mul(&i).unwrap(), q(3, 5, [3, 0, 0, 0]));
        assert_eq!(j.mul(&j).unwrap(), q(3, 5, [5, 0, 0, 0]));
        assert_eq!(i.mul(&j).unwrap(), q(3, 5, [0, 0, 0, 1]));
        assert_eq!(j.mul(&i).unwrap(), q(3, 5, [0, 0, 0, -1]));
        let ij = i.mul(&j).unwrap();
        assert_eq!(ij.mul(&ij).unwrap(), q(3, 5, [-15, 0, 0, 0]));
        assert!(matches!(i.mul(&q(2, 5, [1, 0, 0, 0])), Err(Error::AlgebraMismatch(..))));
        let x = q(3, 5, [1, 2, -1, 3]);
        assert_eq!(x.mul(&x.conj()).unwrap(), QuatElem::new(x.algebra, [x.nred(), int(0), int(0), int(0)]));
        assert_eq!(x.to_string(), "1+2i-j+3ij");
        assert_eq!(QuatElem::new(x.algebra, [rat(1, 2), int(0), int(0), int(-1)]).to_string(), "1/2-ij");
    }

    #[test]
    fn embedding() {
        let one = q(3, 5, [1, 0, 0, 0]);
        assert!(embed_m2(&one).unwrap().is_identity());
        let j = embed_m2(&q(3, 5, [0, 0, 1, 0])).unwrap();
        assert_eq!(j[(0, 1)].to_string(), "sqrt(5)");
        assert_eq!(j[(1, 0)].to_string(), "sqrt(5)");
        assert!(j[(0, 0)].is_zero_elem());
        let x = q(3, 5, [1, 2, -1, 3]);
        let y = q(3, 5, [0, 1, 4, -2]);
        let mx = embed_m2(&x).unwrap();
        let my = embed_m2(&y).unwrap();
        assert_eq!(&mx * &my, embed_m2(&x.mul(&y).unwrap()).unwrap());
        assert_eq!(mx.det().unwrap().as_rational(), Some(x.nred()));
        assert!(embed_m2(&q(-1, 5, [1, 0, 0, 0])).is_err());
    }

    #[test]
    fn division_algebras() {
        let r = is_division(&QuatAlgebra::new(3, 3).unwrap());
        assert!(r.is_division);
        assert_eq!(r.ramified, vec![Place::Two, Place::Odd(3)]);
        assert!(!is_division(&QuatAlgebra::new(1, 1).unwrap()).is_division);
        assert!(!is_division(&QuatAlgebra::new(5, 5).unwrap()).is_division);
        assert!(is_division(&QuatAlgebra::new(-1, -1).unwrap()).ramified.contains(&Place::Infinity));
        assert!(is_cocompact_gamma(3, 3).unwrap());
        assert!(!is_cocompact_gamma(5, 5).unwrap());
        assert_eq!(QuatAlgebra::new(12, 50).unwrap().normalized(), QuatAlgebra { a: 3, b: 2 });
    }

    #[test]
    fn quaternions_over_fields() {
        let alg = QuatAlgebra::new(2, 3).unwrap();
        let w = FieldElem::quadratic(5, 2, 1).unwrap();
        let z = w.zero_like();
        let x = QuatFieldElem::new(alg, [w.clone(), z.clone(), w.int_like(1), z.clone()]).unwrap();
        let y = QuatFieldElem::new(alg, [z.clone(), w.clone(), z.clone(), w.int_like(-1)]).unwrap();
        let desc = Arc::new(FieldDescriptor::generated_by(&[2, 3, 5]).unwrap());
        let lhs = x.times(&y).embed(&desc).unwrap();
        let rhs = &x.embed(&desc).unwrap() * &y.embed(&desc).unwrap();
        assert_eq!(lhs, rhs);
        // partial is an anti-involution: partial(xy) = partial(y) partial(x).
        assert_eq!(x.times(&y).partial(5).unwrap(), y.partial(5).unwrap().times(&x.partial(5).unwrap()));
        assert_eq!(x.partial(5).unwrap().partial(5).unwrap(), x);
    }

    #[test]
    fn enumeration_and_disjointness() {
        let h0 = gamma_enumerate(3, 3, 0).unwrap();
        assert_eq!(h0.iter().map(|g| g.x).collect::<Vec<_>>(), vec![[-1, 0, 0, 0], [1, 0, 0, 0]]);
        let h2 = gamma_enumerate(3, 3, 2).unwrap();
        assert!(h2.iter().any(|g| g.x == [2, 1, 0, 0]));
        assert!(h2.iter().any(|g| g.x == [2, 0, 1, 0]));
        assert!(!h2.iter().any(|g| g.x == [2, 1, 1, 0]));
        let g = |x| GammaElement::new(3, 3, x).unwrap();
        assert_eq!(diagonal_lift_disjointness(&g([2, 1, 0, 0])).unwrap(), Disjointness::Diagonal);
        assert_eq!(diagonal_lift_disjointness(&g([2, 0, 1, 0])).unwrap(), Disjointness::DisjointLift);
        assert_eq!(diagonal_lift_disjointness(&g([1, 0, 0, 0])).unwrap(), Disjointness::Diagonal);
        assert!(GammaElement::new(3, 3, [2, 1, 1, 0]).is_err());
    }
}
