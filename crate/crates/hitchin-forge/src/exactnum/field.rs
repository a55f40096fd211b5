//! Multiquadratic fields `Q(sqrt d_1, ..., sqrt d_k)` with `k <= 3`.
//!
//! An element is stored by its coefficients on the basis monomials
//! `prod_{i in S} sqrt(d_i)`, one for every subset `S` of the radicands,
//! indexed by the bitmask of `S`. Products of monomials are re-normalized
//! with `sqrt(d)^2 = d`, so the representation is unique.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{parse_rational, squarefree_decompose, Rational};
use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// Maximal number of radicands of a descriptor.
pub const MAX_RADICANDS: usize = 3;

/// The list of radicands generating a multiquadratic field.
///
/// Radicands are square-free integers greater than one, strictly increasing
/// and multiplicatively independent modulo squares. The empty list describes
/// `Q` itself.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldDescriptor {
    radicands: Vec<i64>,
    products: Vec<BigInt>,
}

impl fmt::Debug for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q{:?}", self.radicands)
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicands.is_empty() {
            return write!(f, "Q");
        }
        let roots: Vec<String> = self.radicands.iter().map(|d| format!("sqrt({d})")).collect();
        write!(f, "Q({})", roots.join(","))
    }
}

fn is_squarefree(n: i64) -> bool {
    n > 1 && squarefree_decompose(&BigInt::from(n)).1.is_one()
}

fn squarefree_part_of_product(values: &[i64], mask: usize) -> i64 {
    let mut prod = BigInt::one();
    for (i, v) in values.iter().enumerate() {
        if mask >> i & 1 == 1 {
            prod *= *v;
        }
    }
    squarefree_decompose(&prod).0.to_i64().expect("radicand products fit in i64")
}

impl FieldDescriptor {
    /// Validated descriptor from an explicit radicand list.
    pub fn new(radicands: Vec<i64>) -> Result<Self> {
        if radicands.len() > MAX_RADICANDS {
            return Err(Error::InvalidRadicand(format!(
                "at most {MAX_RADICANDS} radicands supported, got {}",
                radicands.len()
            )));
        }
        for &d in &radicands {
            if !is_squarefree(d) {
                return Err(Error::InvalidRadicand(format!("{d} is not a square-free integer > 1")));
            }
        }
        if radicands.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidRadicand(format!("{radicands:?} is not strictly increasing")));
        }
        for mask in 1..(1usize << radicands.len()) {
            if squarefree_part_of_product(&radicands, mask) == 1 {
                return Err(Error::InvalidRadicand(format!(
                    "{radicands:?} is multiplicatively dependent modulo squares"
                )));
            }
        }
        let products = (0..(1usize << radicands.len()))
            .map(|mask| {
                radicands
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(BigInt::one(), |acc, (_, d)| acc * *d)
            })
            .collect();
        Ok(FieldDescriptor { radicands, products })
    }

    /// The field of rationals.
    pub fn rationals() -> Self {
        FieldDescriptor { radicands: Vec::new(), products: vec![BigInt::one()] }
    }

    /// The smallest multiquadratic field containing `sqrt(v)` for every
    /// positive integer `v` in `values`, with a canonical radicand list.
    ///
    /// Square factors are stripped and redundant values dropped, so
    /// `generated_by(&[2, 3, 6])` and `generated_by(&[3, 8])` both give
    /// `Q(sqrt 2, sqrt 3)`.
    pub fn generated_by(values: &[i64]) -> Result<Self> {
        let mut frees = Vec::new();
        for &v in values {
            if v <= 0 {
                return Err(Error::InvalidRadicand(format!("{v} is not positive")));
            }
            let f = squarefree_decompose(&BigInt::from(v)).0.to_i64().expect("fits");
            if f > 1 && !frees.contains(&f) {
                frees.push(f);
            }
        }
        let mut span: Vec<i64> = (1..(1usize << frees.len()))
            .map(|mask| squarefree_part_of_product(&frees, mask))
            .filter(|&f| f > 1)
            .collect();
        span.sort_unstable();
        span.dedup();
        let mut chosen: Vec<i64> = Vec::new();
        for f in span {
            let reachable = (0..(1usize << chosen.len()))
                .any(|mask| squarefree_part_of_product(&chosen, mask) == f);
            if !reachable {
                chosen.push(f);
            }
        }
        FieldDescriptor::new(chosen)
    }

    /// The radicands, strictly increasing.
    pub fn radicands(&self) -> &[i64] {
        &self.radicands
    }

    /// Number of radicands `k`.
    pub fn num_radicands(&self) -> usize {
        self.radicands.len()
    }

    /// Dimension `2^k` over `Q`.
    pub fn degree(&self) -> usize {
        1 << self.radicands.len()
    }

    /// Whether this is `Q` itself.
    pub fn is_rational(&self) -> bool {
        self.radicands.is_empty()
    }

    /// Product of the radicands in `mask`.
    pub fn monomial_product(&self, mask: usize) -> &BigInt {
        &self.products[mask]
    }

    /// Expresses `sqrt(m)` for a positive integer `m` as `c * monomial(mask)`.
    ///
    /// Returns `None` when `sqrt(m)` does not lie in the field.
    pub fn sqrt_of(&self, m: &BigInt) -> Option<(Rational, usize)> {
        if !m.is_positive() {
            return None;
        }
        let (free, root) = squarefree_decompose(m);
        for mask in 0..self.degree() {
            let prod = &self.products[mask];
            let (pf, pr) = squarefree_decompose(prod);
            if pf == free {
                // sqrt(m) = root * sqrt(free) and sqrt(prod) = pr * sqrt(free).
                return Some((Rational::new(root, pr), mask));
            }
        }
        None
    }

    /// Whether every radicand of `other` has its square root in `self`.
    pub fn contains(&self, other: &FieldDescriptor) -> bool {
        other.radicands.iter().all(|&d| self.sqrt_of(&BigInt::from(d)).is_some())
    }

    /// Index of radicand `d` in the list, if present.
    pub fn index_of(&self, d: i64) -> Option<usize> {
        self.radicands.iter().position(|&r| r == d)
    }
}

/// An element of a multiquadratic field with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElem {
    desc: Arc<FieldDescriptor>,
    coeffs: Vec<Rational>,
}

fn same_field(a: &Arc<FieldDescriptor>, b: &Arc<FieldDescriptor>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl FieldElem {
    /// Zero of the given field.
    pub fn zero(desc: &Arc<FieldDescriptor>) -> Self {
        FieldElem { desc: desc.clone(), coeffs: vec![Rational::zero(); desc.degree()] }
    }

    /// One of the given field.
    pub fn one(desc: &Arc<FieldDescriptor>) -> Self {
        Self::from_rational(desc, Rational::one())
    }

    /// Embeds a rational.
    pub fn from_rational(desc: &Arc<FieldDescriptor>, r: Rational) -> Self {
        let mut e = Self::zero(desc);
        e.coeffs[0] = r;
        e
    }

    /// Embeds an integer.
    pub fn from_int(desc: &Arc<FieldDescriptor>, n: i64) -> Self {
        Self::from_rational(desc, Rational::from_integer(BigInt::from(n)))
    }

    /// A rational number as an element of `Q`.
    pub fn rational(r: Rational) -> Self {
        Self::from_rational(&Arc::new(FieldDescriptor::rationals()), r)
    }

    /// Builds an element from its coefficient vector, one entry per subset mask.
    pub fn from_coeffs(desc: &Arc<FieldDescriptor>, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != desc.degree() {
            return Err(Error::Dimension(format!(
                "{} coefficients for a field of degree {}",
                coeffs.len(),
                desc.degree()
            )));
        }
        Ok(FieldElem { desc: desc.clone(), coeffs })
    }

    /// `sqrt(m)` as an element of the field, for a positive integer `m`.
    pub fn sqrt(desc: &Arc<FieldDescriptor>, m: i64) -> Result<Self> {
        let (c, mask) = desc
            .sqrt_of(&BigInt::from(m))
            .ok_or_else(|| Error::WrongField(format!("sqrt({m}) is not in {desc}")))?;
        let mut e = Self::zero(desc);
        e.coeffs[mask] = c;
        Ok(e)
    }

    /// `x + y sqrt(d)` in `Q(sqrt d)` with integer `x, y`.
    pub fn quadratic(d: i64, x: i64, y: i64) -> Result<Self> {
        let desc = Arc::new(FieldDescriptor::new(vec![d])?);
        Ok(FieldElem {
            coeffs: vec![Rational::from_integer(x.into()), Rational::from_integer(y.into())],
            desc,
        })
    }

    /// The field this element lives in.
    pub fn descriptor(&self) -> &Arc<FieldDescriptor> {
        &self.desc
    }

    /// Coefficient of the monomial indexed by `mask`.
    pub fn coeff(&self, mask: usize) -> &Rational {
        &self.coeffs[mask]
    }

    /// All coefficients, indexed by subset mask.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// The element as a rational, if it has no irrational part.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Whether all coefficients are integers, i.e. the element lies in
    /// `Z[sqrt d_1, ..., sqrt d_k]`.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Re-expresses the element inside a larger field.
    pub fn lift_to(&self, target: &Arc<FieldDescriptor>) -> Result<Self> {
        if same_field(&self.desc, target) {
            return Ok(self.clone());
        }
        let mut images = Vec::with_capacity(self.desc.num_radicands());
        for &d in self.desc.radicands() {
            images.push(Self::sqrt(target, d)?);
        }
        let mut out = Self::zero(target);
        for (mask, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = Self::from_rational(target, c.clone());
            for (i, img) in images.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    term = term.mul_same(img);
                }
            }
            out = out.add_same(&term);
        }
        Ok(out)
    }

    fn align(&self, other: &Self) -> Result<(Self, Self)> {
        if same_field(&self.desc, &other.desc) {
            Ok((self.clone(), other.clone()))
        } else if self.desc.is_rational() {
            Ok((self.lift_to(&other.desc)?, other.clone()))
        } else if other.desc.is_rational() {
            Ok((self.clone(), other.lift_to(&self.desc)?))
        } else {
            Err(Error::DescriptorMismatch(self.desc.to_string(), other.desc.to_string()))
        }
    }

    fn add_same(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        FieldElem { desc: self.desc.clone(), coeffs }
    }

    fn mul_same(&self, other: &Self) -> Self {
        let n = self.desc.degree();
        let mut out = vec![Rational::zero(); n];
        for (s, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (t, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let factor = self.desc.monomial_product(s & t);
                out[s ^ t] += a * b * Rational::from_integer(factor.clone());
            }
        }
        FieldElem { desc: self.desc.clone(), coeffs: out }
    }

    /// Checked sum; fails on a field mismatch.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.align(other)?;
        Ok(a.add_same(&b))
    }

    /// Checked product; fails on a field mismatch.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let (a, b) = self.align(other)?;
        Ok(a.mul_same(&b))
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, r: &Rational) -> Self {
        FieldElem { desc: self.desc.clone(), coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    /// Integer power, negative exponents allowed for nonzero elements.
    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse().expect("negative power of zero") } else { self.clone() };
        let mut result = self.one_like();
        let mut sq = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul_same(&sq);
            }
            sq = sq.mul_same(&sq);
            k >>= 1;
        }
        result
    }

    /// Flips the sign of `sqrt(d_i)` for the radicand with index `i`.
    fn flip(&self, i: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(mask, c)| if mask >> i & 1 == 1 { -c } else { c.clone() })
            .collect();
        FieldElem { desc: self.desc.clone(), coeffs }
    }

    /// Absolute norm: the product of all Galois conjugates, a rational.
    pub fn norm(&self) -> Rational {
        self.norm_and_cofactor().0
    }

    /// Returns `(N(x), c)` with `x * c = N(x)`.
    fn norm_and_cofactor(&self) -> (Rational, Self) {
        let mut t = self.clone();
        let mut acc = self.one_like();
        for i in (0..self.desc.num_radicands()).rev() {
            let c = t.flip(i);
            acc = acc.mul_same(&c);
            t = t.mul_same(&c);
        }
        (t.coeffs[0].clone(), acc)
    }

    /// Sign of the element under the real embedding with all square roots positive.
    pub fn signum(&self) -> i8 {
        self.signum_upto(&self.coeffs, self.desc.num_radicands())
    }

    fn signum_upto(&self, coeffs: &[Rational], j: usize) -> i8 {
        if j == 0 {
            return if coeffs[0].is_positive() {
                1
            } else if coeffs[0].is_negative() {
                -1
            } else {
                0
            };
        }
        let half = 1usize << (j - 1);
        let u = &coeffs[..half];
        let v = &coeffs[half..2 * half];
        let su = self.signum_upto(u, j - 1);
        let sv = self.signum_upto(v, j - 1);
        if sv == 0 || su == sv {
            return if su == 0 { sv } else { su };
        }
        if su == 0 {
            return sv;
        }
        // Opposite signs: compare u^2 with d v^2 inside the subfield.
        let uu = self.mul_sub(u, u, j - 1);
        let vv = self.mul_sub(v, v, j - 1);
        let d = Rational::from_integer(BigInt::from(self.desc.radicands()[j - 1]));
        let w: Vec<Rational> = uu.iter().zip(&vv).map(|(x, y)| x - &d * y).collect();
        if self.signum_upto(&w, j - 1) > 0 {
            su
        } else {
            sv
        }
    }

    fn mul_sub(&self, a: &[Rational], b: &[Rational], j: usize) -> Vec<Rational> {
        let n = 1usize << j;
        let mut out = vec![Rational::zero(); n];
        for s in 0..n {
            if a[s].is_zero() {
                continue;
            }
            for t in 0..n {
                if b[t].is_zero() {
                    continue;
                }
                out[s ^ t] +=
                    &a[s] * &b[t] * Rational::from_integer(self.desc.monomial_product(s & t).clone());
            }
        }
        out
    }

    /// Parses an element of a known field using the grammar
    /// `int ('/' int)? (('+'|'-') coeff? '*'? 'sqrt(' int ')')*`.
    pub fn parse(s: &str, desc: &Arc<FieldDescriptor>) -> Result<Self> {
        let mut out = Self::zero(desc);
        for (coeff, radicand) in parse_terms(s)? {
            let term = match radicand {
                None => Self::from_rational(desc, coeff),
                Some(m) => Self::sqrt(desc, m)?.scale(&coeff),
            };
            out = out.add_same(&term);
        }
        Ok(out)
    }

    /// Parses an element, inferring the smallest field containing every
    /// square root mentioned in the text.
    pub fn parse_auto(s: &str) -> Result<Self> {
        let radicands = radicands_in(s)?;
        let desc = Arc::new(FieldDescriptor::generated_by(&radicands)?);
        Self::parse(s, &desc)
    }
}

/// Collects the integers `m` of every `sqrt(m)` occurring in `s`.
pub(crate) fn radicands_in(s: &str) -> Result<Vec<i64>> {
    Ok(parse_terms(s)?.into_iter().filter_map(|(_, m)| m).collect())
}

fn parse_terms(s: &str) -> Result<Vec<(Rational, Option<i64>)>> {
    let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if text.is_empty() {
        return Err(Error::Parse("empty field element".into()));
    }
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut terms = Vec::new();
    while i < bytes.len() {
        let mut negative = false;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            negative = bytes[i] == b'-';
            i += 1;
        } else if i > 0 {
            return Err(Error::Parse(format!("expected '+' or '-' at offset {i} in {s:?}")));
        }
        let start = i;
        while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'/') {
            i += 1;
        }
        let mut coeff = if i > start { parse_rational(&text[start..i])? } else { Rational::one() };
        if i < bytes.len() && bytes[i] == b'*' {
            i += 1;
        }
        let mut radicand = None;
        if text[i..].starts_with("sqrt(") {
            i += 5;
            let rs = i;
            while i < bytes.len() && bytes[i] != b')' {
                i += 1;
            }
            if i >= bytes.len() {
                return Err(Error::Parse(format!("unclosed sqrt( in {s:?}")));
            }
            let m: i64 = text[rs..i]
                .parse()
                .map_err(|_| Error::Parse(format!("bad radicand {:?} in {s:?}", &text[rs..i])))?;
            if m <= 0 {
                return Err(Error::Parse(format!("radicand must be positive in {s:?}")));
            }
            radicand = Some(m);
            i += 1;
        } else if i == start {
            return Err(Error::Parse(format!("expected a number or sqrt(..) at offset {i} in {s:?}")));
        }
        if negative {
            coeff = -coeff;
        }
        terms.push((coeff, radicand));
    }
    Ok(terms)
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (mask, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if mask == 0 {
                out.push_str(&fmt_rational(c));
                continue;
            }
            let (free, root) = squarefree_decompose(self.desc.monomial_product(mask));
            let c = c * Rational::from_integer(root);
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let a = c.abs();
            if !a.is_one() {
                out.push_str(&fmt_rational(&a));
            }
            out.push_str(&format!("sqrt({free})"));
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Ring for FieldElem {
    fn zero_like(&self) -> Self {
        Self::zero(&self.desc)
    }
    fn one_like(&self) -> Self {
        Self::one(&self.desc)
    }
    fn int_like(&self, n: i64) -> Self {
        Self::from_int(&self.desc, n)
    }
    fn is_zero_elem(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
    fn plus(&self, other: &Self) -> Self {
        self.try_add(other).unwrap_or_else(|e| panic!("{e}"))
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
    fn times(&self, other: &Self) -> Self {
        self.try_mul(other).unwrap_or_else(|e| panic!("{e}"))
    }
    fn negated(&self) -> Self {
        FieldElem { desc: self.desc.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Field for FieldElem {
    fn inverse(&self) -> Option<Self> {
        if self.is_zero_elem() {
            return None;
        }
        let (n, cofactor) = self.norm_and_cofactor();
        Some(cofactor.scale(&n.recip()))
    }
}

/// A Galois automorphism of a multiquadratic field, given by the sign it
/// puts on the square root of each radicand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaloisAction {
    signs: Vec<(i64, i8)>,
}

impl GaloisAction {
    /// Action with explicit signs per radicand.
    pub fn new(signs: &[(i64, i8)]) -> Result<Self> {
        for &(_, s) in signs {
            if s != 1 && s != -1 {
                return Err(Error::Precondition(format!("Galois sign must be +1 or -1, got {s}")));
            }
        }
        let mut signs = signs.to_vec();
        signs.sort_unstable();
        Ok(GaloisAction { signs })
    }

    /// The identity of the given field.
    pub fn identity(desc: &FieldDescriptor) -> Self {
        GaloisAction { signs: desc.radicands().iter().map(|&d| (d, 1)).collect() }
    }

    /// Negates `sqrt(d)` and fixes every other radicand of `desc`.
    pub fn flipping(desc: &FieldDescriptor, d: i64) -> Self {
        GaloisAction {
            signs: desc.radicands().iter().map(|&r| (r, if r == d { -1 } else { 1 })).collect(),
        }
    }

    /// Every automorphism of the field, identity first.
    pub fn all(desc: &FieldDescriptor) -> Vec<Self> {
        let k = desc.num_radicands();
        (0..(1usize << k))
            .map(|mask| GaloisAction {
                signs: desc
                    .radicands()
                    .iter()
                    .enumerate()
                    .map(|(i, &d)| (d, if mask >> i & 1 == 1 { -1 } else { 1 }))
                    .collect(),
            })
            .collect()
    }

    /// Sign assigned to radicand `d`, if any.
    pub fn sign_of(&self, d: i64) -> Option<i8> {
        self.signs.iter().find(|(r, _)| *r == d).map(|(_, s)| *s)
    }

    /// Composition, which multiplies signs radicand by radicand.
    pub fn compose(&self, other: &Self) -> Self {
        let signs = self
            .signs
            .iter()
            .map(|&(d, s)| (d, s * other.sign_of(d).unwrap_or(1)))
            .collect();
        GaloisAction { signs }
    }

    /// Applies the automorphism. Every radicand of `x` needs a sign.
    pub fn apply(&self, x: &FieldElem) -> Result<FieldElem> {
        let radicands = x.descriptor().radicands();
        let mut signs = Vec::with_capacity(radicands.len());
        for &d in radicands {
            signs.push(self.sign_of(d).ok_or_else(|| {
                Error::Precondition(format!("no Galois sign given for sqrt({d})"))
            })?);
        }
        let coeffs = x
            .coeffs()
            .iter()
            .enumerate()
            .map(|(mask, c)| {
                let s: i8 = (0..signs.len()).filter(|i| mask >> i & 1 == 1).map(|i| signs[i]).product();
                if s < 0 {
                    -c
                } else {
                    c.clone()
                }
            })
            .collect();
        FieldElem::from_coeffs(x.descriptor(), coeffs)
    }

    /// The sign `g(sqrt m) / sqrt m` for a positive integer `m` whose square
    /// root lies in `desc`.
    pub fn sign_on_sqrt(&self, desc: &FieldDescriptor, m: i64) -> Result<i8> {
        let (_, mask) = desc
            .sqrt_of(&BigInt::from(m))
            .ok_or_else(|| Error::WrongField(format!("sqrt({m}) is not in {desc}")))?;
        let mut s = 1i8;
        for (i, &d) in desc.radicands().iter().enumerate() {
            if mask >> i & 1 == 1 {
                s *= self.sign_of(d).ok_or_else(|| {
                    Error::Precondition(format!("no Galois sign given for sqrt({d})"))
                })?;
            }
        }
        Ok(s)
    }
}

/// Exact product of two elements of the same field.
pub fn field_mul(x: &FieldElem, y: &FieldElem) -> Result<FieldElem> {
    x.try_mul(y)
}

/// Applies a Galois automorphism to a field element.
pub fn apply_galois(g: &GaloisAction, x: &FieldElem) -> Result<FieldElem> {
    g.apply(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::{int, rat};
    use proptest::prelude::*;

    fn q(ds: &[i64]) -> Arc<FieldDescriptor> {
        Arc::new(FieldDescriptor::new(ds.to_vec()).unwrap())
    }

    #[test]
    fn descriptor_validation() {
        assert!(FieldDescriptor::new(vec![4]).is_err());
        assert!(FieldDescriptor::new(vec![3, 2]).is_err());
        assert!(FieldDescriptor::new(vec![2, 3, 6]).is_err());
        assert!(FieldDescriptor::new(vec![2, 3, 5, 7]).is_err());
        assert_eq!(FieldDescriptor::generated_by(&[6, 3, 2]).unwrap().radicands(), &[2, 3]);
        assert_eq!(FieldDescriptor::generated_by(&[12, 3]).unwrap().radicands(), &[3]);
        assert_eq!(FieldDescriptor::generated_by(&[6, 10, 15]).unwrap().radicands(), &[6, 10]);
        assert!(FieldDescriptor::generated_by(&[9, 4]).unwrap().is_rational());
    }

    #[test]
    fn conjugate_products() {
        let d = q(&[3]);
        let a = FieldElem::parse("1+sqrt(3)", &d).unwrap();
        let b = FieldElem::parse("1-sqrt(3)", &d).unwrap();
        assert_eq!(field_mul(&a, &b).unwrap(), FieldElem::from_int(&d, -2));
        let w = FieldElem::parse("2+sqrt(3)", &d).unwrap();
        let wb = FieldElem::parse("2-sqrt(3)", &d).unwrap();
        assert_eq!(field_mul(&w, &wb).unwrap(), FieldElem::one(&d));
    }

    #[test]
    fn monomials_normalize() {
        let d = q(&[2, 3]);
        let r2 = FieldElem::sqrt(&d, 2).unwrap();
        let r3 = FieldElem::sqrt(&d, 3).unwrap();
        assert_eq!(r2.times(&r3), FieldElem::sqrt(&d, 6).unwrap());
        assert_eq!(r2.times(&r3).to_string(), "sqrt(6)");
        let d2 = q(&[6, 10]);
        let p = FieldElem::sqrt(&d2, 6).unwrap().times(&FieldElem::sqrt(&d2, 10).unwrap());
        assert_eq!(p.to_string(), "2sqrt(15)");
        assert_eq!(FieldElem::sqrt(&d2, 15).unwrap().scale(&int(2)), p);
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = FieldElem::quadratic(2, 1, 1).unwrap();
        let b = FieldElem::quadratic(3, 1, 1).unwrap();
        assert!(matches!(field_mul(&a, &b), Err(Error::DescriptorMismatch(..))));
        let r = FieldElem::rational(rat(1, 2));
        assert_eq!(field_mul(&a, &r).unwrap(), a.scale(&rat(1, 2)));
    }

    #[test]
    fn display_and_parse_round_trip() {
        for s in ["2+sqrt(3)", "-1/2", "3/2sqrt(3)", "-sqrt(3)", "0", "1-2sqrt(2)+sqrt(3)-sqrt(6)"] {
            let e = FieldElem::parse_auto(s).unwrap();
            assert_eq!(e.to_string(), s);
        }
        assert_eq!(FieldElem::parse_auto("2*sqrt(12)").unwrap().to_string(), "4sqrt(3)");
        assert!(FieldElem::parse_auto("2+").is_err());
        assert!(FieldElem::parse_auto("sqrt(3").is_err());
    }

    #[test]
    fn galois_flips_signs() {
        let w = FieldElem::quadratic(3, 2, 1).unwrap();
        let g = GaloisAction::flipping(w.descriptor(), 3);
        assert_eq!(apply_galois(&g, &w).unwrap(), FieldElem::quadratic(3, 2, -1).unwrap());
        let d = q(&[2, 3]);
        let s = GaloisAction::new(&[(2, -1), (3, -1)]).unwrap();
        assert_eq!(s.sign_on_sqrt(&d, 6).unwrap(), 1);
        assert_eq!(s.sign_on_sqrt(&d, 2).unwrap(), -1);
        assert!(GaloisAction::new(&[(2, 1)]).unwrap().apply(&FieldElem::one(&d)).is_err());
    }

    #[test]
    fn signs_of_real_embedding() {
        let cases = [
            ("2-sqrt(3)", 1),
            ("1-sqrt(2)", -1),
            ("sqrt(2)+sqrt(3)-sqrt(6)+1", 1),
            ("sqrt(6)-sqrt(2)-sqrt(3)", -1),
            ("0", 0),
            ("-5+sqrt(2)+sqrt(3)", -1),
        ];
        for (s, sign) in cases {
            assert_eq!(FieldElem::parse_auto(s).unwrap().signum(), sign, "{s}");
        }
    }

    #[test]
    fn lifting_preserves_value() {
        let big = q(&[2, 3, 5]);
        let x = FieldElem::parse_auto("1+sqrt(6)").unwrap();
        let lifted = x.lift_to(&big).unwrap();
        assert_eq!(lifted, FieldElem::parse("1+sqrt(6)", &big).unwrap());
    }

    fn arb_elem() -> impl Strategy<Value = FieldElem> {
        proptest::collection::vec((-20i64..20, 1i64..8), 8).prop_map(|cs| {
            let d = Arc::new(FieldDescriptor::new(vec![2, 3, 5]).unwrap());
            FieldElem::from_coeffs(&d, cs.into_iter().map(|(n, m)| rat(n, m)).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn associative_and_distributive(x in arb_elem(), y in arb_elem(), z in arb_elem()) {
            prop_assert_eq!(x.times(&y).times(&z), x.times(&y.times(&z)));
            prop_assert_eq!(x.times(&y.plus(&z)), x.times(&y).plus(&x.times(&z)));
        }

        #[test]
        fn inverse_is_exact(x in arb_elem()) {
            prop_assume!(!x.is_zero_elem());
            prop_assert!(x.times(&x.inverse().unwrap()).is_one_elem());
        }

        #[test]
        fn galois_is_an_involutive_homomorphism(x in arb_elem(), y in arb_elem(), mask in 0usize..8) {
            let g = &GaloisAction::all(x.descriptor())[mask];
            let gx = g.apply(&x).unwrap();
            prop_assert_eq!(g.apply(&gx).unwrap(), x.clone());
            prop_assert_eq!(g.apply(&x.times(&y)).unwrap(), gx.times(&g.apply(&y).unwrap()));
        }

        #[test]
        fn norm_is_product_of_conjugates(x in arb_elem()) {
            let prod = GaloisAction::all(x.descriptor())
                .iter()
                .fold(x.one_like(), |acc, g| acc.times(&g.apply(&x).unwrap()));
            prop_assert_eq!(prod.as_rational().unwrap(), x.norm());
        }

        #[test]
        fn signum_respects_ordering(x in arb_elem(), y in arb_elem()) {
            // sign(x*y) = sign(x) sign(y), and squares are nonnegative.
            prop_assert_eq!(x.times(&y).signum(), x.signum() * y.signum());
            prop_assert!(x.times(&x).signum() >= 0);
        }
    }
}
