//! The irreducible representation `tau_n` of `SL(2)`, its invariant form
//! `J_n`, the trace polynomial, the cocycle matrices `T_sigma` and the
//! Hermitian matrices `J_n tau_n(T_sigma)^-1`.

mod soform;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{int, Field, Matrix, Rational, Ring};

pub use soform::{so_form_from_cocycle, ExtensionCase, SoForm};

/// Binomial coefficient as `i64`.
pub(crate) fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i64 / (i + 1) as i64;
    }
    acc
}

/// `n!` as a rational.
pub(crate) fn factorial(n: usize) -> Rational {
    (1..=n).fold(int(1), |acc, i| acc * int(i as i64))
}

/// Coefficients of `(u X + w Y)^m` on `X^{m-r} Y^r`, `r = 0..=m`.
fn binomial_power<T: Ring>(u: &T, w: &T, m: usize) -> Vec<T> {
    let mut upow = vec![u.one_like()];
    let mut wpow = vec![u.one_like()];
    for _ in 0..m {
        upow.push(upow.last().expect("nonempty").times(u));
        wpow.push(wpow.last().expect("nonempty").times(w));
    }
    (0..=m).map(|r| u.int_like(binomial(m, r)).times(&upow[m - r]).times(&wpow[r])).collect()
}

/// The matrix of `tau_n(M)` on homogeneous polynomials of degree `n-1` in the
/// basis `X^{n-1}, X^{n-2} Y, ..., Y^{n-1}`.
///
/// For `M = [[a, b], [c, d]]` the basis vector `X^{n-1-i} Y^i` is sent to
/// `(aX + cY)^{n-1-i} (bX + dY)^i`; column `i` holds its coefficients.
/// Any invertible `M` is accepted.
pub fn tau<T: Field>(n: usize, m: &Matrix<T>) -> Result<Matrix<T>> {
    if n < 1 {
        return Err(Error::Precondition("tau_n needs n >= 1".into()));
    }
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::Dimension("tau_n acts on 2x2 matrices".into()));
    }
    if m.det()?.is_zero_elem() {
        return Err(Error::Singular);
    }
    let (a, b, c, d) = (&m[(0, 0)], &m[(0, 1)], &m[(1, 0)], &m[(1, 1)]);
    let mut out = Matrix::zeros(n, n, a);
    for i in 0..n {
        let p1 = binomial_power(a, c, n - 1 - i);
        let p2 = binomial_power(b, d, i);
        for (r1, x) in p1.iter().enumerate() {
            if x.is_zero_elem() {
                continue;
            }
            for (r2, y) in p2.iter().enumerate() {
                if y.is_zero_elem() {
                    continue;
                }
                let j = r1 + r2;
                let v = out[(j, i)].plus(&x.times(y));
                out[(j, i)] = v;
            }
        }
    }
    Ok(out)
}

/// Entry `(i, n+1-i)` of `J_n` (1-based): `(-1)^{i-1} (n-i)! (i-1)!`.
pub fn j_entry(n: usize, i: usize) -> Rational {
    let sign = if (i - 1).is_multiple_of(2) { int(1) } else { int(-1) };
    sign * factorial(n - i) * factorial(i - 1)
}

/// The antidiagonal form `J_n` preserved by `tau_n`.
pub fn j_matrix(n: usize) -> Matrix<Rational> {
    let entries: Vec<Rational> = (1..=n).map(|i| j_entry(n, i)).collect();
    Matrix::antidiagonal(&entries)
}

/// `J_n` over the ring of `like`.
pub fn j_matrix_like<T: Ring>(n: usize, like: &T, lift: impl Fn(&Rational) -> T) -> Matrix<T> {
    let _ = like;
    j_matrix(n).map(lift)
}

/// Trace polynomial `P_n` with `Tr tau_n(A) = P_n(Tr A)` on `SL(2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TracePoly {
    /// Dimension of the representation.
    pub n: usize,
    /// Integer coefficients in increasing degree.
    pub coeffs: Vec<i64>,
}

impl TracePoly {
    /// Evaluates at `t` in any ring.
    pub fn eval<T: Ring>(&self, t: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(t.zero_like(), |acc, &c| acc.times(t).plus(&t.int_like(c)))
    }

    /// Evaluates at `t` modulo `p`.
    pub fn eval_mod(&self, t: u64, p: u64) -> u64 {
        let p = p as i128;
        self.coeffs
            .iter()
            .rev()
            .fold(0i128, |acc, &c| (acc * t as i128 + c as i128).rem_euclid(p)) as u64
    }
}

impl fmt::Display for TracePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if out.is_empty() { "" } else { "+" };
            let a = c.abs();
            let body = match (deg, a) {
                (0, _) => a.to_string(),
                (1, 1) => "t".to_string(),
                (1, _) => format!("{a}t"),
                (_, 1) => format!("t^{deg}"),
                _ => format!("{a}t^{deg}"),
            };
            out.push_str(sign);
            out.push_str(&body);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

/// `P_1 = 1`, `P_2 = t`, `P_n = t P_{n-1} - P_{n-2}`.
pub fn trace_poly(n: usize) -> Result<TracePoly> {
    if n < 1 {
        return Err(Error::Precondition("trace polynomial needs n >= 1".into()));
    }
    let mut prev: Vec<i64> = vec![1];
    if n == 1 {
        return Ok(TracePoly { n, coeffs: prev });
    }
    let mut cur: Vec<i64> = vec![0, 1];
    for _ in 3..=n {
        let mut next = vec![0i64; cur.len() + 1];
        for (i, &c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, &c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(TracePoly { n, coeffs: cur })
}

/// Action of a Galois element on `(sqrt a, sqrt b)`, as a pair of signs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignPair {
    /// Sign on `sqrt a`.
    pub a: i8,
    /// Sign on `sqrt b`.
    pub b: i8,
}

impl SignPair {
    /// The four sign patterns in the order `(+,+), (+,-), (-,+), (-,-)`.
    pub const ALL: [SignPair; 4] = [
        SignPair { a: 1, b: 1 },
        SignPair { a: 1, b: -1 },
        SignPair { a: -1, b: 1 },
        SignPair { a: -1, b: -1 },
    ];

    /// Validated pair.
    pub fn new(a: i8, b: i8) -> Result<Self> {
        if a.abs() != 1 || b.abs() != 1 {
            return Err(Error::Precondition(format!("signs must be +-1, got ({a},{b})")));
        }
        Ok(SignPair { a, b })
    }

    /// Parses `++`, `+-`, `-+`, `--` or the same with a comma.
    pub fn parse(s: &str) -> Result<Self> {
        let t: Vec<char> = s.chars().filter(|c| *c == '+' || *c == '-').collect();
        if t.len() != 2 || s.chars().any(|c| !matches!(c, '+' | '-' | ',' | '(' | ')' | ' ')) {
            return Err(Error::Parse(format!("expected a sign pair like \"-,+\", got {s:?}")));
        }
        let sign = |c: char| if c == '+' { 1 } else { -1 };
        SignPair::new(sign(t[0]), sign(t[1]))
    }
}

impl fmt::Display for SignPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = |s: i8| if s > 0 { '+' } else { '-' };
        write!(f, "{}{}", c(self.a), c(self.b))
    }
}

/// The cocycle matrix `T_sigma`: `I` for `(+,+)`, `diag(1,-1)` for `(+,-)`,
/// `[[0,1],[1,0]]` for `(-,+)` and `[[0,1],[-1,0]]` for `(-,-)`.
pub fn cocycle_matrix(signs: SignPair) -> Matrix<Rational> {
    let m = |r: [[i64; 2]; 2]| {
        Matrix::from_rows(r.iter().map(|row| row.iter().map(|&x| int(x)).collect()).collect())
            .expect("2x2")
    };
    match (signs.a, signs.b) {
        (1, 1) => m([[1, 0], [0, 1]]),
        (1, _) => m([[1, 0], [0, -1]]),
        (_, 1) => m([[0, 1], [1, 0]]),
        _ => m([[0, 1], [-1, 0]]),
    }
}

/// The matrix `J_n tau_n(T_sigma)^-1` of the Hermitian form preserved by
/// `tau_n` of the quaternion lattice.
pub fn hermitian_h(n: usize, signs: SignPair) -> Result<Matrix<Rational>> {
    let t = tau(n, &cocycle_matrix(signs))?;
    Ok(&j_matrix(n) * &t.inverse()?)
}

/// The sign `e` with `H^T = e H` for `H = hermitian_h(n, signs)`.
///
/// It is `+1` except for the identity pattern in even dimension, where `H`
/// is the alternating form `J_n` itself.
pub fn hermitian_symmetry_sign(n: usize, signs: SignPair) -> i8 {
    if signs == (SignPair { a: 1, b: 1 }) && n.is_multiple_of(2) {
        -1
    } else {
        1
    }
}

/// Whether `H^T = e H` holds with the predicted sign `e`.
pub fn hermitian_symmetry_holds(n: usize, signs: SignPair) -> Result<bool> {
    let h = hermitian_h(n, signs)?;
    let e = hermitian_symmetry_sign(n, signs);
    let expected = if e > 0 { h.clone() } else { h.negated() };
    Ok(h.transpose() == expected)
}

/// Whether `tau_n(T) J_n = det(T)^{n-1} J_n tau_n(T)`: the two commute in odd
/// dimension and whenever `det T = 1`, and anticommute otherwise.
pub fn cocycle_commutes_with_j(n: usize, signs: SignPair) -> Result<bool> {
    let t = tau(n, &cocycle_matrix(signs))?;
    let j = j_matrix(n);
    let rhs = &j * &t;
    let rhs = if signs.a * signs.b < 0 && n.is_multiple_of(2) { rhs.negated() } else { rhs };
    Ok(&t * &j == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, span_dimension};

    fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn tau_examples() {
        assert!(tau(4, &qm(&[&[1, 0], &[0, 1]])).unwrap().is_identity());
        assert_eq!(
            tau(3, &qm(&[&[1, 1], &[0, 1]])).unwrap(),
            qm(&[&[1, 1, 1], &[0, 1, 2], &[0, 0, 1]])
        );
        let l = rat(3, 2);
        let d = Matrix::diagonal(&[l.clone(), l.recip()]);
        assert_eq!(
            tau(3, &d).unwrap(),
            Matrix::diagonal(&[l.clone() * &l, int(1), (l.clone() * &l).recip()])
        );
        assert_eq!(tau(3, &qm(&[&[1, 2], &[2, 4]])), Err(Error::Singular));
    }

    #[test]
    fn j_examples() {
        assert_eq!(j_matrix(2), qm(&[&[0, 1], &[-1, 0]]));
        assert_eq!(j_matrix(3), qm(&[&[0, 0, 2], &[0, -1, 0], &[2, 0, 0]]));
        for n in 2..=9 {
            let j = j_matrix(n);
            let expected = if n % 2 == 1 { j.clone() } else { j.negated() };
            assert_eq!(j.transpose(), expected, "n={n}");
        }
    }

    #[test]
    fn trace_polys() {
        assert_eq!(trace_poly(2).unwrap().to_string(), "t");
        assert_eq!(trace_poly(3).unwrap().to_string(), "t^2-1");
        assert_eq!(trace_poly(4).unwrap().to_string(), "t^3-2t");
        assert_eq!(trace_poly(1).unwrap().to_string(), "1");
        let a = qm(&[&[2, 3], &[1, 2]]);
        for n in 1..=8 {
            let p = trace_poly(n).unwrap();
            assert_eq!(p.eval(&a.trace()), tau(n, &a).unwrap().trace(), "n={n}");
        }
        assert_eq!(trace_poly(3).unwrap().eval_mod(2, 5), 3);
    }

    #[test]
    fn cocycles_and_hermitian_matrices() {
        assert!(cocycle_matrix(SignPair::new(1, 1).unwrap()).is_identity());
        assert_eq!(cocycle_matrix(SignPair::new(-1, 1).unwrap()), qm(&[&[0, 1], &[1, 0]]));
        assert_eq!(cocycle_matrix(SignPair::new(-1, -1).unwrap()), qm(&[&[0, 1], &[-1, 0]]));
        assert_eq!(cocycle_matrix(SignPair::new(1, -1).unwrap()), qm(&[&[1, 0], &[0, -1]]));
        assert_eq!(
            hermitian_h(3, SignPair::new(-1, -1).unwrap()).unwrap(),
            Matrix::diagonal(&[int(2), int(1), int(2)])
        );
        assert_eq!(hermitian_h(2, SignPair::new(1, 1).unwrap()).unwrap(), j_matrix(2));
        for n in 2..=7 {
            for s in SignPair::ALL {
                assert!(hermitian_symmetry_holds(n, s).unwrap(), "n={n} signs={s}");
                assert!(cocycle_commutes_with_j(n, s).unwrap(), "n={n} signs={s}");
            }
        }
        assert_eq!(SignPair::parse("-,+").unwrap(), SignPair::new(-1, 1).unwrap());
        assert!(SignPair::parse("+").is_err());
    }

    #[test]
    fn span_of_tau3_pair_is_full() {
        let g = qm(&[&[2, 1], &[1, 1]]);
        let h = qm(&[&[1, 0], &[3, 1]]);
        let mats = [tau(3, &g).unwrap(), tau(3, &h).unwrap()];
        assert_eq!(span_dimension(&mats).unwrap(), 9);
    }
}
