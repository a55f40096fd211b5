//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls the library routine it is used to check: Hilbert
//! symbols come from an isotropy search, `tau_n` from multiplying out
//! polynomials, and the expected orthogonal forms from the displayed
//! diagonal patterns.

#![allow(dead_code)]

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap};

use hitchin_forge::exactnum::{int, rat, Matrix, Rational};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;

/// Removes square factors of `p` from `c`.
fn strip_p_squares(mut c: i64, p: i64) -> i64 {
    while c % (p * p) == 0 {
        c /= p * p;
    }
    c
}

/// Rescales `c1 x^2 + c2 y^2 + c3 z^2` so that at most one coefficient is
/// divisible by `p`, each with valuation at most one. Isotropy over `Q_p` is
/// unchanged: square factors are absorbed into the variables, and when two
/// coefficients share `p` the form is divided by `p` after `z -> p z`.
fn normalize(mut c: [i64; 3], p: i64) -> [i64; 3] {
    loop {
        for x in c.iter_mut() {
            *x = strip_p_squares(*x, p);
        }
        let div: Vec<usize> = (0..3).filter(|&i| c[i] % p == 0).collect();
        if div.len() < 2 {
            return c;
        }
        let (i, j) = (div[0], div[1]);
        let k = 3 - i - j;
        c[i] /= p;
        c[j] /= p;
        c[k] *= p;
    }
}

thread_local! {
    static MEMO: RefCell<HashMap<(i64, [i64; 3]), bool>> = RefCell::new(HashMap::new());
}

/// Whether the normalized form has a root modulo `m` (`m = p` for odd `p`,
/// `m = 8` for `p = 2`) whose coordinate at some `p`-unit coefficient is a
/// unit. By Hensel's lemma such a root lifts to `Z_p`, and any primitive
/// `p`-adic root reduces to one.
fn local_root(c: [i64; 3], p: i64) -> bool {
    let m = if p == 2 { 8 } else { p };
    let key = (p, c.map(|x| x.rem_euclid(m)));
    if let Some(v) = MEMO.with(|memo| memo.borrow().get(&key).copied()) {
        return v;
    }
    let mut found = false;
    'search: for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                let v = [x, y, z];
                let q: i64 = (0..3).map(|i| c[i] * v[i] * v[i]).sum();
                if q.rem_euclid(m) != 0 {
                    continue;
                }
                if (0..3).any(|i| c[i] % p != 0 && v[i] % p != 0) {
                    found = true;
                    break 'search;
                }
            }
        }
    }
    MEMO.with(|memo| memo.borrow_mut().insert(key, found));
    found
}

/// `(a, b)_v` decided by whether `a x^2 + b y^2 = z^2` has a nontrivial
/// solution over `Q_v`. `place = None` is the real place.
pub fn hilbert_brute(a: i64, b: i64, place: Option<u64>) -> i8 {
    assert!(a != 0 && b != 0);
    let iso = match place {
        None => a > 0 || b > 0,
        Some(p) => {
            let p = p as i64;
            local_root(normalize([a, b, -1], p), p)
        }
    };
    if iso {
        1
    } else {
        -1
    }
}

/// `hilbert_brute` on rationals, through the integer `numerator * denominator`.
pub fn hilbert_brute_q(a: &Rational, b: &Rational, place: Option<u64>) -> i8 {
    let rep = |r: &Rational| (r.numer() * r.denom()).to_i64().expect("small rational");
    hilbert_brute(rep(a), rep(b), place)
}

/// Hasse invariant `prod_{i<j} (d_i, d_j)_v` of a diagonal form, by brute force.
pub fn hasse_brute(diag: &[Rational], place: Option<u64>) -> i8 {
    let mut e = 1;
    for i in 0..diag.len() {
        for j in i + 1..diag.len() {
            e *= hilbert_brute_q(&diag[i], &diag[j], place);
        }
    }
    e
}

/// Odd primes up to `bound`.
pub fn odd_primes(bound: u64) -> Vec<u64> {
    (3..=bound).filter(|&n| (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)).collect()
}

fn poly_mul(x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let mut out = vec![int(0); x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            out[i + j] = &out[i + j] + a * b;
        }
    }
    out
}

/// `tau_n(M)` computed by multiplying out `(aX + cY)^{n-1-i} (bX + dY)^i`
/// factor by factor; polynomials are stored by increasing power of `Y`.
pub fn tau_expand(n: usize, m: &Matrix<Rational>) -> Matrix<Rational> {
    let (a, b, c, d) = (m[(0, 0)].clone(), m[(0, 1)].clone(), m[(1, 0)].clone(), m[(1, 1)].clone());
    let first = vec![a, c];
    let second = vec![b, d];
    let mut out = Matrix::zeros(n, n, &int(0));
    for i in 0..n {
        let mut poly = vec![int(1)];
        for _ in 0..n - 1 - i {
            poly = poly_mul(&poly, &first);
        }
        for _ in 0..i {
            poly = poly_mul(&poly, &second);
        }
        for (r, coeff) in poly.into_iter().enumerate() {
            out[(r, i)] = coeff;
        }
    }
    out
}

/// `J_n` from its definition: antidiagonal entries `(-1)^{i-1} (n-i)! (i-1)!`.
pub fn j_direct(n: usize) -> Matrix<Rational> {
    let fact = |k: usize| (1..=k as i64).product::<i64>();
    let mut m = Matrix::zeros(n, n, &int(0));
    for i in 1..=n {
        let sign = if i % 2 == 1 { 1 } else { -1 };
        m[(i - 1, n - i)] = int(sign * fact(n - i) * fact(i - 1));
    }
    m
}

/// Traces of `tau_n(M)` for `M = [[t, -1], [1, 0]]`, `t = 0..p-1`, reduced mod `p`.
///
/// Every element of `F_p` is the trace of such a matrix in `SL(2, F_p)`, so
/// this is the image of the trace polynomial on `F_p`.
pub fn trace_image_brute(n: usize, p: u64) -> BTreeSet<u64> {
    let pb = num_bigint::BigInt::from(p);
    (0..p)
        .map(|t| {
            let m = Matrix::from_rows(vec![vec![int(t as i64), int(-1)], vec![int(1), int(0)]]).unwrap();
            let tr = tau_expand(n, &m).trace();
            assert!(tr.is_integer());
            tr.to_integer().mod_floor(&pb).to_u64().unwrap()
        })
        .collect()
}

fn factorial(k: usize) -> Rational {
    int((1..=k as i64).product::<i64>())
}

/// The diagonal of the orthogonal form built from the cocycle, read off the
/// displayed patterns: position `j` and its mirror `n+1-j` carry the displayed
/// coefficients times `(n-j)! (j-1)!`, and the patterns alternate with the
/// parity of `j`.
pub fn displayed_diagonal(n: usize, a: i64, b: i64, degree4: bool) -> Vec<Rational> {
    let k = (n - 1) / 2;
    let (a, b) = (int(a), int(b));
    let two = int(2);
    let mut out = vec![int(0); n];
    for j in 1..=k {
        let scale = factorial(n - j) * factorial(j - 1);
        let odd = j % 2 == 1;
        let (front, back) = match (n % 4 == 1, degree4, odd) {
            (_, false, _) => (two.clone(), -&two * &a),
            (true, true, true) => (-&two * &a, two.clone()),
            (true, true, false) => (-&two * &b, &two * &a * &b),
            (false, true, true) => (-&two * &b, &two * &a * &b),
            (false, true, false) => (two.clone(), -&two * &a),
        };
        out[j - 1] = front * &scale;
        out[n - j] = back * &scale;
    }
    let middle = factorial(k) * factorial(k);
    out[k] = if n % 4 == 1 { middle } else { -a * middle };
    out
}

/// The closed-form Hasse invariant at an odd or even prime stated for the
/// orthogonal form: `(-1,-1)^m (a, c)` with the displayed `m` and `c`.
pub fn displayed_hasse(n: usize, a: i64, b: i64, degree4: bool, p: u64) -> i8 {
    let pow = |base: i64, e: usize| -> i64 { if e.is_multiple_of(2) { 1 } else { base } };
    let (m, c) = if n % 4 == 1 {
        let m = (n - 1) / 4;
        (m, if degree4 { pow(b, m) } else { pow(-1, m) })
    } else {
        let m = (n + 1) / 4;
        let c = if degree4 { pow(b, m) } else { pow(-1, (n - 3) / 4) * a };
        (m, c)
    };
    let base = if m % 2 == 0 { 1 } else { hilbert_brute(-1, -1, Some(p)) };
    base * hilbert_brute(a, c, Some(p))
}

/// A rational with numerator and denominator of absolute value at most `bound`.
pub fn random_rational(rng: &mut impl Rng, bound: i64) -> Rational {
    rat(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound))
}

/// A random element of `SL(2, Q)` whose entries have numerators and
/// denominators bounded by `bound`, found by rejection sampling on `d`.
pub fn random_sl2q(rng: &mut impl Rng, bound: i64) -> Matrix<Rational> {
    let limit = num_bigint::BigInt::from(bound);
    let small = |r: &Rational| r.numer().abs() <= limit && r.denom().abs() <= limit;
    loop {
        let a = random_rational(rng, bound);
        if a.is_zero() {
            continue;
        }
        let b = random_rational(rng, bound);
        let c = random_rational(rng, bound);
        let d = (int(1) + &b * &c) / &a;
        if small(&d) {
            return Matrix::from_rows(vec![vec![a, b], vec![c, d]]).unwrap();
        }
    }
}

/// A product of `len` random letters from `S = [[0,-1],[1,0]]`, `T = [[1,1],[0,1]]`
/// and `T^-1`, as a rational matrix in `SL(2, Z)`.
pub fn random_sl2z_word(rng: &mut impl Rng, len: usize) -> Matrix<Rational> {
    let m = |r: [[i64; 2]; 2]| Matrix::from_rows(r.iter().map(|row| row.iter().map(|&x| int(x)).collect()).collect()).unwrap();
    let letters = [m([[0, -1], [1, 0]]), m([[1, 1], [0, 1]]), m([[1, -1], [0, 1]])];
    let mut acc = m([[1, 0], [0, 1]]);
    for _ in 0..len {
        acc = &acc * &letters[rng.gen_range(0..letters.len())];
    }
    acc
}

/// `|SL(n, q)|`, `|SU(n, q)|` and `|Sp(2m, q)|` from the textbook products.
pub fn order_sl(n: u32, q: u128) -> u128 {
    q.pow(n * (n - 1) / 2) * (2..=n).map(|i| q.pow(i) - 1).product::<u128>()
}

/// `|SU(n, q)| = q^{n(n-1)/2} prod_{i=2..n} (q^i - (-1)^i)`.
pub fn order_su(n: u32, q: u128) -> u128 {
    q.pow(n * (n - 1) / 2) * (2..=n).map(|i| if i % 2 == 0 { q.pow(i) - 1 } else { q.pow(i) + 1 }).product::<u128>()
}

/// `|Sp(2m, q)| = q^{m^2} prod_{i=1..m} (q^{2i} - 1)`.
pub fn order_sp(n: u32, q: u128) -> u128 {
    let m = n / 2;
    q.pow(m * m) * (1..=m).map(|i| q.pow(2 * i) - 1).product::<u128>()
}
