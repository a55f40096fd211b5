//! The seven-dimensional cross product adapted to `J_7`, the split octonion
//! algebra `R + R^7` built from it, and the group `G_2` of matrices in
//! `SO(J_7)` that preserve the cross product.

use crate::error::{Error, Result};
use crate::exactnum::{to_i64, Field, Matrix, Ring};
use crate::symrep::j_matrix;

/// The structure constants: `(k, [(i, j, c)])` means coordinate `k` of
/// `x cross y` contains `c (x_i y_j - x_j y_i)` (all indices 1-based).
const CROSS_TERMS: [&[(usize, usize, i64)]; 7] = [
    &[(1, 4, 6), (2, 3, -4)],
    &[(1, 5, 24), (2, 4, -6)],
    &[(1, 6, 60), (3, 4, -6)],
    &[(1, 7, 120), (2, 6, 20), (3, 5, -8)],
    &[(2, 7, 60), (4, 5, -6)],
    &[(3, 7, 24), (4, 6, -6)],
    &[(4, 7, 6), (5, 6, -4)],
];

fn check_len<T>(x: &[T]) -> Result<()> {
    if x.len() != 7 {
        return Err(Error::Dimension(format!("expected a vector of length 7, got {}", x.len())));
    }
    Ok(())
}

/// The cross product on `R^7` whose first coordinate is
/// `6(x1 y4 - x4 y1) - 4(x2 y3 - x3 y2)`.
pub fn cross7<T: Ring>(x: &[T], y: &[T]) -> Result<Vec<T>> {
    check_len(x)?;
    check_len(y)?;
    Ok(CROSS_TERMS
        .iter()
        .map(|terms| {
            terms.iter().fold(x[0].zero_like(), |acc, &(i, j, c)| {
                let w = x[i - 1].times(&y[j - 1]).minus(&x[j - 1].times(&y[i - 1]));
                acc.plus(&w.times(&x[0].int_like(c)))
            })
        })
        .collect())
}

/// The bilinear form `v^T J_7 w`.
pub fn j7_pairing<T: Ring>(v: &[T], w: &[T]) -> Result<T> {
    check_len(v)?;
    check_len(w)?;
    let j = j_matrix(7);
    let mut acc = v[0].zero_like();
    for i in 0..7 {
        let c = to_i64(&j[(i, 6 - i)]).expect("small entries");
        acc = acc.plus(&v[i].times(&w[6 - i]).times(&v[0].int_like(c)));
    }
    Ok(acc)
}

/// An element `(t, v)` of `R + R^7` with the split octonion product.
#[derive(Clone, Debug, PartialEq)]
pub struct Octonion<T> {
    /// Scalar part.
    pub t: T,
    /// Vector part, of length 7.
    pub v: Vec<T>,
}

impl<T: Ring> Octonion<T> {
    /// Validated octonion.
    pub fn new(t: T, v: Vec<T>) -> Result<Self> {
        check_len(&v)?;
        Ok(Octonion { t, v })
    }

    /// The unit `(1, 0)` of the ring of `like`.
    pub fn one(like: &T) -> Self {
        Octonion { t: like.one_like(), v: vec![like.zero_like(); 7] }
    }
}

/// `(t, v)(s, w) = (ts - v^T J_7 w, tw + sv + v cross w)`.
pub fn oct_mul<T: Ring>(p: &Octonion<T>, q: &Octonion<T>) -> Result<Octonion<T>> {
    let scalar = p.t.times(&q.t).minus(&j7_pairing(&p.v, &q.v)?);
    let c = cross7(&p.v, &q.v)?;
    let v = (0..7).map(|i| p.t.times(&q.v[i]).plus(&q.t.times(&p.v[i])).plus(&c[i])).collect();
    Ok(Octonion { t: scalar, v })
}

/// `N(t, v) = t^2 + v^T J_7 v`.
pub fn oct_norm<T: Ring>(p: &Octonion<T>) -> Result<T> {
    Ok(p.t.times(&p.t).plus(&j7_pairing(&p.v, &p.v)?))
}

/// Whether `M` lies in `G_2`: `M^T J_7 M = J_7`, `det M = 1`, and
/// `M(e_i cross e_j) = M e_i cross M e_j` for the 21 basis pairs.
pub fn in_g2<T: Field>(m: &Matrix<T>) -> Result<bool> {
    if m.rows() != 7 || m.cols() != 7 {
        return Err(Error::Dimension("G2 membership needs a 7x7 matrix".into()));
    }
    let like = &m[(0, 0)];
    let j = j_matrix(7).map(|x| like.int_like(to_i64(x).expect("small entries")));
    if &(&m.transpose() * &j) * m != j || !m.det()?.is_one_elem() {
        return Ok(false);
    }
    let col = |k: usize| (0..7).map(|r| m[(r, k)].clone()).collect::<Vec<T>>();
    let cols: Vec<Vec<T>> = (0..7).map(col).collect();
    for a in 0..7 {
        for b in a + 1..7 {
            let mut ea = vec![like.zero_like(); 7];
            let mut eb = ea.clone();
            ea[a] = like.one_like();
            eb[b] = like.one_like();
            let c = cross7(&ea, &eb)?;
            let lhs: Vec<T> = (0..7)
                .map(|r| (0..7).fold(like.zero_like(), |acc, k| acc.plus(&m[(r, k)].times(&c[k]))))
                .collect();
            if lhs != cross7(&cols[a], &cols[b])? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, FieldElem, Rational};
    use crate::symrep::tau;

    fn e(i: usize) -> Vec<Rational> {
        let mut v = vec![int(0); 7];
        v[i - 1] = int(1);
        v
    }

    #[test]
    fn basis_products() {
        let mut six_e1 = vec![int(0); 7];
        six_e1[0] = int(6);
        assert_eq!(cross7(&e(1), &e(4)).unwrap(), six_e1);
        let mut m4 = vec![int(0); 7];
        m4[0] = int(-4);
        assert_eq!(cross7(&e(2), &e(3)).unwrap(), m4);
        assert!(cross7(&e(1)[..6], &e(2)).is_err());
    }

    #[test]
    fn g2_examples() {
        let u = Matrix::from_rows(vec![vec![int(1), int(1)], vec![int(0), int(1)]]).unwrap();
        assert!(in_g2(&tau(7, &u).unwrap()).unwrap());
        let t = int(2);
        let d = Matrix::diagonal(&[t.clone(), t.clone(), int(1), int(1), int(1), t.recip(), t.recip()]);
        assert!(in_g2(&d).unwrap());
        let w = FieldElem::quadratic(3, 2, 1).unwrap();
        let w2 = w.pow(2);
        let s2 = w.pow(-2);
        let one = w.one_like();
        let bad = Matrix::diagonal(&[w2.clone(), s2.clone(), one.clone(), one.clone(), one, w2, s2]);
        assert!(!in_g2(&bad).unwrap());
    }

    #[test]
    fn octonion_unit() {
        let q = Octonion::new(int(3), (1..=7).map(int).collect()).unwrap();
        let one = Octonion::one(&int(0));
        assert_eq!(oct_mul(&one, &q).unwrap(), q);
        assert_eq!(oct_norm(&one).unwrap(), int(1));
    }
}
