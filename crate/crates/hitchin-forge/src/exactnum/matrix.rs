//! Dense matrices over any [`Ring`], with exact elimination over fields.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use super::ring::{Field, Ring};
use crate::error::{Error, Result};

/// A dense row-major matrix with entries in a ring `T`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[T]> = self.data.chunks(self.cols.max(1)).collect();
        f.debug_list().entries(rows).finish()
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<T> Matrix<T> {
    /// Builds a matrix from row-major data.
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 || data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Builds a matrix from a list of equally long rows.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Whether the matrix is square.
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[T] {
        &self.data
    }

    /// Row `i` as a slice.
    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Applies `f` to every entry.
    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Applies a fallible `f` to every entry.
    pub fn try_map<U>(&self, f: impl FnMut(&T) -> Result<U>) -> Result<Matrix<U>> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<Vec<U>>>()?,
        })
    }
}

impl<T: Ring> Matrix<T> {
    /// The `rows x cols` zero matrix over the ring of `like`.
    pub fn zeros(rows: usize, cols: usize, like: &T) -> Self {
        Matrix { rows, cols, data: vec![like.zero_like(); rows * cols] }
    }

    /// The `n x n` identity over the ring of `like`.
    pub fn identity(n: usize, like: &T) -> Self {
        let mut m = Self::zeros(n, n, like);
        for i in 0..n {
            m[(i, i)] = like.one_like();
        }
        m
    }

    /// Diagonal matrix with the given entries.
    pub fn diagonal(entries: &[T]) -> Self {
        assert!(!entries.is_empty(), "empty diagonal");
        let mut m = Self::zeros(entries.len(), entries.len(), &entries[0]);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    /// Antidiagonal matrix: entry `(i, n-1-i)` is `entries[i]`.
    pub fn antidiagonal(entries: &[T]) -> Self {
        assert!(!entries.is_empty(), "empty antidiagonal");
        let n = entries.len();
        let mut m = Self::zeros(n, n, &entries[0]);
        for (i, e) in entries.iter().enumerate() {
            m[(i, n - 1 - i)] = e.clone();
        }
        m
    }

    /// Transpose.
    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self[(i, j)].clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    /// Checked product `self * other`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = self.data[0].zero_like();
                for k in 0..self.cols {
                    let a = &self[(i, k)];
                    let b = &other[(k, j)];
                    if a.is_zero_elem() || b.is_zero_elem() {
                        continue;
                    }
                    acc = acc.plus(&a.times(b));
                }
                data.push(acc);
            }
        }
        Ok(Matrix { rows: self.rows, cols: other.cols, data })
    }

    /// Checked sum.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, T::plus)
    }

    /// Checked difference.
    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, T::minus)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "shape {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    /// Multiplies every entry by `s` on the left.
    pub fn scale(&self, s: &T) -> Self {
        self.map(|e| s.times(e))
    }

    /// Negation.
    pub fn negated(&self) -> Self {
        self.map(T::negated)
    }

    /// Sum of diagonal entries.
    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols))
            .fold(self.data[0].zero_like(), |acc, i| acc.plus(&self[(i, i)]))
    }

    /// Whether all off-diagonal entries vanish.
    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero_elem()))
    }

    /// Diagonal entries.
    pub fn diagonal_entries(&self) -> Vec<T> {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).collect()
    }

    /// Whether this is the identity matrix.
    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = &self[(i, j)];
                    if i == j {
                        e.is_one_elem()
                    } else {
                        e.is_zero_elem()
                    }
                })
            })
    }

    /// Non-negative integer power of a square matrix.
    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square(), "power of a non-square matrix");
        let mut result = Self::identity(self.rows, &self.data[0]);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    /// Places `self` in the top-left corner of an `n x n` identity matrix.
    pub fn embed_top_left(&self, n: usize) -> Self {
        assert!(self.is_square() && self.rows <= n, "block larger than target");
        let mut m = Self::identity(n, &self.data[0]);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Block-diagonal sum of square matrices over the same ring.
    pub fn block_diagonal(blocks: &[Self]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let like = &blocks[0].data[0];
        let mut m = Self::zeros(n, n, like);
        let mut off = 0;
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m[(off + i, off + j)] = b[(i, j)].clone();
                }
            }
            off += b.rows;
        }
        m
    }
}

impl<T: Field> Matrix<T> {
    /// Determinant by exact Gaussian elimination.
    pub fn det(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut det = self.data[0].one_like();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero_elem()) else {
                return Ok(self.data[0].zero_like());
            };
            if p != col {
                a.swap_rows(p, col);
                det = det.negated();
            }
            let pivot = a[(col, col)].clone();
            det = det.times(&pivot);
            let inv = pivot.inverse().expect("nonzero pivot");
            for r in col + 1..n {
                if a[(r, col)].is_zero_elem() {
                    continue;
                }
                let f = a[(r, col)].times(&inv);
                for c in col..n {
                    let v = a[(r, c)].minus(&f.times(&a[(col, c)]));
                    a[(r, c)] = v;
                }
            }
        }
        Ok(det)
    }

    /// Inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n, &self.data[0]);
        for col in 0..n {
            let p = (col..n).find(|&r| !a[(r, col)].is_zero_elem()).ok_or(Error::Singular)?;
            a.swap_rows(p, col);
            inv.swap_rows(p, col);
            let pinv = a[(col, col)].inverse().expect("nonzero pivot");
            for c in 0..n {
                a[(col, c)] = a[(col, c)].times(&pinv);
                inv[(col, c)] = inv[(col, c)].times(&pinv);
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero_elem() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for c in 0..n {
                    let v = a[(r, c)].minus(&f.times(&a[(col, c)]));
                    a[(r, c)] = v;
                    let w = inv[(r, c)].minus(&f.times(&inv[(col, c)]));
                    inv[(r, c)] = w;
                }
            }
        }
        Ok(inv)
    }

    /// Rank by exact elimination.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<T>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        reduce_rows(&mut rows)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Brings a list of row vectors to echelon form in place; returns the rank
/// and leaves only the nonzero rows.
fn reduce_rows<T: Field>(rows: &mut Vec<Vec<T>>) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero_elem()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inverse().expect("nonzero pivot");
        for c in col..width {
            rows[rank][c] = rows[rank][c].times(&inv);
        }
        for r in 0..rows.len() {
            if r == rank || rows[r][col].is_zero_elem() {
                continue;
            }
            let f = rows[r][col].clone();
            for c in col..width {
                let v = rows[r][c].minus(&f.times(&rows[rank][c]));
                rows[r][c] = v;
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rank
}

/// Incrementally maintained reduced echelon basis of a space of flattened matrices.
struct SpanBasis<T> {
    rows: Vec<Vec<T>>,
}

impl<T: Field> SpanBasis<T> {
    /// Adds `v` if it is independent of the current basis; returns whether it was new.
    fn insert(&mut self, v: &[T]) -> bool {
        let mut w = v.to_vec();
        for row in &self.rows {
            let lead = row.iter().position(|e| !e.is_zero_elem()).expect("basis rows are nonzero");
            if !w[lead].is_zero_elem() {
                let f = w[lead].clone();
                for (x, y) in w.iter_mut().zip(row) {
                    *x = x.minus(&f.times(y));
                }
            }
        }
        if w.iter().all(T::is_zero_elem) {
            return false;
        }
        let lead = w.iter().position(|e| !e.is_zero_elem()).expect("nonzero");
        let inv = w[lead].inverse().expect("nonzero");
        for x in w.iter_mut() {
            *x = x.times(&inv);
        }
        for row in self.rows.iter_mut() {
            if !row[lead].is_zero_elem() {
                let f = row[lead].clone();
                for (x, y) in row.iter_mut().zip(&w) {
                    *x = x.minus(&f.times(y));
                }
            }
        }
        self.rows.push(w);
        true
    }
}

/// Dimension of the unital algebra generated by `mats`.
///
/// Words in the generators are added by increasing length, starting from the
/// identity, until the span stops growing or reaches `n^2`. A word of length
/// `L+1` is a generator times a word of length `L`, so once one length adds
/// nothing new no longer word can either.
pub fn span_dimension<T: Field>(mats: &[Matrix<T>]) -> Result<usize> {
    let Some(first) = mats.first() else {
        return Ok(0);
    };
    let n = first.rows;
    if mats.iter().any(|m| m.rows != n || m.cols != n) {
        return Err(Error::Dimension("span_dimension needs square matrices of one size".into()));
    }
    let like = &first.data[0];
    let mut basis = SpanBasis { rows: Vec::new() };
    let id = Matrix::identity(n, like);
    basis.insert(&id.data);
    let mut frontier = vec![id];
    while !frontier.is_empty() && basis.rows.len() < n * n {
        let mut next = Vec::new();
        for w in &frontier {
            for g in mats {
                let p = g * w;
                if basis.insert(&p.data) {
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    Ok(basis.rows.len())
}

impl<T: Ring> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    /// Matrix product; panics on incompatible shapes, see [`Matrix::checked_mul`].
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}
