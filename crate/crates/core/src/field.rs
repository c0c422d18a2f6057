//! Exact arithmetic over prime fields `F_p` and dense matrices over them.
//!
//! Every rank, kernel and inverse in the crate goes through [`Matrix::row_reduce`],
//! which pivots on the first nonzero entry of each column. Given the same input the
//! reduced form and hence every kernel basis is reproducible bit for bit.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

/// The prime field `F_p`. Elements are represented by their least nonnegative residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Largest modulus accepted; keeps every product inside `u64`.
    pub const MAX_MODULUS: u64 = 1 << 31;

    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p >= Self::MAX_MODULUS || !crate::arith::is_prime(p) {
            return Err(Error::InvalidField(p));
        }
        Ok(Self { p })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, v: u64) -> u64 {
        v % self.p
    }

    #[inline]
    pub fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.p as i64) as u64
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// `a^e` for a signed exponent; `a` must be nonzero when `e < 0`.
    pub fn pow_signed(&self, a: u64, e: i64) -> Option<u64> {
        if e >= 0 {
            Some(self.pow(a, e as u64))
        } else {
            self.inv(a).map(|ai| self.pow(ai, e.unsigned_abs()))
        }
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        let a = a % self.p;
        if a == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }

    /// Symmetric representative in `(-p/2, p/2]`, handy for display.
    pub fn signed(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

/// A dense row-major matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix(F_{})[", self.field.p)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.field.signed(self[(r, c)]))?;
            }
        }
        write!(f, "]")
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = u64;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &u64 {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut u64 {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

/// Result of Gaussian elimination: the reduced row echelon form and its pivot columns.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub rref: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Matrix unit `E_{ij}`.
    pub fn unit(field: PrimeField, n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        m[(i, j)] = 1;
        m
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = field.from_i64(v);
            }
        }
        m
    }

    pub fn from_flat(field: PrimeField, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols);
        let data = data.into_iter().map(|v| field.reduce(v)).collect();
        Self {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn diagonal(field: PrimeField, entries: &[u64]) -> Self {
        let mut m = Self::zeros(field, entries.len(), entries.len());
        for (i, &v) in entries.iter().enumerate() {
            m[(i, i)] = field.reduce(v);
        }
        m
    }

    /// Build a matrix whose columns are the given vectors.
    pub fn from_columns(field: PrimeField, len: usize, columns: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(field, len, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), len);
            for (i, &v) in col.iter().enumerate() {
                m[(i, j)] = v;
            }
        }
        m
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.data
    }

    /// Row-major flattening, used to compare subspaces of `gl_n`.
    pub fn to_vec(&self) -> Vec<u64> {
        self.data.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)];
            }
        }
        t
    }

    pub fn scale(&self, k: u64) -> Self {
        let f = self.field;
        let k = f.reduce(k);
        Self {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| f.mul(v, k)).collect(),
        }
    }

    pub fn trace(&self) -> u64 {
        assert!(self.is_square());
        (0..self.rows).fold(0, |acc, i| self.field.add(acc, self[(i, i)]))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        assert!(self.is_square());
        let mut acc = Self::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Commutator `[self, other] = self·other − other·self`.
    pub fn bracket(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// `N^n = 0` for an `n × n` matrix.
    pub fn is_nilpotent(&self) -> bool {
        assert!(self.is_square());
        self.pow(self.rows as u64).is_zero()
    }

    /// Gauss–Jordan elimination with first-nonzero pivoting.
    pub fn row_reduce(&self) -> Reduction {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pr) = (row..m.rows).find(|&r| m[(r, col)] != 0) else {
                continue;
            };
            if pr != row {
                for c in 0..m.cols {
                    m.data.swap(pr * m.cols + c, row * m.cols + c);
                }
            }
            let inv = f.inv(m[(row, col)]).expect("pivot is nonzero");
            for c in col..m.cols {
                m[(row, c)] = f.mul(m[(row, c)], inv);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m[(r, col)];
                if factor == 0 {
                    continue;
                }
                for c in col..m.cols {
                    let v = f.mul(factor, m[(row, c)]);
                    m[(r, c)] = f.sub(m[(r, c)], v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Reduction { rref: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of the right kernel `{x : self·x = 0}`, one vector per free column,
    /// with the free coordinate set to 1.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let f = self.field;
        let Reduction { rref, pivots } = self.row_reduce();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![0u64; self.cols];
            v[free] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(rref[(r, free)]);
            }
            basis.push(v);
        }
        basis
    }

    pub fn determinant(&self) -> u64 {
        assert!(self.is_square());
        let f = self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = 1u64;
        for col in 0..n {
            let Some(pr) = (col..n).find(|&r| m[(r, col)] != 0) else {
                return 0;
            };
            if pr != col {
                for c in 0..n {
                    m.data.swap(pr * n + c, col * n + c);
                }
                det = f.neg(det);
            }
            let pivot = m[(col, col)];
            det = f.mul(det, pivot);
            let inv = f.inv(pivot).expect("nonzero pivot");
            for r in col + 1..n {
                let factor = f.mul(m[(r, col)], inv);
                if factor == 0 {
                    continue;
                }
                for c in col..n {
                    let v = f.mul(factor, m[(col, c)]);
                    m[(r, c)] = f.sub(m[(r, c)], v);
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.determinant() != 0
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(self.field, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                aug[(r, c)] = self[(r, c)];
            }
            aug[(r, n + r)] = 1;
        }
        let Reduction { rref, pivots } = aug.row_reduce();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(self.field, n, n);
        for r in 0..n {
            for c in 0..n {
                inv[(r, c)] = rref[(r, n + c)];
            }
        }
        Some(inv)
    }

    /// `Ad(self)x = self·x·self⁻¹`.
    pub fn conjugate(&self, x: &Self) -> Option<Self> {
        let inv = self.inverse()?;
        Some(&(self * x) * &inv)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        assert_eq!(self.field, rhs.field, "field mismatch");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = f.mul(a, rhs[(k, j)]);
                    out[(i, j)] = f.add(out[(i, j)], v);
                }
            }
        }
        out
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| f.add(a, b))
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        Matrix {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(&a, &b)| f.sub(a, b))
                .collect(),
        }
    }
}

/// Dimension of the span of a family of vectors of equal length.
pub fn span_dim(field: PrimeField, vectors: &[Vec<u64>]) -> usize {
    match vectors.first() {
        None => 0,
        Some(v) => Matrix::from_columns(field, v.len(), vectors).rank(),
    }
}

/// Linear combination `Σ coeffs[i]·basis[i]` of equally-sized matrices.
pub fn combine(field: PrimeField, basis: &[Matrix], coeffs: &[u64]) -> Matrix {
    assert_eq!(basis.len(), coeffs.len());
    let (r, c) = (basis[0].rows(), basis[0].cols());
    let mut out = Matrix::zeros(field, r, c);
    for (b, &k) in basis.iter().zip(coeffs) {
        if k != 0 {
            out = &out + &b.scale(k);
        }
    }
    out
}

/// Rank over `Q` of an integer matrix, by fraction-free (Bareiss) elimination.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| v as i128).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pr) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(pr, rank);
        let pivot = m[rank][col];
        for r in rank + 1..nrows {
            let lead = m[r][col];
            for c in 0..ncols {
                m[r][c] = (pivot * m[r][c] - lead * m[rank][c]) / prev;
            }
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Solve a square integer system `a·x = b` over `Q`, returning the solution only
/// when it is unique and integral.
pub fn solve_integer_system(a: &[Vec<i64>], b: &[i64]) -> Option<Vec<i64>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|r| r.len() != n) {
        return None;
    }
    // Augmented rational elimination with (numerator, denominator) pairs.
    fn gcd(a: i128, b: i128) -> i128 {
        let (mut a, mut b) = (a.abs(), b.abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }
    fn norm((n, d): (i128, i128)) -> (i128, i128) {
        let g = gcd(n, d).max(1);
        let s = if d < 0 { -1 } else { 1 };
        (s * n / g, s * d / g)
    }
    let mut m: Vec<Vec<(i128, i128)>> = a
        .iter()
        .zip(b)
        .map(|(row, &rhs)| {
            row.iter()
                .map(|&v| (v as i128, 1))
                .chain(std::iter::once((rhs as i128, 1)))
                .collect()
        })
        .collect();
    for col in 0..n {
        let pr = (col..n).find(|&r| m[r][col].0 != 0)?;
        m.swap(pr, col);
        let (pn, pd) = m[col][col];
        for c in col..=n {
            let (xn, xd) = m[col][c];
            m[col][c] = norm((xn * pd, xd * pn));
        }
        for r in 0..n {
            if r == col || m[r][col].0 == 0 {
                continue;
            }
            let (fn_, fd) = m[r][col];
            for c in col..=n {
                let (xn, xd) = m[col][c];
                let (yn, yd) = m[r][c];
                m[r][c] = norm((yn * fd * xd - fn_ * xn * yd, yd * fd * xd));
            }
        }
    }
    m.iter()
        .map(|row| {
            let (num, den) = row[n];
            (num % den == 0).then(|| (num / den) as i64)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    #[test]
    fn rejects_composite_modulus() {
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(7).is_ok());
    }

    #[test]
    fn inverse_and_pow() {
        let k = f(11);
        assert_eq!(k.inv(2), Some(6));
        assert_eq!(k.pow(3, 5), 1);
        assert_eq!(k.pow_signed(2, -1), Some(6));
        assert_eq!(k.inv(0), None);
    }

    #[test]
    fn kernel_of_rank_one() {
        let k = f(7);
        let m = Matrix::from_rows(k, &[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(m.rank(), 1);
        let ker = m.kernel();
        assert_eq!(ker.len(), 2);
        for v in ker {
            let col = Matrix::from_columns(k, 3, &[v]);
            assert!((&m * &col).is_zero());
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let k = f(13);
        let m = Matrix::from_rows(k, &[vec![2, 1, 0], vec![0, 1, 5], vec![3, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(k, 3));
        let sing = Matrix::from_rows(k, &[vec![1, 2], vec![2, 4]]);
        assert!(sing.inverse().is_none());
        assert_eq!(sing.determinant(), 0);
    }

    #[test]
    fn determinant_sign_on_swap() {
        let k = f(7);
        let m = Matrix::from_rows(k, &[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.determinant(), 6);
    }

    #[test]
    fn integer_rank_fraction_free() {
        assert_eq!(integer_rank(&[vec![1, -1, 0], vec![0, 1, -1], vec![1, 0, -1]]), 2);
        assert_eq!(integer_rank(&[vec![2, 0], vec![0, 3]]), 2);
        assert_eq!(integer_rank(&[]), 0);
    }

    #[test]
    fn integer_solve() {
        let a = vec![vec![1, -1], vec![1, 0]];
        assert_eq!(solve_integer_system(&a, &[2, 1]), Some(vec![1, -1]));
        let half = vec![vec![2, 0], vec![0, 1]];
        assert_eq!(solve_integer_system(&half, &[1, 0]), None);
    }
}
