//! Exact dense linear algebra: rank, determinant, kernel and column-space
//! membership over any [`Field`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, Rational};

/// Default bound on either dimension of a matrix handed to elimination.
pub const DEFAULT_MAX_DENSE: usize = 5000;

/// The dense size limit, overridable through `MULTIELIM_MAX_DENSE`.
pub fn max_dense() -> usize {
    std::env::var("MULTIELIM_MAX_DENSE")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_DENSE)
}

pub(crate) fn check_size(rows: usize, cols: usize) -> Result<()> {
    let limit = max_dense();
    if rows > limit || cols > limit {
        return Err(Error::TooLarge { rows, cols, limit });
    }
    Ok(())
}

/// Dense row-major matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Field> ExactMatrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![S::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("rows of unequal length".into()));
        }
        let n = rows.len();
        Ok(ExactMatrix { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_columns(rows: usize, columns: &[Vec<S>]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch(format!("column {j} has length {}, expected {rows}", c.len())));
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// `[self | v]`.
    pub fn with_column(&self, v: &[S]) -> Result<Self> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!("vector of length {} against {} rows", v.len(), self.rows)));
        }
        let mut m = Self::zeros(self.rows, self.cols + 1);
        for (i, x) in v.iter().enumerate() {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
            m.set(i, self.cols, x.clone());
        }
        Ok(m)
    }

    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!("vector of length {} against {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = S::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a.clone() * b;
                    }
                }
                acc
            })
            .collect())
    }

    pub fn rank(&self) -> Result<usize> {
        check_size(self.rows, self.cols)?;
        Ok(S::rank(self))
    }

    /// `rows - rank`, the dimension of the cokernel.
    pub fn corank(&self) -> Result<usize> {
        Ok(self.rows - self.rank()?)
    }

    pub fn det(&self) -> Result<S> {
        if self.rows != self.cols {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        check_size(self.rows, self.cols)?;
        Ok(S::det(self))
    }

    /// Basis of the right kernel, one vector per free column of the reduced
    /// row echelon form.
    pub fn kernel_basis(&self) -> Result<Vec<Vec<S>>> {
        check_size(self.rows, self.cols)?;
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = vec![S::zero(); self.cols];
            v[free] = S::one();
            for (k, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(k, free).clone();
            }
            basis.push(v);
        }
        Ok(basis)
    }

    /// Whether `v` lies in the span of the columns, decided by comparing
    /// `rank([M | v])` with `rank(M)`.
    pub fn in_column_space(&self, v: &[S]) -> Result<bool> {
        let augmented = self.with_column(v)?;
        check_size(augmented.rows, augmented.cols)?;
        Ok(S::rank(&augmented) == S::rank(self))
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let x = m.get(r, j).clone() * &inv;
                m.set(r, j, x);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    if m.get(r, j).is_zero() {
                        continue;
                    }
                    let x = m.get(i, j).clone() - factor.clone() * m.get(r, j);
                    m.set(i, j, x);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }
}

/// Incrementally built basis of a subspace of `S^dim`, kept in echelon form.
///
/// Each stored vector is normalized to 1 at its pivot and vanishes at the
/// pivots of all vectors stored before it.
#[derive(Debug, Clone)]
pub struct Echelon<S> {
    dim: usize,
    pivots: Vec<usize>,
    vectors: Vec<Vec<S>>,
    is_pivot: Vec<bool>,
}

impl<S: Field> Echelon<S> {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, pivots: Vec::new(), vectors: Vec::new(), is_pivot: vec![false; dim] }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.dim
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.is_pivot[i]
    }

    /// Subtracts the projection onto the stored basis; the result vanishes
    /// at every pivot.
    pub fn reduce(&self, v: &mut [S]) {
        debug_assert_eq!(v.len(), self.dim);
        for (&p, b) in self.pivots.iter().zip(&self.vectors) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, y) in v[p..].iter_mut().zip(&b[p..]) {
                if !y.is_zero() {
                    *x -= c.clone() * y;
                }
            }
        }
    }

    /// Adds `v` to the basis if it is independent; returns whether it was.
    pub fn insert(&mut self, mut v: Vec<S>) -> bool {
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v[p..].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        self.pivots.push(p);
        self.is_pivot[p] = true;
        self.vectors.push(v);
        true
    }

    pub fn contains(&self, v: &[S]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }
}

/// Rank by incremental elimination along the shorter dimension.
pub fn gauss_rank<S: Field>(m: &ExactMatrix<S>) -> usize {
    if m.rows <= m.cols {
        let mut e = Echelon::new(m.rows);
        for j in 0..m.cols {
            e.insert(m.column(j));
            if e.is_full() {
                break;
            }
        }
        e.rank()
    } else {
        let mut e = Echelon::new(m.cols);
        for i in 0..m.rows {
            e.insert(m.row(i).to_vec());
            if e.is_full() {
                break;
            }
        }
        e.rank()
    }
}

/// Determinant by Gaussian elimination; `m` must be square.
pub fn gauss_det<S: Field>(m: &ExactMatrix<S>) -> S {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    let mut a = m.clone();
    let mut det = S::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a.get(i, c).is_zero()) else {
            return S::zero();
        };
        if p != c {
            a.swap_rows(p, c);
            det = -det;
        }
        let pivot = a.get(c, c).clone();
        let inv = pivot.inv().expect("nonzero pivot");
        det *= &pivot;
        for i in c + 1..n {
            if a.get(i, c).is_zero() {
                continue;
            }
            let factor = a.get(i, c).clone() * &inv;
            for j in c..n {
                if a.get(c, j).is_zero() {
                    continue;
                }
                let x = a.get(i, j).clone() - factor.clone() * a.get(c, j);
                a.set(i, j, x);
            }
        }
    }
    det
}

/// Scales every row by the lcm of its denominators. Returns the integer
/// matrix and the product of the scale factors.
fn integer_lift(m: &ExactMatrix<Rational>) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let rows = (0..m.rows)
        .map(|i| {
            let row = m.row(i);
            let l = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            scale *= &l;
            row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    (rows, scale)
}

/// Fraction-free elimination in place. Returns the rank and the sign of the
/// row permutation.
fn bareiss(a: &mut [Vec<BigInt>]) -> (usize, bool) {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut negated = false;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            negated = !negated;
        }
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = &pivot_row[c];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let mut x = pivot * &row[j];
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    x -= &lead * &pivot_row[j];
                }
                row[j] = if prev.is_one() { x } else { x / &prev };
            }
        }
        prev = pivot.clone();
        r += 1;
    }
    (r, negated)
}

/// Rank over Q by Bareiss elimination on an integer lift.
pub fn bareiss_rank(m: &ExactMatrix<Rational>) -> usize {
    if m.rows > m.cols {
        return bareiss_rank(&m.transpose());
    }
    let (mut a, _) = integer_lift(m);
    bareiss(&mut a).0
}

/// Determinant over Q by Bareiss elimination on an integer lift.
pub fn bareiss_det(m: &ExactMatrix<Rational>) -> Rational {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return Rational::one();
    }
    let (mut a, scale) = integer_lift(m);
    let (rank, negated) = bareiss(&mut a);
    if rank < n {
        return Rational::zero();
    }
    let d = a[n - 1][n - 1].clone();
    let d = if negated { -d } else { d };
    Rational::new(d, scale)
}

/// Matrix with integer entries, used by tests that compare fields.
pub fn from_integers<S: Field>(rows: &[Vec<i64>]) -> ExactMatrix<S> {
    ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| S::from_i64(x)).collect()).collect())
        .expect("rectangular input")
}
