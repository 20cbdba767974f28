//! Dense exact linear algebra over a field scalar.
//!
//! Matrices are row-major; a [`Matrix`] with `rows` × `cols` entries carries
//! a linear map from a `cols`-dimensional space to a `rows`-dimensional one
//! (columns are images of basis vectors). All eliminations pick the first
//! nonzero entry of a column as pivot, so every result is deterministic.

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Column vector with exact entries.
#[derive(Debug, Clone, PartialEq)]
pub struct Vector<S> {
    data: Vec<S>,
}

impl<S: Scalar> Vector<S> {
    pub fn from_entries(data: Vec<S>) -> Self {
        Vector { data }
    }

    pub fn zeros(n: usize) -> Self {
        Vector {
            data: vec![S::zero(); n],
        }
    }

    /// Standard basis vector `e_i` of an `n`-dimensional space (0-based).
    pub fn basis(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.data[i] = S::one();
        v
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    pub fn at(&self, i: usize) -> &S {
        &self.data[i]
    }

    pub fn set(&mut self, i: usize, value: S) {
        self.data[i] = value;
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<S> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "vector add length mismatch");
        Vector {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len(), "vector sub length mismatch");
        Vector {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Vector {
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scale(&self, k: &S) -> Self {
        Vector {
            data: self.data.iter().map(|a| a.clone() * k.clone()).collect(),
        }
    }

    /// `self += k * other`, the workhorse of every contraction loop.
    pub fn add_scaled(&mut self, other: &Self, k: &S) {
        assert_eq!(self.len(), other.len(), "vector length mismatch");
        if k.is_zero() {
            return;
        }
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a = a.clone() + b.clone() * k.clone();
        }
    }
}

/// Dense matrix with exact entries, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

/// Result of a reduced-row-echelon computation.
#[derive(Debug, Clone, PartialEq)]
pub struct Rref<S> {
    pub matrix: Matrix<S>,
    pub rank: usize,
    /// Pivot column indices, one per pivot row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = S::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch {
                    context: "matrix row",
                    expected: ncols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(height: usize, cols: &[Vector<S>]) -> Self {
        let mut m = Self::zeros(height, cols.len());
        for (j, v) in cols.iter().enumerate() {
            assert_eq!(v.len(), height, "column height mismatch");
            for i in 0..height {
                m.set(i, j, v.at(i).clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.data[i * self.cols + j] = value;
    }

    pub fn add_at(&mut self, i: usize, j: usize, value: S) {
        if value.is_zero() {
            return;
        }
        let idx = i * self.cols + j;
        self.data[idx] = self.data[idx].clone() + value;
    }

    pub fn col(&self, j: usize) -> Vector<S> {
        Vector::from_entries((0..self.rows).map(|i| self.at(i, j).clone()).collect())
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scale(&self, k: &S) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * k.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "matrix product shape mismatch ({}x{} * {}x{})",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.add_at(i, j, a.clone() * b.clone());
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &Vector<S>) -> Vector<S> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        let mut out = Vector::zeros(self.rows);
        for i in 0..self.rows {
            let mut acc = S::zero();
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() || v.at(j).is_zero() {
                    continue;
                }
                acc = acc + a.clone() * v.at(j).clone();
            }
            out.set(i, acc);
        }
        out
    }

    /// Vertical stack: `[self; other]`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack width mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form with plain rational pivoting; the pivot is
    /// always the first nonzero entry of the current column.
    pub fn rref(&self) -> Rref<S> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0usize;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let pivot_row = match (row..m.rows).find(|&r| !m.at(r, col).is_zero()) {
                Some(r) => r,
                None => continue,
            };
            if pivot_row != row {
                for j in 0..m.cols {
                    m.data.swap(pivot_row * m.cols + j, row * m.cols + j);
                }
            }
            let inv = S::one() / m.at(row, col).clone();
            for j in col..m.cols {
                let v = m.at(row, j).clone() * inv.clone();
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row || m.at(r, col).is_zero() {
                    continue;
                }
                let factor = m.at(r, col).clone();
                for j in col..m.cols {
                    let v = m.at(r, j).clone() - factor.clone() * m.at(row, j).clone();
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref {
            rank: pivots.len(),
            matrix: m,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the kernel `{v | A v = 0}`: one vector per free column, with
    /// a `1` in the free coordinate. Count is always `cols - rank`.
    pub fn kernel_basis(&self) -> Vec<Vector<S>> {
        let red = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut map = vec![None; self.cols];
            for (r, &c) in red.pivots.iter().enumerate() {
                map[c] = Some(r);
            }
            map
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = Vector::zeros(self.cols);
            v.set(free, S::one());
            for (r, &pc) in red.pivots.iter().enumerate() {
                v.set(pc, -red.matrix.at(r, free).clone());
            }
            basis.push(v);
        }
        basis
    }

    /// One exact solution of `A x = b`, or `None` when the system is
    /// inconsistent. Free variables are set to zero, so the answer is
    /// deterministic.
    pub fn solve(&self, b: &Vector<S>) -> Result<Option<Vector<S>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                context: "solve right-hand side",
                expected: self.rows,
                found: b.len(),
            });
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, b.at(i).clone());
        }
        let red = aug.rref();
        // Inconsistent iff the augmented column is a pivot.
        if red.pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = Vector::zeros(self.cols);
        for (r, &c) in red.pivots.iter().enumerate() {
            x.set(c, red.matrix.at(r, self.cols).clone());
        }
        Ok(Some(x))
    }

    /// Exact inverse via Gauss-Jordan on `[A | I]`.
    pub fn inverse(&self) -> Result<Matrix<S>> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, n + i, S::one());
        }
        let red = aug.rref();
        // Invertible iff the pivots are exactly the first n columns; a pivot
        // inside the identity block means the left block lost rank.
        if red.pivots.len() < n || red.pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(Self::from_fn(n, n, |i, j| {
            red.matrix.at(i, n + j).clone()
        }))
    }
}

/// Rank of the span of a family of vectors (all of equal length).
pub fn span_rank<S: Scalar>(vectors: &[Vector<S>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let height = vectors[0].len();
    Matrix::from_columns(height, vectors).rank()
}

/// Whether `v` lies in the span of `family`.
pub fn in_span<S: Scalar>(family: &[Vector<S>], v: &Vector<S>) -> bool {
    if v.is_zero() {
        return true;
    }
    let height = v.len();
    let base = Matrix::from_columns(height, family);
    base.solve(v).map(|s| s.is_some()).unwrap_or(false)
}

/// Dimension of `span(Z) / span(B)`.
///
/// Fails with [`Error::SpanContainment`] when some vector of `B` falls
/// outside `span(Z)`; for the cohomology quotients built in this crate such a
/// failure means a coboundary landed outside the cocycle space, i.e. the
/// complex itself is broken.
pub fn quotient_dim<S: Scalar>(z: &[Vector<S>], b: &[Vector<S>]) -> Result<usize> {
    for v in b {
        if !in_span(z, v) {
            return Err(Error::SpanContainment);
        }
    }
    Ok(span_rank(z) - span_rank(b))
}
