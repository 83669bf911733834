//! Dense matrices over a [`Scalar`] domain, with the elimination routines
//! needed for kernels, ranks and determinants.
//!
//! Exact matrices pivot on the first nonzero entry of each column. Float
//! matrices use partial pivoting and treat any candidate pivot with
//! magnitude at most `FLOAT_PIVOT_TOLERANCE * max|entry|` as zero.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarMode};

/// Relative tolerance for rank and singularity decisions in float mode.
pub const FLOAT_PIVOT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: fmt::Debug> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[r * self.cols..(r + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl<S: Scalar> Matrix<S> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<S>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch(format!("empty {rows}x{cols} matrix")));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if data.iter().any(|x| !x.same_domain(&data[0])) {
            return Err(Error::DimensionMismatch("entries from different scalar fields".into()));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize, zero: &S) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        Matrix { rows, cols, data: vec![zero.zero_like(); rows * cols] }
    }

    pub fn identity(n: usize, one: &S) -> Self {
        let mut m = Self::zeros(n, n, one);
        for i in 0..n {
            m.data[i * n + i] = one.one_like();
        }
        m
    }

    pub fn scalar(value: S) -> Self {
        Matrix { rows: 1, cols: 1, data: vec![value] }
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

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: S) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn zero_elem(&self) -> S {
        self.data[0].zero_like()
    }

    pub fn one_elem(&self) -> S {
        self.data[0].one_like()
    }

    pub fn map<T, F: Fn(&S) -> T>(&self, f: F) -> Matrix<T> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    fn check_domain(&self, other: &Self) -> Result<()> {
        if !self.data[0].same_domain(&other.data[0]) {
            return Err(Error::DimensionMismatch("matrices over different scalar fields".into()));
        }
        Ok(())
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        self.check_domain(other)?;
        let mut out = Self::zeros(self.rows, other.cols, &self.data[0]);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[k * other.cols + j];
                    if !b.is_zero() {
                        let idx = i * other.cols + j;
                        out.data[idx] = out.data[idx].add(&a.mul(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, S::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, S::sub)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        self.check_domain(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, by: &S) -> Self {
        self.map(|x| x.mul(by))
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.data[r * self.cols + c].clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    /// Kronecker product: block (i, j) of the result is `self[i][j] * other`.
    pub fn kron(&self, other: &Self) -> Result<Self> {
        self.check_domain(other)?;
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut out = Self::zeros(r, c, &self.data[0]);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self.data[i * self.cols + j];
                if a.is_zero() {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        let b = &other.data[p * other.cols + q];
                        if !b.is_zero() {
                            out.data[(i * other.rows + p) * c + j * other.cols + q] = a.mul(b);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Literal zero test on every entry.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    /// Entrywise comparison; exact equality for exact scalars, and
    /// `|a - b| <= tol * (1 + max|entry|)` for float scalars.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        if self.rows != other.rows || self.cols != other.cols {
            return false;
        }
        match S::MODE {
            ScalarMode::Exact => self == other,
            ScalarMode::Float => {
                let scale = 1.0 + self.max_magnitude().max(other.max_magnitude());
                self.data.iter().zip(&other.data).all(|(a, b)| a.sub(b).magnitude() <= tol * scale)
            }
        }
    }

    pub fn max_magnitude(&self) -> f64 {
        self.data.iter().map(S::magnitude).fold(0.0, f64::max)
    }

    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Result<Self> {
        if r0 + rows > self.rows || c0 + cols > self.cols || rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch("submatrix out of range".into()));
        }
        let mut data = Vec::with_capacity(rows * cols);
        for r in r0..r0 + rows {
            data.extend_from_slice(&self.data[r * self.cols + c0..r * self.cols + c0 + cols]);
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &Self) -> Result<()> {
        if r0 + block.rows > self.rows || c0 + block.cols > self.cols {
            return Err(Error::DimensionMismatch("block out of range".into()));
        }
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.data[(r0 + r) * self.cols + c0 + c] = block.data[r * block.cols + c].clone();
            }
        }
        Ok(())
    }

    /// Block-diagonal matrix with the given blocks in order.
    pub fn block_diag(blocks: &[Self]) -> Result<Self> {
        let first = blocks.first().ok_or_else(|| Error::DimensionMismatch("no blocks".into()))?;
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(r, c, &first.data[0]);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            first.check_domain(b)?;
            out.set_block(ro, co, b)?;
            ro += b.rows;
            co += b.cols;
        }
        Ok(out)
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(parts: &[Self]) -> Result<Self> {
        let first = parts.first().ok_or_else(|| Error::DimensionMismatch("nothing to stack".into()))?;
        let mut data = Vec::new();
        for p in parts {
            if p.cols != first.cols {
                return Err(Error::DimensionMismatch("column counts differ".into()));
            }
            first.check_domain(p)?;
            data.extend_from_slice(&p.data);
        }
        Ok(Matrix { rows: data.len() / first.cols, cols: first.cols, data })
    }

    /// Column-stacking vectorization: entry (r, c) goes to index `c * rows + r`.
    pub fn vectorize(&self) -> Self {
        Matrix { rows: self.data.len(), cols: 1, data: self.transpose().data }
    }

    /// Inverse of [`Matrix::vectorize`] for an `rows x cols` target.
    pub fn devectorize(v: &Self, rows: usize, cols: usize) -> Result<Self> {
        if v.data.len() != rows * cols {
            return Err(Error::DimensionMismatch("vector length does not match shape".into()));
        }
        let t = Matrix { rows: cols, cols: rows, data: v.data.clone() };
        Ok(t.transpose())
    }

    fn pivot_tolerance(&self) -> f64 {
        match S::MODE {
            ScalarMode::Exact => 0.0,
            ScalarMode::Float => FLOAT_PIVOT_TOLERANCE * self.max_magnitude(),
        }
    }

    fn row_vectors(&self) -> Vec<Vec<S>> {
        self.data.chunks(self.cols).map(<[S]>::to_vec).collect()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut rows = self.row_vectors();
        let pivots = gauss_jordan(&mut rows, self.cols, self.pivot_tolerance());
        let data = rows.into_iter().flatten().collect();
        (Matrix { rows: self.rows, cols: self.cols, data }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{v : self * v = 0}` as column vectors, one per free column
    /// of the reduced echelon form (that column's entry is 1).
    pub fn null_space(&self) -> Vec<Self> {
        let (r, pivots) = self.rref();
        let zero = self.zero_elem();
        let one = self.one_elem();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![zero.clone(); self.cols];
                v[f] = one.clone();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = r.get(i, f).neg();
                }
                Matrix { rows: self.cols, cols: 1, data: v }
            })
            .collect()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Result<S> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let tol = self.pivot_tolerance();
        let mut rows = self.row_vectors();
        let mut det = self.one_elem();
        for col in 0..n {
            let Some(p) = choose_pivot(&rows, col, col, tol) else {
                return Ok(self.zero_elem());
            };
            if p != col {
                rows.swap(p, col);
                det = det.neg();
            }
            let pivot = rows[col][col].clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                if rows[r][col].is_zero() {
                    continue;
                }
                let factor = rows[r][col].mul(&inv);
                let (top, bottom) = rows.split_at_mut(r);
                eliminate(&mut bottom[0], &top[col], &factor, col);
            }
        }
        Ok(det)
    }

    /// Exact: `det != 0`. Float: full rank under the pivot tolerance.
    pub fn is_nonsingular(&self) -> Result<bool> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(match S::MODE {
            ScalarMode::Exact => !self.det()?.is_zero(),
            ScalarMode::Float => self.rank() == self.rows,
        })
    }
}

fn choose_pivot<S: Scalar>(rows: &[Vec<S>], start: usize, col: usize, tol: f64) -> Option<usize> {
    match S::MODE {
        ScalarMode::Exact => (start..rows.len()).find(|&r| !rows[r][col].is_zero()),
        ScalarMode::Float => {
            let (best, mag) = (start..rows.len())
                .map(|r| (r, rows[r][col].magnitude()))
                .fold((None, 0.0), |(b, bm), (r, m)| if m > bm { (Some(r), m) } else { (b, bm) });
            best.filter(|_| mag > tol)
        }
    }
}

/// `target -= factor * pivot_row`, touching only columns `from..` where the
/// pivot row is nonzero. The pivot column itself is set to exact zero.
fn eliminate<S: Scalar>(target: &mut [S], pivot_row: &[S], factor: &S, from: usize) {
    for (t, p) in target[from..].iter_mut().zip(&pivot_row[from..]) {
        if !p.is_zero() {
            *t = t.sub(&factor.mul(p));
        }
    }
    target[from] = factor.zero_like();
}

fn gauss_jordan<S: Scalar>(rows: &mut [Vec<S>], cols: usize, tol: f64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..cols {
        if next == rows.len() {
            break;
        }
        let Some(p) = choose_pivot(rows, next, col, tol) else {
            if S::MODE == ScalarMode::Float {
                // entries below tolerance in this column are noise
                for row in rows[next..].iter_mut() {
                    row[col] = row[col].zero_like();
                }
            }
            continue;
        };
        rows.swap(p, next);
        let inv = rows[next][col].inv().expect("pivot is nonzero");
        for x in rows[next][col..].iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        rows[next][col] = inv.one_like();
        let pivot_row = rows[next].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            eliminate(row, &pivot_row, &factor, col);
        }
        pivots.push(col);
        next += 1;
    }
    pivots
}
