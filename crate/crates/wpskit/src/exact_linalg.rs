//! Exact integer linear algebra: arbitrary-precision matrices, row-style
//! Hermite normal form with its unimodular transformation, adjugates and
//! permutation utilities.
//!
//! Everything here is exact: no rounding and no overflow. Divisions only
//! happen where an integer result is guaranteed, and a non-integer result
//! raises [`Error::Internal`] instead of truncating.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{}x{} matrix needs {} entries, got {}",
                rows,
                cols,
                rows * cols,
                entries.len()
            )));
        }
        Ok(Self { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from machine integers, used heavily in tests
    /// and by the CLI glue.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .map(|row| row.iter().map(|&v| BigInt::from(v)).collect())
            .collect();
        Self::from_rows(data).expect("literal matrix is rectangular")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = BigInt::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut BigInt {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> Vec<BigInt> {
        (0..self.cols).map(|c| self.get(r, c).clone()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<BigInt> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|r| self.row(r)).collect()
    }

    pub fn column_vectors(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn from_columns(cols: Vec<Vec<BigInt>>) -> Result<Self> {
        if cols.is_empty() || cols.iter().any(|col| col.len() != cols[0].len()) {
            return Err(Error::Shape("columns must be nonempty and rectangular".into()));
        }
        let c = cols.len();
        let r = cols[0].len();
        let mut m = Self::zeros(r, c);
        for (j, col) in cols.into_iter().enumerate() {
            for (i, v) in col.into_iter().enumerate() {
                *m.get_mut(i, j) = v;
            }
        }
        Ok(m)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.get_mut(c, r) = self.get(r, c).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = BigInt::zero();
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                *out.get_mut(i, j) = acc;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        let entries = self.entries.iter().map(|e| e * factor).collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        }
    }

    /// Entrywise exact division; a nonzero remainder anywhere is an
    /// internal-consistency error.
    pub fn div_exact(&self, d: &BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(Error::Internal("division by zero".into()));
        }
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            let (q, r) = e.div_rem(d);
            if !r.is_zero() {
                return Err(Error::Internal(format!("{} is not divisible by {}", e, d)));
            }
            entries.push(q);
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// gcd of all entries; zero for an all-zero (or empty) matrix.
    pub fn entries_gcd(&self) -> BigInt {
        let mut g = BigInt::zero();
        for e in &self.entries {
            g = g.gcd(e);
        }
        g
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn delete_column(&self, j: usize) -> Result<Self> {
        if j >= self.cols {
            return Err(Error::Shape(format!(
                "column index {} out of range for {} columns",
                j, self.cols
            )));
        }
        let mut out = Self::zeros(self.rows, self.cols - 1);
        for r in 0..self.rows {
            let mut cc = 0;
            for c in 0..self.cols {
                if c != j {
                    *out.get_mut(r, cc) = self.get(r, c).clone();
                    cc += 1;
                }
            }
        }
        Ok(out)
    }

    fn delete_row(&self, i: usize) -> Result<Self> {
        Ok(self.transpose().delete_column(i)?.transpose())
    }

    fn require_square(&self) -> Result<()> {
        if self.rows != self.cols {
            return Err(Error::Shape(format!(
                "{}x{} matrix is not square",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = 1i32;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                let swap = (k + 1..n).find(|&r| !a.get(r, k).is_zero());
                match swap {
                    Some(r) => {
                        for c in 0..n {
                            let tmp = a.get(k, c).clone();
                            *a.get_mut(k, c) = a.get(r, c).clone();
                            *a.get_mut(r, c) = tmp;
                        }
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j);
                    let (q, r) = num.div_rem(&prev);
                    debug_assert!(r.is_zero(), "Bareiss division is always exact");
                    let _ = r;
                    *a.get_mut(i, j) = q;
                }
            }
            prev = a.get(k, k).clone();
        }
        let d = a.get(n - 1, n - 1).clone();
        Ok(if sign < 0 { -d } else { d })
    }

    /// Adjugate (classical adjoint): `A * adjugate(A) = det(A) * I`.
    pub fn adjugate(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        if n == 0 {
            return Ok(Self::zeros(0, 0));
        }
        if n == 1 {
            return Ok(Self::identity(1));
        }
        let mut adj = Self::zeros(n, n);
        for i in 0..n {
            let without_row = self.delete_row(i)?;
            for j in 0..n {
                let minor = without_row.delete_column(j)?.det()?;
                let cof = if (i + j) % 2 == 0 { minor } else { -minor };
                // transposed placement
                *adj.get_mut(j, i) = cof;
            }
        }
        Ok(adj)
    }

    /// Row-style Hermite normal form together with a unimodular
    /// transformation: returns `(H, U)` with `U * A = H`, `det U = ±1`,
    /// `H` in row echelon form with positive pivots and above-pivot
    /// entries reduced into `[0, pivot)`.
    pub fn hnf_row(&self) -> (Self, Self) {
        let m = self.rows;
        let n = self.cols;
        let mut h = self.clone();
        let mut u = Self::identity(m);
        let mut pivot_row = 0usize;
        for col in 0..n {
            if pivot_row >= m {
                break;
            }
            // eliminate below (pivot_row, col) by repeated reduction
            loop {
                let mut best: Option<usize> = None;
                for r in pivot_row..m {
                    if !h.get(r, col).is_zero() {
                        let better = match best {
                            None => true,
                            Some(b) => h.get(r, col).abs() < h.get(b, col).abs(),
                        };
                        if better {
                            best = Some(r);
                        }
                    }
                }
                let Some(b) = best else { break };
                if b != pivot_row {
                    swap_rows(&mut h, &mut u, pivot_row, b);
                }
                let mut clean = true;
                for r in pivot_row + 1..m {
                    if !h.get(r, col).is_zero() {
                        let q = h.get(r, col) / h.get(pivot_row, col);
                        if !q.is_zero() {
                            sub_scaled_row(&mut h, &mut u, r, pivot_row, &q);
                        }
                        if !h.get(r, col).is_zero() {
                            clean = false;
                        }
                    }
                }
                if clean {
                    break;
                }
            }
            if h.get(pivot_row, col).is_zero() {
                continue; // no pivot in this column
            }
            if h.get(pivot_row, col).is_negative() {
                negate_row(&mut h, &mut u, pivot_row);
            }
            let pivot = h.get(pivot_row, col).clone();
            for r in 0..pivot_row {
                let q = h.get(r, col).div_floor(&pivot);
                if !q.is_zero() {
                    sub_scaled_row(&mut h, &mut u, r, pivot_row, &q);
                }
            }
            pivot_row += 1;
        }
        (h, u)
    }
}

fn swap_rows(h: &mut IntMatrix, u: &mut IntMatrix, a: usize, b: usize) {
    for c in 0..h.cols {
        let tmp = h.get(a, c).clone();
        *h.get_mut(a, c) = h.get(b, c).clone();
        *h.get_mut(b, c) = tmp;
    }
    for c in 0..u.cols {
        let tmp = u.get(a, c).clone();
        *u.get_mut(a, c) = u.get(b, c).clone();
        *u.get_mut(b, c) = tmp;
    }
}

fn sub_scaled_row(h: &mut IntMatrix, u: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    for c in 0..h.cols {
        let v = h.get(dst, c) - q * h.get(src, c);
        *h.get_mut(dst, c) = v;
    }
    for c in 0..u.cols {
        let v = u.get(dst, c) - q * u.get(src, c);
        *u.get_mut(dst, c) = v;
    }
}

fn negate_row(h: &mut IntMatrix, u: &mut IntMatrix, r: usize) {
    for c in 0..h.cols {
        let v = -h.get(r, c).clone();
        *h.get_mut(r, c) = v;
    }
    for c in 0..u.cols {
        let v = -u.get(r, c).clone();
        *u.get_mut(r, c) = v;
    }
}

/// Permutation of `{0..k-1}`, stored as the image sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &img in &images {
            if img >= k || seen[img] {
                return Err(Error::Invalid(format!(
                    "image sequence {:?} is not a bijection on 0..{}",
                    images, k
                )));
            }
            seen[img] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(k: usize) -> Self {
        Self {
            images: (0..k).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    /// One-based image sequence, the form used in JSON output.
    pub fn one_based_images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }
}

/// Matches two sequences with equal underlying multisets: returns the
/// permutation with `s1[i] = s2[σ(i)]`, breaking ties among equal values
/// by the first index not already used.
pub fn perm_match<T: PartialEq>(s1: &[T], s2: &[T]) -> Result<Permutation> {
    if s1.len() != s2.len() {
        return Err(Error::Invalid("sequences differ in length".into()));
    }
    let k = s1.len();
    let mut used = vec![false; k];
    let mut images = Vec::with_capacity(k);
    for v in s1 {
        let j = (0..k).find(|&j| !used[j] && &s2[j] == v).ok_or_else(|| {
            Error::Invalid("sequences do not have the same underlying multiset".into())
        })?;
        used[j] = true;
        images.push(j);
    }
    Permutation::from_images(images)
}

/// Result column `i` equals `m` column `σ(i)`.
pub fn apply_column_permutation(m: &IntMatrix, sigma: &Permutation) -> Result<IntMatrix> {
    if sigma.len() != m.cols() {
        return Err(Error::Shape(format!(
            "permutation on {} elements applied to {} columns",
            sigma.len(),
            m.cols()
        )));
    }
    let cols = (0..m.cols()).map(|i| m.column(sigma.image(i))).collect();
    IntMatrix::from_columns(cols)
}

/// The k×k permutation matrix of σ, i.e. the column permutation of the
/// identity; satisfies `M * perm_matrix(σ) = apply_column_permutation(M, σ)`.
pub fn perm_matrix(k: usize, sigma: &Permutation) -> Result<IntMatrix> {
    apply_column_permutation(&IntMatrix::identity(k), sigma)
}
