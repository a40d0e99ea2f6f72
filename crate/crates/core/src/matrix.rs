//! Dense matrices over `F_p`.
//!
//! Random matrices come from ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64(seed)`. Entries are drawn row-major, each one by rejection
//! sampling on the high 32 bits of `next_u64` until the value falls below the
//! largest multiple of `p` not exceeding `2^32`, then reduced mod `p`. The
//! whole matrix is redrawn (same stream) while its determinant is zero.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::face::FaceSet;
use crate::field::Field;

#[derive(Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// Result of row reduction: pivot columns in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl FieldMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing each entry mod `p`.
    pub fn from_rows<R: AsRef<[i64]>>(field: Field, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Dimension(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            data.extend(r.iter().map(|&v| field.from_i64(v)));
        }
        Ok(Self { field, rows: rows.len(), cols, data })
    }

    /// Takes ownership of row-major residues; every entry must be `< p`.
    pub fn from_residues(field: Field, rows: usize, cols: usize, data: Vec<u64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        if data.iter().any(|&v| v >= field.modulus()) {
            return Err(Error::InvalidArgument(format!("entry not reduced mod {}", field.modulus())));
        }
        Ok(Self { field, rows, cols, data })
    }

    /// Permutation matrix with `φ(e_j) = e_{perm[j-1]}` (1-based images).
    pub fn permutation(field: Field, perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        let mut m = Self::zeros(field, n, n);
        for (j, &img) in perm.iter().enumerate() {
            if img == 0 || img > n || seen[img - 1] {
                return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation of 1..={n}")));
            }
            seen[img - 1] = true;
            m.set(img - 1, j, 1);
        }
        Ok(m)
    }

    /// Uniform `n×n` matrix with nonzero determinant.
    pub fn random_invertible(field: Field, n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        loop {
            let data = (0..n * n).map(|_| uniform_residue(&mut rng, field)).collect();
            let m = Self { field, rows: n, cols: n, data };
            if m.determinant().is_ok_and(|d| d != 0) {
                return m;
            }
        }
    }

    /// Upper unitriangular: ones on the diagonal, uniform entries above it.
    pub fn random_unitriangular(field: Field, n: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut m = Self::identity(field, n);
        for i in 0..n {
            for j in i + 1..n {
                m.set(i, j, uniform_residue(&mut rng, field));
            }
        }
        m
    }

    /// Diagonal matrix.
    pub fn diagonal(field: Field, diag: &[u64]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(field, n, n);
        for (i, &v) in diag.iter().enumerate() {
            m.set(i, i, field.reduce(v));
        }
        m
    }

    #[inline]
    pub fn field(&self) -> Field {
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

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        debug_assert!(v < self.field.modulus());
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[u64] {
        &self.data
    }

    pub fn mul(&self, rhs: &FieldMatrix) -> Result<FieldMatrix> {
        if self.cols != rhs.rows || self.field != rhs.field {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = self.field;
        let mut out = Self::zeros(f, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, rhs.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    /// Row echelon form on a private copy; `self` is untouched.
    ///
    /// Columns are scanned left to right and the first row with a nonzero
    /// entry becomes the pivot row, so the pivots are exactly the columns
    /// where the rank of the leading column block increases.
    pub fn row_echelon_pivots(&self) -> Echelon {
        let mut work = self.data.clone();
        let pivots = eliminate(self.field, &mut work, self.rows, self.cols);
        Echelon { rank: pivots.len(), pivots }
    }

    pub fn rank(&self) -> usize {
        self.row_echelon_pivots().rank
    }

    pub fn determinant(&self) -> Result<u64> {
        if !self.is_square() {
            return Err(Error::Dimension(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        Ok(det_in_place(self.field, self.data.clone(), self.rows))
    }

    pub fn is_invertible(&self) -> bool {
        self.determinant().is_ok_and(|d| d != 0)
    }

    /// Determinant of the submatrix on the given rows and columns, both as
    /// 1-based index sets taken in increasing order.
    pub fn minor_determinant(&self, rows: FaceSet, cols: FaceSet) -> Result<u64> {
        if rows.len() != cols.len() {
            return Err(Error::Dimension(format!(
                "minor selects {} rows but {} columns",
                rows.len(),
                cols.len()
            )));
        }
        if !rows.within(self.rows) || !cols.within(self.cols) {
            return Err(Error::Dimension(format!(
                "minor {rows} x {cols} outside a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let k = rows.len();
        let mut sub = Vec::with_capacity(k * k);
        for r in rows.iter() {
            for c in cols.iter() {
                sub.push(self.get(r - 1, c - 1));
            }
        }
        Ok(det_in_place(self.field, sub, k))
    }
}

fn uniform_residue(rng: &mut ChaCha8Rng, field: Field) -> u64 {
    let p = field.modulus();
    let zone = (1u64 << 32) - ((1u64 << 32) % p);
    loop {
        let v = rng.next_u64() >> 32;
        if v < zone {
            return v % p;
        }
    }
}

/// Gauss–Jordan style forward elimination; returns pivot columns.
fn eliminate(f: Field, a: &mut [u64], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| a[i * cols + c] != 0) else {
            continue;
        };
        if pr != r {
            for j in c..cols {
                a.swap(pr * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(a[r * cols + c]).expect("pivot is nonzero");
        for j in c..cols {
            a[r * cols + j] = f.mul(a[r * cols + j], inv);
        }
        for i in r + 1..rows {
            let factor = a[i * cols + c];
            if factor == 0 {
                continue;
            }
            for j in c..cols {
                let v = f.mul(factor, a[r * cols + j]);
                a[i * cols + j] = f.sub(a[i * cols + j], v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn det_in_place(f: Field, mut a: Vec<u64>, n: usize) -> u64 {
    let mut det = 1u64;
    for c in 0..n {
        let Some(pr) = (c..n).find(|&i| a[i * n + c] != 0) else {
            return 0;
        };
        if pr != c {
            for j in 0..n {
                a.swap(pr * n + j, c * n + j);
            }
            det = f.neg(det);
        }
        let pivot = a[c * n + c];
        det = f.mul(det, pivot);
        let inv = f.inv(pivot).expect("pivot is nonzero");
        for i in c + 1..n {
            let factor = f.mul(a[i * n + c], inv);
            if factor == 0 {
                continue;
            }
            for j in c..n {
                let v = f.mul(factor, a[c * n + j]);
                a[i * n + j] = f.sub(a[i * n + j], v);
            }
        }
    }
    det
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FieldMatrix {}x{} over F_{}", self.rows, self.cols, self.field.modulus())?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}
