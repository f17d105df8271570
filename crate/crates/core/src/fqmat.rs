//! Dense exact linear algebra over a [`FieldSpec`].
//!
//! [`MatrixFq`] stores entries row-major together with the field they live
//! in.  The workhorses are reduced row echelon form, rank, right-kernel
//! bases, inversion, and extraction of block-column submatrices (a length-`rn`
//! row is read as `n` blocks of `r` columns).  Elimination is deterministic:
//! columns are scanned left to right and the pivot is always the topmost
//! usable row, so equal inputs produce identical echelon forms, pivot lists,
//! and kernel bases.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};

/// A dense `rows × cols` matrix over a fixed finite field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixFq {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

/// Output of [`MatrixFq::rref`]: the echelon form, its rank, and the pivot
/// columns in ascending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RrefResult {
    pub rref: MatrixFq,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

impl MatrixFq {
    /// Wraps a row-major entry vector; `entries.len()` must be
    /// `rows * cols`.
    pub fn new(field: FieldSpec, rows: usize, cols: usize, entries: Vec<FieldElement>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries cannot fill a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(MatrixFq { field, rows, cols, entries })
    }

    /// Builds a matrix from row vectors, which must all have equal length.
    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch(format!(
                "ragged rows: expected length {ncols}, found {}",
                bad.len()
            )));
        }
        let nrows = rows.len();
        let entries = rows.into_iter().flatten().collect();
        Self::new(field, nrows, ncols, entries)
    }

    /// Builds a matrix from rows of canonical element indices, validating
    /// each against the field.
    pub fn from_index_rows(field: FieldSpec, rows: &[Vec<u64>]) -> Result<Self> {
        let converted = rows
            .iter()
            .map(|row| row.iter().map(|&v| field.element(v)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(field, converted)
    }

    /// The all-zero matrix.
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        let z = field.zero();
        MatrixFq { field, rows, cols, entries: vec![z; rows * cols] }
    }

    /// The `n × n` identity.
    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElement {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElement) {
        self.entries[i * self.cols + j] = v;
    }

    /// Row `i` as a slice of length `cols`.
    pub fn row(&self, i: usize) -> &[FieldElement] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    /// All rows, cloned into vectors.
    pub fn to_rows(&self) -> Vec<Vec<FieldElement>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> MatrixFq {
        let mut out = Self::zero(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &MatrixFq) -> Result<MatrixFq> {
        if self.field != rhs.field {
            return Err(Error::ParamMismatch("matrix product across different fields".into()));
        }
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let f = &self.field;
        let mut out = Self::zero(f.clone(), self.rows, rhs.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let add = f.mul(a, rhs.get(l, j));
                    out.set(i, j, f.add(out.get(i, j), add));
                }
            }
        }
        Ok(out)
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hstack(&self, rhs: &MatrixFq) -> Result<MatrixFq> {
        if self.rows != rhs.rows || self.field != rhs.field {
            return Err(Error::DimensionMismatch(format!(
                "cannot place {}x{} beside {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut rows = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let mut row = self.row(i).to_vec();
            row.extend_from_slice(rhs.row(i));
            rows.push(row);
        }
        Self::from_rows(self.field.clone(), rows)
    }

    /// Vertical concatenation: `self` on top of `rhs`.
    pub fn vstack(&self, rhs: &MatrixFq) -> Result<MatrixFq> {
        if self.cols != rhs.cols || self.field != rhs.field {
            return Err(Error::DimensionMismatch(format!(
                "cannot place {}x{} above {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&rhs.entries);
        Self::new(self.field.clone(), self.rows + rhs.rows, self.cols, entries)
    }

    /// The submatrix keeping the listed columns, in the given order.
    pub fn columns(&self, keep: &[usize]) -> Result<MatrixFq> {
        if let Some(&bad) = keep.iter().find(|&&j| j >= self.cols) {
            return Err(Error::DimensionMismatch(format!(
                "column {bad} out of range for {} columns",
                self.cols
            )));
        }
        let mut out = Self::zero(self.field.clone(), self.rows, keep.len());
        for i in 0..self.rows {
            for (jj, &j) in keep.iter().enumerate() {
                out.set(i, jj, self.get(i, j));
            }
        }
        Ok(out)
    }

    /// Reads the columns as `cols/r` blocks of width `r` and keeps the
    /// blocks listed in `blocks` (0-based, any order, duplicates ignored),
    /// concatenated in ascending block order.
    pub fn block_submatrix(&self, blocks: &[usize], r: usize) -> Result<MatrixFq> {
        if r == 0 || self.cols % r != 0 {
            return Err(Error::ColumnsNotDivisible { cols: self.cols, r });
        }
        let n = self.cols / r;
        if blocks.is_empty() {
            return Err(Error::EmptyBlockSet);
        }
        let mut sorted: Vec<usize> = blocks.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&bad) = sorted.iter().find(|&&b| b >= n) {
            return Err(Error::BlockIndexOutOfRange { index: bad, n });
        }
        let keep: Vec<usize> =
            sorted.iter().flat_map(|&b| b * r..(b + 1) * r).collect();
        self.columns(&keep)
    }

    /// Reduced row echelon form with deterministic pivoting: columns left to
    /// right, pivot in the topmost row not yet used.
    pub fn rref(&self) -> RrefResult {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut pr = 0usize; // next pivot row
        for col in 0..m.cols {
            let Some(sel) = (pr..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            if sel != pr {
                for j in 0..m.cols {
                    let a = m.get(pr, j);
                    let b = m.get(sel, j);
                    m.set(pr, j, b);
                    m.set(sel, j, a);
                }
            }
            let inv = f.inv(m.get(pr, col)).expect("pivot is nonzero");
            for j in col..m.cols {
                let v = f.mul(m.get(pr, j), inv);
                m.set(pr, j, v);
            }
            for i in 0..m.rows {
                if i == pr {
                    continue;
                }
                let factor = m.get(i, col);
                if factor.is_zero() {
                    continue;
                }
                for j in col..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(pr, j)));
                    m.set(i, j, v);
                }
            }
            pivot_cols.push(col);
            pr += 1;
            if pr == m.rows {
                break;
            }
        }
        RrefResult { rref: m, rank: pr, pivot_cols }
    }

    /// The rank.
    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// A deterministic basis of the right kernel `{x : self · xᵀ = 0}`, one
    /// row per free column of the echelon form, in ascending free-column
    /// order.  Returns a `(cols - rank) × cols` matrix (possibly with zero
    /// rows).
    pub fn kernel_basis(&self) -> MatrixFq {
        let f = self.field.clone();
        let RrefResult { rref, rank, pivot_cols } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivot_cols {
            is_pivot[c] = true;
        }
        let mut rows = Vec::with_capacity(self.cols - rank);
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = f.neg(rref.get(i, free));
            }
            rows.push(v);
        }
        if rows.is_empty() {
            MatrixFq::zero(f, 0, self.cols)
        } else {
            MatrixFq::from_rows(f, rows).expect("kernel rows share the matrix width")
        }
    }

    /// The inverse of a square matrix, or [`Error::Singular`].
    pub fn inverse(&self) -> Result<MatrixFq> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let aug = self.hstack(&Self::identity(self.field.clone(), self.rows))?;
        let RrefResult { rref, pivot_cols, .. } = aug.rref();
        // A pivot falling in the identity half means the left half is
        // rank-deficient.
        if pivot_cols.iter().any(|&c| c >= self.cols) {
            return Err(Error::Singular);
        }
        let keep: Vec<usize> = (self.cols..2 * self.cols).collect();
        rref.columns(&keep)
    }
}

impl fmt::Display for MatrixFq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> =
                self.row(i).iter().map(|&e| self.field.fmt_element(e)).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}
