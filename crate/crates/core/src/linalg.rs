//! Dense matrices over GF(q) and the exact linear algebra the codes need.
//!
//! Indices are 0-based throughout. The reduced row echelon form is unique,
//! which is what makes code equality a plain matrix comparison.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Fe, Field};

/// Row-major dense matrix over a [`Field`].
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{:?}", self.to_values())
    }
}

/// Output of [`Matrix::rref`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<Fe>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|&&x| !field.contains(x)) {
            return Err(Error::BadElement {
                value: bad.value() as u64,
                q: field.q(),
            });
        }
        Ok(Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from rows of canonical encodings. `cols` is only
    /// consulted when `rows` is empty.
    pub fn from_values(field: &Field, cols: usize, rows: &[Vec<u32>]) -> Result<Matrix> {
        let cols = rows.first().map_or(cols, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::WidthMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for &v in row {
                data.push(field.elem(v)?);
            }
        }
        Matrix::new(field, rows.len(), cols, data)
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, Fe::ONE);
        }
        m
    }

    pub fn field(&self) -> &Field {
        &self.field
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

    pub fn get(&self, r: usize, c: usize) -> Fe {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Fe) {
        debug_assert!(self.field.contains(x));
        self.data[r * self.cols + c] = x;
    }

    pub fn row(&self, r: usize) -> &[Fe] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Fe]> {
        // chunks_exact panics on a zero chunk size
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn entries(&self) -> &[Fe] {
        &self.data
    }

    /// Rows as canonical integer encodings.
    pub fn to_values(&self) -> Vec<Vec<u32>> {
        self.row_iter().map(|r| r.iter().map(|x| x.value()).collect()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::SpecMismatch);
        }
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for c in 0..other.cols {
                let mut acc = Fe::ZERO;
                for j in 0..self.cols {
                    acc = f.add(acc, f.mul(self.get(r, j), other.get(j, c)));
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// Entrywise `x -> x^(p^m)`.
    pub fn frobenius(&self, m: u32) -> Matrix {
        let f = &self.field;
        Matrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| f.frobenius(x, m)).collect(),
        }
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::SpecMismatch);
        }
        if self.cols != other.cols {
            return Err(Error::WidthMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Keeps the listed rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * self.cols);
        for &r in rows {
            data.extend_from_slice(self.row(r));
        }
        Matrix {
            field: self.field.clone(),
            rows: rows.len(),
            cols: self.cols,
            data,
        }
    }

    /// Column `c` of the result is column `perm[c]` of `self`.
    pub fn permute_columns(&self, perm: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.rows, perm.len());
        for r in 0..self.rows {
            for (c, &src) in perm.iter().enumerate() {
                out.set(r, c, self.get(r, src));
            }
        }
        out
    }

    /// Multiplies column `j` by `scale[j]`.
    pub fn scale_columns(&self, scale: &[Fe]) -> Matrix {
        let f = &self.field;
        let mut out = self.clone();
        for r in 0..self.rows {
            for (c, &s) in scale.iter().enumerate() {
                out.set(r, c, f.mul(self.get(r, c), s));
            }
        }
        out
    }

    /// Reduced row echelon form, rank and pivot columns.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..m.cols {
            if lead == m.rows {
                break;
            }
            let Some(pr) = (lead..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, pr);
            let inv = f.inv(m.get(lead, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(m.get(lead, j), inv);
                m.set(lead, j, v);
            }
            for r in 0..m.rows {
                if r == lead {
                    continue;
                }
                let factor = m.get(r, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(r, j), f.mul(factor, m.get(lead, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(c);
            lead += 1;
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

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Determinant by Gaussian elimination with row swaps. The empty matrix
    /// has determinant 1.
    pub fn det(&self) -> Result<Fe> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let f = &self.field;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Fe::ONE;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&r| !m.get(r, c).is_zero()) else {
                return Ok(Fe::ZERO);
            };
            if pr != c {
                m.swap_rows(c, pr);
                det = f.neg(det);
            }
            let pivot = m.get(c, c);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot)?;
            for r in c + 1..n {
                let factor = f.mul(m.get(r, c), inv);
                if factor.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = f.sub(m.get(r, j), f.mul(factor, m.get(c, j)));
                    m.set(r, j, v);
                }
            }
        }
        Ok(det)
    }

    /// Basis of `{x : self * x^T = 0}` in reduced row echelon form.
    pub fn nullspace(&self) -> Matrix {
        let f = &self.field;
        let Rref { matrix, pivots, .. } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(f, free.len(), self.cols);
        for (i, &fc) in free.iter().enumerate() {
            basis.set(i, fc, Fe::ONE);
            for (r, &pc) in pivots.iter().enumerate() {
                basis.set(i, pc, f.neg(matrix.get(r, fc)));
            }
        }
        basis.rref().matrix
    }

    /// Standard form `[I_k | M]` of a full-row-rank matrix together with the
    /// column permutation: column `c` of the result is column `perm[c]` of the
    /// reduced row echelon form of `self`.
    pub fn standard_form(&self) -> Result<(Matrix, Vec<usize>)> {
        let Rref {
            matrix, rank, pivots, ..
        } = self.rref();
        if rank != self.rows {
            return Err(Error::RankDeficient);
        }
        let mut perm = pivots.clone();
        perm.extend((0..self.cols).filter(|c| !pivots.contains(c)));
        Ok((matrix.permute_columns(&perm), perm))
    }

    /// `G * F^m(G)^T`.
    pub fn gram(&self, m: u32) -> Matrix {
        let f = &self.field;
        let twisted = self.frobenius(m);
        let mut out = Matrix::zeros(f, self.rows, self.rows);
        for r in 0..self.rows {
            for s in 0..self.rows {
                let acc = self
                    .row(r)
                    .iter()
                    .zip(twisted.row(s))
                    .fold(Fe::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                out.set(r, s, acc);
            }
        }
        out
    }

    /// Determinant after deleting the rows and columns listed in `removed`.
    /// Deleting everything leaves the empty matrix, whose determinant is 1.
    pub fn minor_det(&self, removed: &[usize]) -> Result<Fe> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let keep: Vec<usize> = (0..self.rows).filter(|i| !removed.contains(i)).collect();
        let mut sub = Matrix::zeros(&self.field, keep.len(), keep.len());
        for (i, &r) in keep.iter().enumerate() {
            for (j, &c) in keep.iter().enumerate() {
                sub.set(i, j, self.get(r, c));
            }
        }
        sub.det()
    }

    /// `self + diag(b)`.
    pub fn add_diagonal(&self, b: &[Fe]) -> Result<Matrix> {
        if !self.is_square() || b.len() != self.rows {
            return Err(Error::Dimension(format!(
                "diagonal of length {} for a {}x{} matrix",
                b.len(),
                self.rows,
                self.cols
            )));
        }
        let mut out = self.clone();
        for (i, &x) in b.iter().enumerate() {
            out.set(i, i, self.field.add(self.get(i, i), x));
        }
        Ok(out)
    }
}
