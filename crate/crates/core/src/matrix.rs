//! Dense matrices over F_q with exact Gauss-Jordan elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn new(field: &FieldSpec, rows: usize, cols: usize, data: Vec<u32>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Invalid(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if data.iter().any(|&v| v >= field.q()) {
            return Err(Error::Invalid("matrix entry outside the field".into()));
        }
        Ok(Matrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Rows must all have length `cols`.
    pub fn from_rows(field: &FieldSpec, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::Invalid(format!(
                    "row of length {} in a matrix with {cols} columns",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Self::new(field, rows.len(), cols, data)
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

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        assert!(v < self.field.q());
        self.data[r * self.cols + c] = v;
    }

    pub fn entry(&self, r: usize, c: usize) -> FieldElement {
        self.field.element(self.get(r, c))
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u32]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn push_row(&mut self, row: &[u32]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c);
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.field.check_same(&other.field)?;
        if self.cols != other.rows {
            return Err(Error::Invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    /// Reduced row-echelon form (same shape) and rank. Columns are scanned
    /// left to right; the topmost usable row becomes the pivot.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let rank = m.rref_in_place();
        (m, rank)
    }

    fn rref_in_place(&mut self) -> usize {
        let f = self.field.clone();
        let cols = self.cols;
        let mut rank = 0;
        for c in 0..cols {
            if rank == self.rows {
                break;
            }
            let Some(pr) = (rank..self.rows).find(|&r| self.get(r, c) != 0) else {
                continue;
            };
            if pr != rank {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, rank * cols + j);
                }
            }
            let inv = f.inv(self.get(rank, c)).unwrap();
            for j in c..cols {
                let idx = rank * cols + j;
                self.data[idx] = f.mul(self.data[idx], inv);
            }
            for r in 0..self.rows {
                if r == rank {
                    continue;
                }
                let factor = self.get(r, c);
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let v = f.mul(factor, self.data[rank * cols + j]);
                    let idx = r * cols + j;
                    self.data[idx] = f.sub(self.data[idx], v);
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// The nonzero rows of the RREF: the canonical basis of the row space.
    pub fn row_basis(&self) -> Matrix {
        let (mut r, rank) = self.rref();
        r.data.truncate(rank * r.cols);
        r.rows = rank;
        r
    }

    /// Basis (as rows) of `{v : M v^T = 0}`.
    pub fn nullspace(&self) -> Matrix {
        let (r, rank) = self.rref();
        let f = &self.field;
        let mut pivots = Vec::with_capacity(rank);
        for i in 0..rank {
            pivots.push((0..self.cols).find(|&c| r.get(i, c) != 0).unwrap());
        }
        let mut out = Matrix::zeros(f, 0, self.cols);
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0u32; self.cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, free));
            }
            out.push_row(&v);
        }
        out
    }

    /// Applies `map` to every row.
    pub fn map_rows(&self, mut map: impl FnMut(&[u32]) -> Vec<u32>) -> Matrix {
        let mut out = Matrix::zeros(&self.field, 0, self.cols);
        for r in self.row_iter() {
            out.push_row(&map(r));
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}", self.rows, self.cols, self.field)?;
        for r in self.row_iter() {
            let cells: Vec<String> = r.iter().map(|&v| self.field.format_value(v)).collect();
            writeln!(f, "  [{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Row space of a matrix kept in reduced echelon form, for repeated
/// membership queries.
#[derive(Clone, Debug)]
pub struct RowSpace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(m: &Matrix) -> Self {
        let basis = m.row_basis();
        let pivots = basis
            .row_iter()
            .map(|r| r.iter().position(|&v| v != 0).unwrap())
            .collect();
        RowSpace { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// True iff appending `v` would not raise the rank.
    pub fn contains(&self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.basis.cols);
        let f = &self.basis.field;
        let mut w = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = w[pc];
            if c == 0 {
                continue;
            }
            for (j, &b) in self.basis.row(i).iter().enumerate().skip(pc) {
                if b != 0 {
                    w[j] = f.sub(w[j], f.mul(c, b));
                }
            }
        }
        w.iter().all(|&x| x == 0)
    }

    pub fn contains_all(&self, m: &Matrix) -> bool {
        m.row_iter().all(|r| self.contains(r))
    }

    /// Same subspace.
    pub fn equals(&self, other: &RowSpace) -> bool {
        self.basis == other.basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_zero() {
        let f = FieldSpec::prime(3).unwrap();
        let id = Matrix::identity(&f, 4);
        assert_eq!(id.rref(), (id.clone(), 4));
        assert_eq!(id.nullspace().rows(), 0);
        let z = Matrix::zeros(&f, 3, 5);
        assert_eq!(z.rank(), 0);
        assert_eq!(z.nullspace().rows(), 5);
    }

    #[test]
    fn ones_row_over_f2() {
        let f = FieldSpec::prime(2).unwrap();
        let m = Matrix::from_rows(&f, 2, &[vec![1, 1]]).unwrap();
        let ns = m.nullspace();
        assert_eq!(ns.rows(), 1);
        assert_eq!(ns.row(0), &[1, 1]);
    }

    #[test]
    fn membership_matches_rank() {
        let f = FieldSpec::prime(5).unwrap();
        let m = Matrix::from_rows(&f, 4, &[vec![1, 2, 3, 4], vec![0, 1, 1, 0]]).unwrap();
        let rs = RowSpace::new(&m);
        for v in [[1, 3, 4, 4], [2, 4, 1, 3], [0, 0, 0, 1], [1, 0, 0, 0]] {
            let mut ext = m.clone();
            ext.push_row(&v);
            assert_eq!(rs.contains(&v), ext.rank() == m.rank(), "{v:?}");
        }
    }
}
