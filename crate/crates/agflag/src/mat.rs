//! Dense matrices over a [`Field`] with exact Gaussian elimination.
//!
//! Pivoting is deterministic (first nonzero column, first nonzero row), so
//! ranks, kernels and greedy row selections are bit-reproducible.

use crate::gf::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u16>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(field: Field, rows: &[Vec<u16>]) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix {
            field,
            rows: r,
            cols: c,
            data: rows.concat(),
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u16 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u16) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u16] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[u16]> {
        self.data.chunks_exact(self.cols)
    }

    pub fn to_rows(&self) -> Vec<Vec<u16>> {
        self.rows_iter().map(<[u16]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let f = &self.field;
        let mut out = Matrix::zeros(f.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// G . diag(v) . G^T
    pub fn gram_with_weights(&self, v: &[u16]) -> Matrix {
        assert_eq!(v.len(), self.cols);
        let f = &self.field;
        let n = self.rows;
        let mut out = Matrix::zeros(f.clone(), n, n);
        for i in 0..n {
            for j in i..n {
                let mut s = 0u16;
                for c in 0..self.cols {
                    s = f.add(s, f.mul(f.mul(self.get(i, c), v[c]), self.get(j, c)));
                }
                out.set(i, j, s);
                out.set(j, i, s);
            }
        }
        out
    }

    /// Reduced row echelon form in place; returns pivot column indices.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            self.swap_rows(r, pr);
            let inv = f.inv(self.get(r, c)).unwrap();
            for j in 0..self.cols {
                let v = f.mul(inv, self.get(r, j));
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i != r && self.get(i, c) != 0 {
                    let fac = self.get(i, c);
                    for j in 0..self.cols {
                        let v = f.sub(self.get(i, j), f.mul(fac, self.get(r, j)));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == self.rows {
                break;
            }
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Determinant by elimination with swap-sign tracking (square only).
    pub fn determinant(&self) -> u16 {
        assert_eq!(self.rows, self.cols);
        let f = self.field.clone();
        let n = self.rows;
        let mut m = self.clone();
        let mut det = 1u16;
        let mut negate = false;
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| m.get(i, c) != 0) else {
                return 0;
            };
            if pr != c {
                m.swap_rows(c, pr);
                negate = !negate;
            }
            let pivot = m.get(c, c);
            det = f.mul(det, pivot);
            let inv = f.inv(pivot).unwrap();
            for i in c + 1..n {
                let fac = f.mul(inv, m.get(i, c));
                if fac != 0 {
                    for j in c..n {
                        let v = f.sub(m.get(i, j), f.mul(fac, m.get(c, j)));
                        m.set(i, j, v);
                    }
                }
            }
        }
        if negate {
            f.neg(det)
        } else {
            det
        }
    }

    /// Basis of the right kernel { v : M v = 0 }.
    pub fn kernel(&self) -> Vec<Vec<u16>> {
        let f = self.field.clone();
        let mut m = self.clone();
        let pivots = m.rref();
        let n = self.cols;
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![0u16; n];
            v[fc] = 1;
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(m.get(ri, fc));
            }
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Power-of-primitive text rendering, columns right-aligned.
    pub fn show(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows_iter()
            .map(|r| r.iter().map(|&x| self.field.show(x)).collect())
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(String::len)
            .max()
            .unwrap_or(1);
        cells
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| format!("{c:>width$}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Canonical integer encodings row by row (machine form).
    pub fn encodings(&self) -> Vec<Vec<u16>> {
        self.to_rows()
    }
}

/// Incremental echelon basis used by greedy row selection.
///
/// Rows inserted are reduced against the accepted set; a row is accepted iff
/// its reduction is nonzero. The reduced forms are kept normalized so that
/// reduction is a single sweep.
pub struct GreedyBasis {
    field: Field,
    cols: usize,
    reduced: Vec<Vec<u16>>,
    pivot_cols: Vec<usize>,
    scratch: Vec<u16>,
}

impl GreedyBasis {
    pub fn new(field: Field, cols: usize) -> GreedyBasis {
        GreedyBasis {
            field,
            cols,
            reduced: Vec::new(),
            pivot_cols: Vec::new(),
            scratch: vec![0; cols],
        }
    }

    pub fn len(&self) -> usize {
        self.reduced.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reduced.is_empty()
    }

    pub fn reset(&mut self) {
        self.reduced.clear();
        self.pivot_cols.clear();
    }

    /// Returns true iff `row` is independent of the rows accepted so far
    /// (and in that case absorbs its reduced form).
    pub fn try_insert(&mut self, row: &[u16]) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        let f = &self.field;
        self.scratch.copy_from_slice(row);
        for (k, &pc) in self.pivot_cols.iter().enumerate() {
            let fac = self.scratch[pc];
            if fac != 0 {
                let red = &self.reduced[k];
                for j in 0..self.cols {
                    self.scratch[j] = f.sub(self.scratch[j], f.mul(fac, red[j]));
                }
            }
        }
        let Some(piv) = self.scratch.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(self.scratch[piv]).unwrap();
        let norm: Vec<u16> = self.scratch.iter().map(|&x| f.mul(inv, x)).collect();
        self.pivot_cols.push(piv);
        self.reduced.push(norm);
        true
    }
}
