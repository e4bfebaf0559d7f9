//! Dense matrices over a polynomial ring with exact determinants.

use crate::poly::{same_ring, Poly, PolyRing};
use std::sync::Arc;

/// Row-major matrix of polynomials, all in one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: Arc<PolyRing>,
    rows: usize,
    cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(ring: &Arc<PolyRing>, rows: usize, cols: usize, entries: Vec<Poly>) -> PolyMatrix {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        for e in &entries {
            assert!(same_ring(e.ring(), ring), "entry from a different ring");
        }
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(ring: &Arc<PolyRing>, n: usize) -> PolyMatrix {
        let mut entries = vec![Poly::zero(ring); n * n];
        for i in 0..n {
            entries[i * n + i] = Poly::one(ring);
        }
        PolyMatrix::new(ring, n, n, entries)
    }

    pub fn from_columns(ring: &Arc<PolyRing>, rows: usize, columns: &[Vec<Poly>]) -> PolyMatrix {
        let cols = columns.len();
        let mut entries = vec![Poly::zero(ring); rows * cols];
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length mismatch");
            for (i, e) in col.iter().enumerate() {
                entries[i * cols + j] = e.clone();
            }
        }
        PolyMatrix::new(ring, rows, cols, entries)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<Poly> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    /// Horizontal block concatenation `[self | other]`.
    pub fn hcat(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.rows, other.rows, "row count mismatch");
        let cols = self.cols + other.cols;
        let mut entries = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                entries.push(self.at(i, j).clone());
            }
            for j in 0..other.cols {
                entries.push(other.at(i, j).clone());
            }
        }
        PolyMatrix::new(&self.ring, self.rows, cols, entries)
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Poly::zero(&self.ring);
                for k in 0..self.cols {
                    acc = acc
                        .add(&self.at(i, k).mul(other.at(k, j)).expect("same ring"))
                        .expect("same ring");
                }
                entries.push(acc);
            }
        }
        PolyMatrix::new(&self.ring, self.rows, other.cols, entries)
    }

    /// Submatrix formed by the given columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                entries.push(self.at(i, j).clone());
            }
        }
        PolyMatrix::new(&self.ring, self.rows, cols.len(), entries)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination; divisions by
    /// the previous pivot are exact over the polynomial ring.
    pub fn det(&self) -> Poly {
        assert_eq!(self.rows, self.cols, "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Poly::one(&self.ring);
        }
        let mut a: Vec<Vec<Poly>> = (0..n)
            .map(|i| (0..n).map(|j| self.at(i, j).clone()).collect())
            .collect();
        let mut sign = false;
        let mut prev = Poly::one(&self.ring);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = !sign;
                    }
                    None => return Poly::zero(&self.ring),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[k][k]
                        .mul(&a[i][j])
                        .expect("same ring")
                        .sub(&a[i][k].mul(&a[k][j]).expect("same ring"))
                        .expect("same ring");
                    a[i][j] = num
                        .div_exact(&prev)
                        .expect("Bareiss division is exact over a domain");
                }
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if sign {
            det.neg()
        } else {
            det
        }
    }
}

/// Lexicographic enumeration of all size-`k` column choices out of `n`.
pub fn column_choices(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        // Advance to the next combination in lexicographic order.
        let mut i = k - 1;
        while idx[i] == i + n - k {
            if i == 0 {
                return out;
            }
            i -= 1;
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}
