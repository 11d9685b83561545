use std::collections::BTreeMap;

use crate::scalar::Scalar;

/// Row-major sparse matrix with no stored zeros.
///
/// A differential `C^n → C^{n+1}` is stored with `rows = dim C^{n+1}` and
/// `cols = dim C^n`, so column `j` is the image of the `j`-th basis element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<BTreeMap<usize, T>>,
}

impl<T: Scalar> SparseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![BTreeMap::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn from_dense(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone());
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

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        self.data[i].get(&j).cloned().unwrap_or_else(T::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        if v.is_zero() {
            self.data[i].remove(&j);
        } else {
            self.data[i].insert(j, v);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: T) {
        let cur = self.get(i, j);
        self.set(i, j, cur + v);
    }

    pub fn row(&self, i: usize) -> &BTreeMap<usize, T> {
        &self.data[i]
    }

    /// Iterates `(row, col, value)` over stored entries.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn column(&self, j: usize) -> Vec<(usize, T)> {
        (0..self.rows)
            .filter_map(|i| self.data[i].get(&j).map(|v| (i, v.clone())))
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, j, v) in self.entries() {
            t.data[j].insert(i, v.clone());
        }
        t
    }

    /// `self · rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for (i, row) in self.data.iter().enumerate() {
            let mut acc: BTreeMap<usize, T> = BTreeMap::new();
            for (k, a) in row {
                for (j, b) in &rhs.data[*k] {
                    let e = acc.entry(*j).or_insert_with(T::zero);
                    *e += a.clone() * b.clone();
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.data[i] = acc;
        }
        out
    }

    pub fn map<U: Scalar, F: Fn(&T) -> U>(&self, f: F) -> SparseMatrix<U> {
        let mut out = SparseMatrix::zeros(self.rows, self.cols);
        for (i, j, v) in self.entries() {
            out.set(i, j, f(v));
        }
        out
    }

    /// Reorders rows and columns: entry `(i, j)` moves to `(row_perm[i], col_perm[j])`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, self.cols);
        for (i, j, v) in self.entries() {
            out.set(row_perm[i], col_perm[j], v.clone());
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub(crate) fn into_rows(self) -> Vec<BTreeMap<usize, T>> {
        self.data
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_and_transpose() {
        let a = SparseMatrix::<i64>::from_dense(&[vec![1, 2], vec![0, 3]]);
        let b = SparseMatrix::<i64>::from_dense(&[vec![4, 0], vec![-1, 1]]);
        let ab = a.mul(&b);
        assert_eq!(ab.to_dense(), vec![vec![2, 2], vec![-3, 3]]);
        assert_eq!(a.transpose().get(1, 0), 2);
        assert_eq!(ab.nnz(), 4);
    }

    #[test]
    fn zeros_are_not_stored() {
        let mut m = SparseMatrix::<i64>::zeros(2, 2);
        m.add_to(0, 1, 5);
        m.add_to(0, 1, -5);
        assert!(m.is_zero());
    }
}
