//! Exact rational linear algebra: reduced row echelon form, null spaces and
//! incrementally built spans of sparse vectors.

use std::collections::HashMap;
use std::hash::Hash;

use num_traits::{One, Zero};

use crate::poly::Q;

/// Dense rational matrix stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<Q>>, cols: usize) -> Self {
        let mut m = Matrix::zeros(rows.len(), cols);
        for (i, r) in rows.into_iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, v) in r.into_iter().enumerate() {
                m.data[i * cols + j] = v;
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

    pub fn get(&self, i: usize, j: usize) -> &Q {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Q) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Q] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.get(r, c).recip();
            for j in c..self.cols {
                let v = &self.data[r * self.cols + j] * &inv;
                self.data[r * self.cols + j] = v;
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in c..self.cols {
                    if self.data[r * self.cols + j].is_zero() {
                        continue;
                    }
                    let v = &self.data[r * self.cols + j] * &f;
                    self.data[i * self.cols + j] -= v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{v : self * v = 0}`.
    pub fn null_space(&self) -> Vec<Vec<Q>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Q::zero(); self.cols];
                v[f] = Q::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -m.get(r, f).clone();
                }
                v
            })
            .collect()
    }

    /// Nonzero rows of the reduced row echelon form: a canonical basis of the
    /// row space.
    pub fn row_space_canonical(&self) -> Vec<Vec<Q>> {
        let mut m = self.clone();
        let rank = m.rref().len();
        (0..rank).map(|i| m.row(i).to_vec()).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = a * other.get(k, j);
                    out.data[i * other.cols + j] += v;
                }
            }
        }
        out
    }

    /// Determinant by fraction-carrying elimination.
    pub fn determinant(&self) -> Q {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let mut det = Q::one();
        for c in 0..m.cols {
            let Some(p) = (c..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                return Q::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.get(c, c).clone();
            det *= &pivot;
            for i in c + 1..m.rows {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c) / &pivot;
                for j in c..m.cols {
                    let v = m.get(c, j) * &f;
                    m.data[i * m.cols + j] -= v;
                }
            }
        }
        det
    }
}

/// Assigns dense column indices to arbitrary hashable coordinates in order of
/// first appearance.
#[derive(Debug, Clone)]
pub struct CoordIndex<K: Eq + Hash + Clone> {
    index: HashMap<K, usize>,
    keys: Vec<K>,
}

impl<K: Eq + Hash + Clone> Default for CoordIndex<K> {
    fn default() -> Self {
        CoordIndex {
            index: HashMap::new(),
            keys: Vec::new(),
        }
    }
}

impl<K: Eq + Hash + Clone> CoordIndex<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_keys(keys: impl IntoIterator<Item = K>) -> Self {
        let mut idx = Self::new();
        for k in keys {
            idx.get_or_insert(k);
        }
        idx
    }

    pub fn get_or_insert(&mut self, key: K) -> usize {
        if let Some(&i) = self.index.get(&key) {
            return i;
        }
        let i = self.keys.len();
        self.index.insert(key.clone(), i);
        self.keys.push(key);
        i
    }

    pub fn get(&self, key: &K) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn keys(&self) -> &[K] {
        &self.keys
    }
}

/// Sparse vector: strictly increasing column indices with nonzero values.
pub type SparseVec = Vec<(usize, Q)>;

/// Normalize an unsorted list of entries into a [`SparseVec`], summing
/// duplicates and dropping zeros.
pub fn sparse_from_entries(mut entries: Vec<(usize, Q)>) -> SparseVec {
    entries.sort_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(entries.len());
    for (c, v) in entries {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

fn axpy(v: &SparseVec, f: &Q, row: &SparseVec) -> SparseVec {
    // v - f * row
    let mut out = Vec::with_capacity(v.len() + row.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < row.len() {
        let take_v = j == row.len() || (i < v.len() && v[i].0 < row[j].0);
        let take_r = i == v.len() || (j < row.len() && row[j].0 < v[i].0);
        if take_v {
            out.push(v[i].clone());
            i += 1;
        } else if take_r {
            out.push((row[j].0, -(f * &row[j].1)));
            j += 1;
        } else {
            let val = &v[i].1 - f * &row[j].1;
            if !val.is_zero() {
                out.push((v[i].0, val));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Incrementally grown row space in semi-echelon form; answers membership
/// questions exactly.
#[derive(Debug, Clone, Default)]
pub struct Span {
    /// pivot column -> row with a 1 in that column and zeros before it.
    rows: HashMap<usize, SparseVec>,
}

impl Span {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The stored basis rows, in no particular order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec> {
        self.rows.values()
    }

    /// Reduce `v` against the stored rows; the result is zero iff `v` lies in
    /// the span.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut start = 0;
        while start < v.len() {
            let (c, coeff) = (v[start].0, v[start].1.clone());
            match self.rows.get(&c) {
                Some(row) => {
                    v = axpy(&v, &coeff, row);
                    start = 0;
                    // columns before the pivot are unaffected; skip them
                    while start < v.len() && v[start].0 < c {
                        start += 1;
                    }
                }
                None => start += 1,
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Add `v`; returns `true` if it enlarged the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut r = self.reduce(v);
        // after reduction, choose the first column not already a pivot
        let Some(pos) = r.iter().position(|(c, _)| !self.rows.contains_key(c)) else {
            return false;
        };
        // every column before `pos` is a pivot column but was eliminated, so
        // `pos` is in fact the first entry
        debug_assert_eq!(pos, 0);
        let inv = r[pos].1.recip();
        for e in r.iter_mut() {
            e.1 *= &inv;
        }
        self.rows.insert(r[pos].0, r);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::q;

    fn mat(rows: &[&[i64]]) -> Matrix {
        let cols = rows[0].len();
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| q(v)).collect()).collect(), cols)
    }

    #[test]
    fn rref_and_null_space() {
        let m = mat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.null_space();
        assert_eq!(ns.len(), 1);
        let v = Matrix::from_rows(ns.to_vec(), 3);
        for i in 0..3 {
            let dot: Q = (0..3).map(|j| m.get(i, j) * v.get(0, j)).sum();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(mat(&[&[2, 1], &[1, 3]]).determinant(), q(5));
        assert_eq!(mat(&[&[0, 1], &[1, 0]]).determinant(), q(-1));
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).determinant(), q(0));
    }

    #[test]
    fn span_membership() {
        let mut s = Span::new();
        assert!(s.insert(vec![(0, q(1)), (2, q(1))]));
        assert!(s.insert(vec![(0, q(1)), (1, q(1))]));
        assert!(!s.insert(vec![(1, q(2)), (2, q(-2))]));
        assert!(s.contains(&vec![(1, q(1)), (2, q(-1))]));
        assert!(!s.contains(&vec![(2, q(1))]));
        assert_eq!(s.dim(), 2);
    }
}
