//! Sparse vectors keyed by basis labels, and sparse column-major matrices.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Q;

/// A finite linear combination with no stored zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparseVector<K: Ord> {
    terms: BTreeMap<K, Q>,
}

impl<K: Ord> Default for SparseVector<K> {
    fn default() -> Self {
        SparseVector { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> SparseVector<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(k: K) -> Self {
        let mut v = Self::new();
        v.add_term(k, Q::ONE);
        v
    }

    pub fn add_term(&mut self, k: K, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &SparseVector<K>, c: Q) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), *v * c);
        }
    }

    pub fn scaled(&self, c: Q) -> Self {
        let mut out = Self::new();
        out.add_scaled(self, c);
        out
    }

    pub fn get(&self, k: &K) -> Q {
        self.terms.get(k).copied().unwrap_or(Q::ZERO)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Q)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }
}

impl<K: Ord + Clone> FromIterator<(K, Q)> for SparseVector<K> {
    fn from_iter<I: IntoIterator<Item = (K, Q)>>(iter: I) -> Self {
        let mut v = Self::new();
        for (k, c) in iter {
            v.add_term(k, c);
        }
        v
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for SparseVector<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// Square or rectangular sparse matrix stored by columns, each column sorted
/// by row index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix {
    rows: usize,
    cols: Vec<Vec<(usize, Q)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> SparseMatrix {
        SparseMatrix { rows, cols: vec![Vec::new(); cols] }
    }

    pub fn identity(n: usize) -> SparseMatrix {
        SparseMatrix { rows: n, cols: (0..n).map(|i| vec![(i, Q::ONE)]).collect() }
    }

    pub fn diagonal(d: &[Q]) -> SparseMatrix {
        let cols = d
            .iter()
            .enumerate()
            .map(|(i, &v)| if v.is_zero() { vec![] } else { vec![(i, v)] })
            .collect();
        SparseMatrix { rows: d.len(), cols }
    }

    /// Builds a matrix from columns given as row → value maps.
    pub fn from_columns(rows: usize, cols: Vec<BTreeMap<usize, Q>>) -> SparseMatrix {
        let cols = cols
            .into_iter()
            .map(|c| c.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        SparseMatrix { rows, cols }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, c: usize) -> &[(usize, Q)] {
        &self.cols[c]
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        match self.cols[c].binary_search_by_key(&r, |&(i, _)| i) {
            Ok(pos) => self.cols[c][pos].1,
            Err(_) => Q::ZERO,
        }
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// Whether every nonzero entry sits on the diagonal.
    pub fn is_diagonal(&self) -> bool {
        self.cols.iter().enumerate().all(|(c, col)| col.iter().all(|&(r, _)| r == c))
    }

    /// All nonzero entries as (row, col, value), column-major.
    pub fn entries(&self) -> Vec<(usize, usize, Q)> {
        let mut out = Vec::with_capacity(self.nnz());
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                out.push((r, c, v));
            }
        }
        out
    }

    fn combine(acc: &mut BTreeMap<usize, Q>, r: usize, v: Q) {
        let e = acc.entry(r).or_insert(Q::ZERO);
        *e += v;
        if e.is_zero() {
            acc.remove(&r);
        }
    }

    /// `a·self + b·other`.
    pub fn lin_comb(&self, a: Q, other: &SparseMatrix, b: Q) -> Result<SparseMatrix> {
        if self.rows != other.rows || self.ncols() != other.ncols() {
            return Err(Error::Shape("matrix size mismatch in addition".into()));
        }
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(x, y)| {
                let mut acc = BTreeMap::new();
                for &(r, v) in x {
                    Self::combine(&mut acc, r, a * v);
                }
                for &(r, v) in y {
                    Self::combine(&mut acc, r, b * v);
                }
                acc.into_iter().collect()
            })
            .collect();
        Ok(SparseMatrix { rows: self.rows, cols })
    }

    pub fn add(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.lin_comb(Q::ONE, other, Q::ONE)
    }

    pub fn sub(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.lin_comb(Q::ONE, other, -Q::ONE)
    }

    pub fn scale(&self, c: Q) -> SparseMatrix {
        if c.is_zero() {
            return SparseMatrix::zeros(self.rows, self.ncols());
        }
        let cols = self.cols.iter().map(|col| col.iter().map(|&(r, v)| (r, v * c)).collect()).collect();
        SparseMatrix { rows: self.rows, cols }
    }

    /// `self · other`.
    pub fn mul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        if self.ncols() != other.rows {
            return Err(Error::Shape("matrix size mismatch in product".into()));
        }
        let cols = other
            .cols
            .iter()
            .map(|ocol| {
                let mut acc = BTreeMap::new();
                for &(k, v) in ocol {
                    for &(r, w) in &self.cols[k] {
                        Self::combine(&mut acc, r, w * v);
                    }
                }
                acc.into_iter().collect()
            })
            .collect();
        Ok(SparseMatrix { rows: self.rows, cols })
    }

    /// Applies the matrix to a dense vector.
    pub fn apply(&self, x: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::ZERO; self.rows];
        for (c, col) in self.cols.iter().enumerate() {
            if x[c].is_zero() {
                continue;
            }
            for &(r, v) in col {
                out[r] += v * x[c];
            }
        }
        out
    }

    /// Super commutator `AB − (−1)^{pq} BA`.
    pub fn super_commutator(&self, other: &SparseMatrix, p: u8, q: u8) -> Result<SparseMatrix> {
        let sign = if p * q == 1 { -Q::ONE } else { Q::ONE };
        self.mul(other)?.lin_comb(Q::ONE, &other.mul(self)?, -sign)
    }

    pub fn to_dense(&self) -> Vec<Vec<Q>> {
        let mut d = vec![vec![Q::ZERO; self.ncols()]; self.rows];
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, v) in col {
                d[r][c] = v;
            }
        }
        d
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson { rows: self.rows, entries: self.entries() }
    }
}

/// JSON form `{"rows":D,"entries":[[r,c,"p/q"],…]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub entries: Vec<(usize, usize, Q)>,
}

impl MatrixJson {
    /// Rebuilds a square matrix.
    pub fn to_matrix(&self) -> Result<SparseMatrix> {
        let mut cols = vec![BTreeMap::new(); self.rows];
        for &(r, c, v) in &self.entries {
            if r >= self.rows || c >= self.rows {
                return Err(Error::Parse(format!("matrix entry ({r},{c}) out of range")));
            }
            cols[c].insert(r, v);
        }
        Ok(SparseMatrix::from_columns(self.rows, cols))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vector_cancels_to_zero() {
        let mut v = SparseVector::unit(3usize);
        v.add_term(3, -Q::ONE);
        assert!(v.is_zero());
    }

    #[test]
    fn product_and_commutator() {
        let e = SparseMatrix::from_columns(2, vec![BTreeMap::new(), BTreeMap::from([(0, Q::ONE)])]);
        let f = SparseMatrix::from_columns(2, vec![BTreeMap::from([(1, Q::ONE)]), BTreeMap::new()]);
        let h = e.super_commutator(&f, 0, 0).unwrap();
        assert_eq!(h, SparseMatrix::diagonal(&[Q::ONE, -Q::ONE]));
        let k = e.super_commutator(&f, 1, 1).unwrap();
        assert_eq!(k, SparseMatrix::identity(2));
        assert!(e.mul(&e).unwrap().is_zero());
        let js = serde_json::to_string(&k.to_json()).unwrap();
        assert_eq!(js, r#"{"rows":2,"entries":[[0,0,"1"],[1,1,"1"]]}"#);
        assert_eq!(k.to_json().to_matrix().unwrap(), k);
    }
}
