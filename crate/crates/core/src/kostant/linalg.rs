//! Sparse exact row echelon form over the rationals.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

pub type SparseVec<K> = BTreeMap<K, BigRational>;

/// Rows in echelon form: each row's pivot is its smallest key, pivots are
/// distinct. Rows are not normalised.
#[derive(Debug, Clone)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon {
            rows: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.rows.values()
    }

    /// Reduces `v` against the rows, eliminating its leading key while that
    /// key is a pivot. The result is zero or has a non-pivot leading key.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        while let Some((k, c)) = v.iter().next().map(|(k, c)| (k.clone(), c.clone())) {
            let Some(row) = self.rows.get(&k) else { break };
            let factor = c / &row[&k];
            for (rk, rc) in row {
                let entry = v.entry(rk.clone()).or_insert_with(BigRational::zero);
                *entry -= &factor * rc;
                if entry.is_zero() {
                    v.remove(rk);
                }
            }
        }
        v
    }

    /// Inserts `v` when independent of the rows; returns whether it was.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let r = self.reduce(v);
        match r.keys().next().cloned() {
            None => false,
            Some(p) => {
                self.rows.insert(p, r);
                true
            }
        }
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v.clone()).is_empty()
    }
}

/// Rank of a family of sparse vectors.
pub fn rank<K: Ord + Clone>(vectors: impl IntoIterator<Item = SparseVec<K>>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}
