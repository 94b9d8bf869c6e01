use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;

/// Drop trailing zero entries, keeping at least one.
pub fn trim_row(mut row: Vec<BigUint>) -> Vec<BigUint> {
    while row.len() > 1 && row.last().is_some_and(Zero::is_zero) {
        row.pop();
    }
    if row.is_empty() {
        row.push(BigUint::zero());
    }
    row
}

/// Rows `a(n, 0..=kmax(n))` keyed by `n`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DistributionTable {
    rows: BTreeMap<usize, Vec<BigUint>>,
}

impl DistributionTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, n: usize, row: Vec<BigUint>) {
        self.rows.insert(n, trim_row(row));
    }

    pub fn row(&self, n: usize) -> Option<&[BigUint]> {
        self.rows.get(&n).map(Vec::as_slice)
    }

    /// `a(n, k)`, zero past `kmax(n)`; `None` if row `n` is absent.
    pub fn get(&self, n: usize, k: usize) -> Option<BigUint> {
        self.rows
            .get(&n)
            .map(|r| r.get(k).cloned().unwrap_or_default())
    }

    pub fn kmax(&self, n: usize) -> Option<usize> {
        self.rows.get(&n).map(|r| r.len() - 1)
    }

    pub fn row_sum(&self, n: usize) -> Option<BigUint> {
        self.rows.get(&n).map(|r| r.iter().sum())
    }

    pub fn rows(&self) -> impl Iterator<Item = (usize, &[BigUint])> {
        self.rows.iter().map(|(&n, r)| (n, r.as_slice()))
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}
