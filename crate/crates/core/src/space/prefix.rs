use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{ToPrimitive, Zero};

use super::{pair, Natural};
use crate::{Error, Result};

/// Finite initial segment of a point of `ω^ω`.
///
/// Stored sparsely: only nonzero cells are kept, so prefixes whose length is a
/// sequence code (which grows doubly exponentially) stay cheap.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BairePrefix {
    len: Natural,
    cells: BTreeMap<Natural, Natural>,
}

impl BairePrefix {
    pub fn new() -> Self {
        BairePrefix::default()
    }

    /// All-zero prefix of the given length.
    pub fn zeros(len: impl Into<Natural>) -> Self {
        BairePrefix {
            len: len.into(),
            cells: BTreeMap::new(),
        }
    }

    pub fn from_vec(entries: Vec<Natural>) -> Self {
        let len = Natural::from(entries.len());
        let cells = entries
            .into_iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (Natural::from(i), v))
            .collect();
        BairePrefix { len, cells }
    }

    pub fn from_u64s(entries: &[u64]) -> Self {
        BairePrefix::from_vec(entries.iter().map(|&v| Natural::from(v)).collect())
    }

    pub fn len(&self) -> &Natural {
        &self.len
    }

    pub fn len_usize(&self) -> Option<usize> {
        self.len.to_usize()
    }

    pub fn is_empty(&self) -> bool {
        self.len.is_zero()
    }

    /// Cells holding a nonzero value, ascending by index.
    pub fn nonzero(&self) -> impl Iterator<Item = (&Natural, &Natural)> {
        self.cells.iter()
    }

    pub fn has(&self, index: &Natural) -> bool {
        index < &self.len
    }

    pub fn get(&self, index: &Natural) -> Result<Natural> {
        if index < &self.len {
            Ok(self.cells.get(index).cloned().unwrap_or_default())
        } else {
            Err(Error::insufficient(index + 1u32))
        }
    }

    pub fn at(&self, index: u64) -> Result<Natural> {
        self.get(&Natural::from(index))
    }

    /// Entry as a `u64`; `None` if absent or too large.
    pub fn at_u64(&self, index: u64) -> Option<u64> {
        self.at(index).ok().and_then(|v| v.to_u64())
    }

    /// Writes a cell, growing the prefix (with zeros) as needed.
    pub fn set(&mut self, index: Natural, value: Natural) {
        if index >= self.len {
            self.len = &index + 1u32;
        }
        if value.is_zero() {
            self.cells.remove(&index);
        } else {
            self.cells.insert(index, value);
        }
    }

    pub fn push(&mut self, value: Natural) {
        let index = self.len.clone();
        self.set(index, value);
    }

    /// Extends with zeros to at least `len`.
    pub fn pad_to(&mut self, len: &Natural) {
        if *len > self.len {
            self.len = len.clone();
        }
    }

    /// Dense copy of the first `n` entries.
    pub fn to_vec(&self, n: usize) -> Result<Vec<Natural>> {
        if Natural::from(n) > self.len {
            return Err(Error::insufficient(n));
        }
        let mut out = alloc::vec![Natural::zero(); n];
        for (i, v) in self.cells.range(..Natural::from(n)) {
            // keys below n fit in usize
            out[i.to_usize().unwrap_or(0)] = v.clone();
        }
        Ok(out)
    }

    /// Row `row` of the matrix view `(n, k) ↦ self(pair(n, k))`, as far as it is present.
    pub fn matrix_row(&self, row: u64) -> BairePrefix {
        let mut out = BairePrefix::new();
        let mut k = 0u64;
        loop {
            let idx = pair(&Natural::from(row), &Natural::from(k));
            if !self.has(&idx) {
                break;
            }
            out.push(self.get(&idx).unwrap_or_default());
            k += 1;
        }
        out
    }
}

impl From<Vec<u64>> for BairePrefix {
    fn from(v: Vec<u64>) -> Self {
        BairePrefix::from_u64s(&v)
    }
}
