use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A finite 0/1 word; the empty word names the whole of `2^ω` as a cylinder.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitWord {
    bits: Vec<bool>,
}

impl BitWord {
    pub fn new(bits: Vec<bool>) -> Self {
        BitWord { bits }
    }

    pub fn empty() -> Self {
        BitWord { bits: Vec::new() }
    }

    /// Parses a string of `0`/`1` characters.
    pub fn parse(s: &str) -> Option<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Some(false),
                '1' => Some(true),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(BitWord::new)
    }

    /// The `index`-th word of `{0,1}^level` in lexicographic order.
    pub fn from_index(level: u32, index: usize) -> Self {
        let bits = (0..level)
            .map(|i| (index >> (level - 1 - i)) & 1 == 1)
            .collect();
        BitWord { bits }
    }

    /// Position of this word among the words of its length, lexicographically.
    pub fn index(&self) -> usize {
        self.bits
            .iter()
            .fold(0usize, |acc, &b| (acc << 1) | usize::from(b))
    }

    /// Like [`BitWord::from_index`] for indices of any size; high bits beyond `level` are ignored.
    pub fn from_natural(level: u64, index: &super::Natural) -> Self {
        let bits = (0..level).map(|i| index.bit(level - 1 - i)).collect();
        BitWord { bits }
    }

    /// Like [`BitWord::index`] without the width limit.
    pub fn to_natural(&self) -> super::Natural {
        let mut n = super::Natural::default();
        for (i, &b) in self.bits.iter().rev().enumerate() {
            if b {
                n.set_bit(i as u64, true);
            }
        }
        n
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, i: usize) -> Option<bool> {
        self.bits.get(i).copied()
    }

    pub fn push(&mut self, bit: bool) {
        self.bits.push(bit);
    }

    /// Restriction to the first `n` bits (or the whole word if shorter).
    pub fn truncate(&self, n: usize) -> BitWord {
        BitWord::new(self.bits[..n.min(self.bits.len())].to_vec())
    }

    pub fn is_prefix_of(&self, other: &BitWord) -> bool {
        other.bits.starts_with(&self.bits)
    }

    pub fn complement(&self) -> BitWord {
        BitWord::new(self.bits.iter().map(|b| !b).collect())
    }

    pub fn to_bit_string(&self) -> String {
        self.bits
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl From<Vec<bool>> for BitWord {
    fn from(bits: Vec<bool>) -> Self {
        BitWord::new(bits)
    }
}
