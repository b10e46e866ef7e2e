use alloc::vec;
use alloc::vec::Vec;

/// Dense bitset over `0..len`; bit `i` stands for the `i`-th word of a level.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mask {
    len: usize,
    blocks: Vec<u64>,
}

impl Mask {
    pub fn zeros(len: usize) -> Self {
        Mask {
            len,
            blocks: vec![0; len.div_ceil(64)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut m = Mask {
            len,
            blocks: vec![u64::MAX; len.div_ceil(64)],
        };
        m.clear_tail();
        m
    }

    fn clear_tail(&mut self) {
        let rem = self.len % 64;
        if rem != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        i < self.len && (self.blocks[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        if value {
            self.blocks[i / 64] |= 1 << (i % 64);
        } else {
            self.blocks[i / 64] &= !(1 << (i % 64));
        }
    }

    /// Sets bits `start..end`.
    pub fn set_range(&mut self, start: usize, end: usize) {
        // word-at-a-time for the wide lifts
        let mut i = start;
        while i < end {
            if i.is_multiple_of(64) && end - i >= 64 {
                self.blocks[i / 64] = u64::MAX;
                i += 64;
            } else {
                self.blocks[i / 64] |= 1 << (i % 64);
                i += 1;
            }
        }
    }

    pub fn count_ones(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn none(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &block)| {
            let mut b = block;
            core::iter::from_fn(move || {
                if b == 0 {
                    None
                } else {
                    let t = b.trailing_zeros() as usize;
                    b &= b - 1;
                    Some(bi * 64 + t)
                }
            })
        })
    }

    fn zip_with(&self, other: &Mask, f: impl Fn(u64, u64) -> u64) -> Mask {
        assert_eq!(self.len, other.len);
        Mask {
            len: self.len,
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn or(&self, other: &Mask) -> Mask {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn and(&self, other: &Mask) -> Mask {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn and_not(&self, other: &Mask) -> Mask {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn not(&self) -> Mask {
        let mut m = Mask {
            len: self.len,
            blocks: self.blocks.iter().map(|b| !b).collect(),
        };
        m.clear_tail();
        m
    }

    pub fn is_subset(&self, other: &Mask) -> bool {
        assert_eq!(self.len, other.len);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Mask) -> bool {
        assert_eq!(self.len, other.len);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .any(|(&a, &b)| a & b != 0)
    }

    /// True when bits `start..end` are all set.
    pub fn all_in(&self, start: usize, end: usize) -> bool {
        (start..end).all(|i| self.get(i))
    }

    pub fn any_in(&self, start: usize, end: usize) -> bool {
        (start..end).any(|i| self.get(i))
    }
}
