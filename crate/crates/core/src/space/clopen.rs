use alloc::vec::Vec;
use core::fmt;

use super::{check_level, BitWord, Dyadic, Mask};
use crate::Result;

/// Clopen subset of `2^ω`: a union of cylinders of one level.
///
/// Always canonical: `level` is the least level at which the set is a union of
/// level-cylinders, so structural equality is set equality. Bit `i` of the mask
/// is the `i`-th word of the level in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clopen {
    level: u32,
    mask: Mask,
}

impl Clopen {
    pub fn empty() -> Self {
        Clopen {
            level: 0,
            mask: Mask::zeros(1),
        }
    }

    pub fn whole() -> Self {
        Clopen {
            level: 0,
            mask: Mask::ones(1),
        }
    }

    /// The cylinder `[w]` of all points extending `w`.
    pub fn cylinder(w: &BitWord) -> Result<Self> {
        let level = check_level(w.len() as u64)?;
        let mut mask = Mask::zeros(1 << level);
        mask.set(w.index(), true);
        Ok(Clopen::from_mask(level, mask))
    }

    /// Canonical representative of the union of the given level-`level` cylinders.
    pub fn from_words<'a>(
        level: u32,
        words: impl IntoIterator<Item = &'a BitWord>,
    ) -> Result<Self> {
        let level = check_level(u64::from(level))?;
        let mut mask = Mask::zeros(1 << level);
        for w in words {
            if w.len() != level as usize {
                return Err(crate::Error::LengthMismatch {
                    left: w.len(),
                    right: level as usize,
                });
            }
            mask.set(w.index(), true);
        }
        Ok(Clopen::from_mask(level, mask))
    }

    /// Canonicalizes a raw mask of `2^level` bits.
    pub fn from_mask(level: u32, mask: Mask) -> Self {
        assert_eq!(mask.len(), 1usize << level, "mask width must be 2^level");
        let mut level = level;
        let mut mask = mask;
        while level > 0 && (0..mask.len() / 2).all(|i| mask.get(2 * i) == mask.get(2 * i + 1)) {
            let mut half = Mask::zeros(mask.len() / 2);
            for i in mask.iter_ones().filter(|i| i % 2 == 0) {
                half.set(i / 2, true);
            }
            mask = half;
            level -= 1;
        }
        Clopen { level, mask }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn mask(&self) -> &Mask {
        &self.mask
    }

    /// Number of level-`level` cylinders making up the set.
    pub fn count(&self) -> usize {
        self.mask.count_ones()
    }

    pub fn words(&self) -> Vec<BitWord> {
        self.mask
            .iter_ones()
            .map(|i| BitWord::from_index(self.level, i))
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.mask.none()
    }

    pub fn is_whole(&self) -> bool {
        self.level == 0 && self.mask.get(0)
    }

    pub fn measure(&self) -> Dyadic {
        Dyadic::new(self.count() as u64, self.level)
    }

    /// Mask of the same set at a finer level.
    pub fn lift(&self, level: u32) -> Mask {
        assert!(level >= self.level);
        let shift = level - self.level;
        let mut out = Mask::zeros(1 << level);
        for i in self.mask.iter_ones() {
            out.set_range(i << shift, (i + 1) << shift);
        }
        out
    }

    fn combine(&self, other: &Clopen, f: impl Fn(&Mask, &Mask) -> Mask) -> Clopen {
        let level = self.level.max(other.level);
        Clopen::from_mask(level, f(&self.lift(level), &other.lift(level)))
    }

    pub fn union(&self, other: &Clopen) -> Clopen {
        self.combine(other, Mask::or)
    }

    pub fn intersect(&self, other: &Clopen) -> Clopen {
        self.combine(other, Mask::and)
    }

    pub fn difference(&self, other: &Clopen) -> Clopen {
        self.combine(other, Mask::and_not)
    }

    pub fn complement(&self) -> Clopen {
        Clopen {
            level: self.level,
            mask: self.mask.not(),
        }
    }

    pub fn is_subset(&self, other: &Clopen) -> bool {
        let level = self.level.max(other.level);
        self.lift(level).is_subset(&other.lift(level))
    }

    pub fn intersects(&self, other: &Clopen) -> bool {
        let level = self.level.max(other.level);
        self.lift(level).intersects(&other.lift(level))
    }

    /// Range of level-`self.level` word indices lying inside `[w]`, or the
    /// single index containing `[w]` when `w` is at least as long as the level.
    fn span(&self, w: &BitWord) -> (usize, usize) {
        let l = self.level as usize;
        if w.len() >= l {
            let i = w.truncate(l).index();
            (i, i + 1)
        } else {
            let shift = l - w.len();
            let i = w.index();
            (i << shift, (i + 1) << shift)
        }
    }

    /// `[w] ⊆ self`.
    pub fn contains_cylinder(&self, w: &BitWord) -> bool {
        let (a, b) = self.span(w);
        self.mask.all_in(a, b)
    }

    /// `[w] ∩ self ≠ ∅`.
    pub fn meets_cylinder(&self, w: &BitWord) -> bool {
        let (a, b) = self.span(w);
        self.mask.any_in(a, b)
    }

    /// `λ([w] \ self)`.
    pub fn uncovered_measure(&self, w: &BitWord) -> Dyadic {
        let l = self.level as usize;
        if w.len() >= l {
            if self.contains_cylinder(w) {
                Dyadic::zero()
            } else {
                Dyadic::pow2_neg(w.len() as u32)
            }
        } else {
            let (a, b) = self.span(w);
            let missing = (a..b).filter(|&i| !self.mask.get(i)).count();
            Dyadic::new(missing as u64, self.level)
        }
    }
}

impl fmt::Display for Clopen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}{{", self.level)?;
        for (i, w) in self.words().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if w.is_empty() {
                f.write_str("ε")?;
            } else {
                write!(f, "{w}")?;
            }
        }
        f.write_str("}")
    }
}
