//! The master enumeration `C^n_k` of clopen sets of measure `< 2^-n`.
//!
//! `C^n_0 = ∅`. The remaining sets come level by level (canonical level
//! ascending, starting at `n + 1`), and inside a level by the numeric value of
//! the word mask, where word `i` contributes `2^i`. At level `ℓ` a mask is
//! admissible when it has fewer than `2^(ℓ-n)` ones and is not the lift of a
//! level-`ℓ-1` mask (every sibling pair equal). Both counts are binomial sums,
//! so ranking and unranking cost O(2^ℓ) big-integer steps.

use num_traits::{One, Zero};

use super::binom::PartialSum;
use crate::space::{check_level, Clopen, Dyadic, Mask, Natural};
use crate::{Error, Result};

/// Largest admissible popcount at `level` for bound `2^-n`, or `None` if none.
fn max_ones(n: u32, level: u32) -> Option<u64> {
    if level <= n {
        None
    } else {
        Some((1u64 << (level - n)) - 1)
    }
}

/// Number of admissible canonical sets at `level` (`level >= 1`).
pub fn level_count(n: u32, level: u32) -> Natural {
    let Some(cmax) = max_ones(n, level) else {
        return Natural::zero();
    };
    let width = 1u64 << level;
    let all = PartialSum::new(width, cmax as i64);
    let lifted = PartialSum::new(width / 2, (cmax / 2) as i64);
    all.sum() - lifted.sum()
}

/// Counts admissible completions while walking a mask from the top bit down.
struct Walker {
    cmax: i64,
    ones: i64,
    /// every fully decided sibling pair above the cursor is equal
    pairs_equal: bool,
    all: PartialSum,
    lifted: PartialSum,
}

impl Walker {
    fn new(cmax: u64, width: u64) -> Self {
        let cmax = cmax as i64;
        Walker {
            cmax,
            ones: 0,
            pairs_equal: true,
            all: PartialSum::new(width, cmax),
            lifted: PartialSum::new(width / 2, cmax / 2),
        }
    }

    /// Admissible masks agreeing with the decided bits above `p`, with bit `p`
    /// clear, and anything below.
    fn completions_with_zero(&mut self, p: u64, high_bit_of_pair: bool) -> Natural {
        let rem = self.cmax - self.ones;
        self.all.step_to(p, rem);
        let total = self.all.sum().clone();
        // Reducible completions: all pairs equal. When p is the low bit of its
        // pair, the already-decided high bit must be 0 as well.
        let pair_ok = if p % 2 == 1 {
            self.pairs_equal
        } else {
            self.pairs_equal && !high_bit_of_pair
        };
        let lifted = if pair_ok && rem >= 0 {
            self.lifted.step_to(p / 2, rem.div_euclid(2));
            self.lifted.sum().clone()
        } else {
            Natural::zero()
        };
        total - lifted
    }

    fn decide(&mut self, p: u64, bit: bool, high_bit_of_pair: bool) {
        if bit {
            self.ones += 1;
        }
        if p.is_multiple_of(2) && bit != high_bit_of_pair {
            self.pairs_equal = false;
        }
    }
}

fn rank_in_level(n: u32, level: u32, mask: &Mask) -> Natural {
    let cmax = max_ones(n, level).unwrap_or(0);
    let width = 1u64 << level;
    let mut walker = Walker::new(cmax, width);
    let mut rank = Natural::zero();
    for p in (0..width).rev() {
        let bit = mask.get(p as usize);
        let high = p % 2 == 0 && mask.get(p as usize + 1);
        if bit {
            rank += walker.completions_with_zero(p, high);
        }
        walker.decide(p, bit, high);
    }
    rank
}

fn unrank_in_level(n: u32, level: u32, mut index: Natural) -> Mask {
    let cmax = max_ones(n, level).unwrap_or(0);
    let width = 1u64 << level;
    let mut walker = Walker::new(cmax, width);
    let mut mask = Mask::zeros(width as usize);
    for p in (0..width).rev() {
        let high = p % 2 == 0 && mask.get(p as usize + 1);
        let zero_count = walker.completions_with_zero(p, high);
        let bit = index >= zero_count;
        if bit {
            index -= zero_count;
            mask.set(p as usize, true);
        }
        walker.decide(p, bit, high);
    }
    mask
}

/// `C^n_k`: the `k`-th clopen set of measure `< 2^-n`.
pub fn clopen_enum(n: u32, k: &Natural) -> Result<Clopen> {
    if k.is_zero() {
        return Ok(Clopen::empty());
    }
    let mut rest = k - Natural::one();
    let mut level = n + 1;
    loop {
        check_level(u64::from(level))?;
        let count = level_count(n, level);
        if rest < count {
            let mask = unrank_in_level(n, level, rest);
            return Ok(Clopen::from_mask(level, mask));
        }
        rest -= count;
        level += 1;
    }
}

pub fn clopen_enum_u64(n: u32, k: u64) -> Result<Clopen> {
    clopen_enum(n, &Natural::from(k))
}

/// Inverse of [`clopen_enum`].
pub fn clopen_rank(n: u32, c: &Clopen) -> Result<Natural> {
    if c.measure() >= Dyadic::pow2_neg(n) {
        return Err(Error::MeasureTooLarge { bound_exp: n });
    }
    if c.is_empty() {
        return Ok(Natural::zero());
    }
    let mut k = Natural::one();
    for level in n + 1..c.level() {
        k += level_count(n, level);
    }
    Ok(k + rank_in_level(n, c.level(), c.mask()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::BitWord;
    use alloc::collections::BTreeSet;
    use alloc::vec::Vec;

    fn c(level: u32, words: &[&str]) -> Clopen {
        let ws: Vec<BitWord> = words.iter().map(|s| BitWord::parse(s).unwrap()).collect();
        Clopen::from_words(level, &ws).unwrap()
    }

    /// Canonical sets of one level, in master order, by scanning every mask.
    fn brute_level(n: u32, level: u32) -> Vec<Clopen> {
        let width = 1usize << level;
        let bound = Dyadic::pow2_neg(n);
        (0u64..(1u64 << width))
            .filter_map(|bits| {
                let mut m = Mask::zeros(width);
                for i in 0..width {
                    if bits >> i & 1 == 1 {
                        m.set(i, true);
                    }
                }
                let cl = Clopen::from_mask(level, m);
                (cl.level() == level && cl.measure() < bound).then_some(cl)
            })
            .collect()
    }

    #[test]
    fn examples() {
        for n in 0..5 {
            assert_eq!(clopen_enum_u64(n, 0).unwrap(), Clopen::empty());
            assert_eq!(clopen_rank(n, &Clopen::empty()).unwrap(), Natural::zero());
        }
        assert_eq!(clopen_enum_u64(0, 1).unwrap(), c(1, &["0"]));
        assert_eq!(clopen_enum_u64(1, 1).unwrap(), c(2, &["00"]));
        assert_eq!(clopen_rank(0, &c(1, &["0"])).unwrap(), Natural::one());
        assert_eq!(
            clopen_rank(1, &c(1, &["0"])),
            Err(Error::MeasureTooLarge { bound_exp: 1 })
        );
    }

    #[test]
    fn level_counts_match_brute_force() {
        for n in 0..4 {
            for level in 1..=4 {
                let brute = brute_level(n, level).len();
                assert_eq!(
                    level_count(n, level),
                    Natural::from(brute),
                    "n={n} level={level}"
                );
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force_order() {
        for n in 0..4u32 {
            let mut expected = Vec::new();
            for level in 1..=4 {
                expected.extend(brute_level(n, level));
            }
            let mut seen = BTreeSet::new();
            for (i, want) in expected.iter().enumerate() {
                let k = Natural::from(i as u64 + 1);
                let got = clopen_enum(n, &k).unwrap();
                assert_eq!(&got, want, "n={n} k={k}");
                assert_eq!(clopen_rank(n, &got).unwrap(), k);
                assert!(seen.insert(got));
            }
        }
    }

    #[test]
    fn rank_inverts_enum_on_larger_levels() {
        for n in [0u32, 2, 5] {
            for k in (1..4000u64).step_by(37) {
                let cl = clopen_enum_u64(n, k).unwrap();
                assert!(cl.measure() < Dyadic::pow2_neg(n));
                assert_eq!(clopen_rank(n, &cl).unwrap(), Natural::from(k));
            }
        }
        // a deep set ranks and unranks through huge indices
        let deep = c(10, &["0000000001", "1111111110", "0101010101"]);
        let k = clopen_rank(3, &deep).unwrap();
        assert!(k.bits() > 64);
        assert_eq!(clopen_enum(3, &k).unwrap(), deep);
    }
}
