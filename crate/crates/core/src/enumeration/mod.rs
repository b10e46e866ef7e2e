//! Canonical enumerations consumed by the constructions: small-measure clopen
//! sets, basic open sets of `2^ω` and `ω^ω`, the nonempty-subset index
//! function, lexicographic words and combinadic subset indexing.

mod binom;
mod clopen_order;

use alloc::collections::BinaryHeap;
use alloc::vec::Vec;
use core::cmp::Reverse;

use num_traits::{One, ToPrimitive, Zero};

pub use binom::{binomial, binomial_prefix_sum};
pub use clopen_order::{clopen_enum, clopen_enum_u64, clopen_rank, level_count};

use crate::space::{pair, seq_code, seq_decode, BitWord, Natural};
use crate::{Error, Result};

/// Spaces whose basic open sets are enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    Cantor,
    Baire,
}

/// A basic open set `U_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasicOpen {
    Empty,
    /// Cylinder of `2^ω`.
    Cantor(BitWord),
    /// Cylinder of `ω^ω` given by its stem.
    Baire(Vec<Natural>),
}

/// `U_n`. Cantor: `U_0 = ∅`, then every cylinder by (level, lex), so
/// `U_{2^ℓ + i}` is the `i`-th level-`ℓ` cylinder. Baire: `U_n = [seq_decode(n-1)]`.
pub fn basic_open(space: Space, n: &Natural) -> Result<BasicOpen> {
    if n.is_zero() {
        return Ok(BasicOpen::Empty);
    }
    match space {
        Space::Cantor => Ok(BasicOpen::Cantor(BitWord::from_natural(n.bits() - 1, n))),
        Space::Baire => Ok(BasicOpen::Baire(seq_decode(&(n - 1u32)))),
    }
}

/// Cantor cylinder `U_n` for `n >= 1`.
pub fn cantor_cylinder(n: &Natural) -> Result<BitWord> {
    match basic_open(Space::Cantor, n)? {
        BasicOpen::Cantor(w) => Ok(w),
        _ => Err(Error::IndexOutOfRange),
    }
}

/// Index `n` with `U_n = [w]` in `2^ω`.
pub fn cantor_index(w: &BitWord) -> Natural {
    (Natural::one() << w.len()) + w.to_natural()
}

/// Index `n` with `U_n = [s]` in `ω^ω`.
pub fn baire_index(stem: &[Natural]) -> Natural {
    seq_code(stem) + 1u32
}

/// Index of the `(m+1)`-th nonempty basic open subset of `U_n` (and 0 for `n = 0`).
///
/// Unlike a plain "basic subsets" count this never yields `U_0 = ∅`, so every
/// term `U_{kprime(n, ·)}` with `n >= 1` is nonempty.
pub fn kprime(n: &Natural, m: &Natural, space: Space) -> Result<Natural> {
    if n.is_zero() {
        return Ok(Natural::zero());
    }
    match space {
        Space::Cantor => {
            let stem = cantor_cylinder(n)?;
            // extensions of depth j occupy ranks 2^j - 1 .. 2^(j+1) - 1
            let m1 = m + 1u32;
            let j = m1.bits() - 1;
            let r = &m1 - (Natural::one() << j);
            let level = stem.len() as u64 + j;
            Ok((Natural::one() << level) + (stem.to_natural() << j) + r)
        }
        Space::Baire => {
            let stem = seq_decode(&(n - 1u32));
            let m = m.to_u64().ok_or(Error::IndexOutOfRange)?;
            baire_extension(&stem, m).map(|code| code + 1u32)
        }
    }
}

/// Inverse of [`kprime`] on Cantor space: the rank `m` of the cylinder `target ⊆ U_n`.
pub fn kprime_rank_cantor(n: &Natural, target: &BitWord) -> Result<Natural> {
    let stem = cantor_cylinder(n)?;
    if !stem.is_prefix_of(target) {
        return Err(Error::IndexOutOfRange);
    }
    let j = target.len() - stem.len();
    let r = target.to_natural() - (stem.to_natural() << j);
    Ok((Natural::one() << j) - 1u32 + r)
}

/// Sequence code of the `m`-th extension of `stem` (itself included) in code order.
fn baire_extension(stem: &[Natural], m: u64) -> Result<Natural> {
    // Codes grow along children and along siblings, so a heap of frontier
    // nodes (first child, next sibling) yields extensions in code order.
    let base = seq_code(stem);
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((base, None::<(Natural, Natural)>)));
    let mut popped = 0u64;
    while let Some(Reverse((code, sibling_of))) = heap.pop() {
        if popped == m {
            return Ok(code);
        }
        popped += 1;
        let child = pair(&code, &Natural::zero()) + 1u32;
        heap.push(Reverse((child, Some((code.clone(), Natural::zero())))));
        if let Some((parent, a)) = sibling_of {
            let next = &a + 1u32;
            let sib = pair(&parent, &next) + 1u32;
            heap.push(Reverse((sib, Some((parent, next)))));
        }
    }
    Err(Error::IndexOutOfRange)
}

/// The `k`-th word of `{0,1}^n` in lexicographic order.
pub fn lex_word(n: u32, k: u64) -> Result<BitWord> {
    if n >= 64 || k >= 1u64 << n {
        return Err(Error::IndexOutOfRange);
    }
    Ok(BitWord::from_index(n, k as usize))
}

/// The `r`-th `t`-subset of `{0..n-1}` in lexicographic order of sorted tuples.
pub fn kcomb_unrank(n: u64, t: u64, r: &Natural) -> Result<Vec<u64>> {
    if t > n {
        return Err(Error::IndexOutOfRange);
    }
    let mut b = binomial(n, t);
    if r >= &b {
        return Err(Error::IndexOutOfRange);
    }
    let mut r = r.clone();
    let mut out = Vec::with_capacity(t as usize);
    let (mut rem_n, mut rem_t) = (n, t);
    let mut x = 0u64;
    while rem_t > 0 {
        // subsets of {x..n-1} of size rem_t that start with x
        let with_x = &b * rem_t / rem_n;
        if r < with_x {
            out.push(x);
            b = with_x;
            rem_t -= 1;
        } else {
            r -= &with_x;
            b = &b * (rem_n - rem_t) / rem_n;
        }
        rem_n -= 1;
        x += 1;
    }
    Ok(out)
}

/// Inverse of [`kcomb_unrank`]; `subset` must be strictly increasing and below `n`.
pub fn kcomb_rank(n: u64, subset: &[u64]) -> Result<Natural> {
    if subset.windows(2).any(|w| w[0] >= w[1]) || subset.last().is_some_and(|&l| l >= n) {
        return Err(Error::IndexOutOfRange);
    }
    let t = subset.len() as u64;
    let mut b = binomial(n, t);
    let mut rank = Natural::zero();
    let (mut rem_n, mut rem_t) = (n, t);
    let mut x = 0u64;
    for &s in subset {
        while x < s {
            let with_x = &b * rem_t / rem_n;
            rank += &with_x;
            b = &b * (rem_n - rem_t) / rem_n;
            rem_n -= 1;
            x += 1;
        }
        b = &b * rem_t / rem_n;
        rem_t -= 1;
        rem_n -= 1;
        x += 1;
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    fn w(s: &str) -> BitWord {
        BitWord::parse(s).unwrap()
    }

    #[test]
    fn basic_open_examples() {
        assert_eq!(
            basic_open(Space::Cantor, &nat(0)).unwrap(),
            BasicOpen::Empty
        );
        assert_eq!(
            basic_open(Space::Cantor, &nat(1)).unwrap(),
            BasicOpen::Cantor(w(""))
        );
        assert_eq!(
            basic_open(Space::Cantor, &nat(2)).unwrap(),
            BasicOpen::Cantor(w("0"))
        );
        assert_eq!(
            basic_open(Space::Cantor, &nat(4)).unwrap(),
            BasicOpen::Cantor(w("00"))
        );
        assert_eq!(
            basic_open(Space::Cantor, &nat(7)).unwrap(),
            BasicOpen::Cantor(w("11"))
        );
        assert_eq!(
            basic_open(Space::Baire, &nat(1)).unwrap(),
            BasicOpen::Baire(vec![])
        );
        assert_eq!(
            basic_open(Space::Baire, &nat(2)).unwrap(),
            BasicOpen::Baire(vec![nat(0)])
        );
        for i in 1..200u64 {
            let c = cantor_cylinder(&nat(i)).unwrap();
            assert_eq!(cantor_index(&c), nat(i));
        }
    }

    #[test]
    fn kprime_examples() {
        for m in 0..5 {
            assert_eq!(kprime(&nat(0), &nat(m), Space::Cantor).unwrap(), nat(0));
            assert_eq!(kprime(&nat(0), &nat(m), Space::Baire).unwrap(), nat(0));
        }
        assert_eq!(kprime(&nat(2), &nat(0), Space::Cantor).unwrap(), nat(2));
        assert_eq!(kprime(&nat(2), &nat(1), Space::Cantor).unwrap(), nat(4));
        assert_eq!(kprime(&nat(2), &nat(2), Space::Cantor).unwrap(), nat(5));
        assert_eq!(kprime(&nat(2), &nat(3), Space::Cantor).unwrap(), nat(8));
    }

    /// Nonempty basic subsets of U_n by scanning indices in order.
    fn brute_subsets(n: u64, space: Space, limit: u64) -> Vec<Natural> {
        let outer = basic_open(space, &nat(n)).unwrap();
        (1..limit)
            .filter(|&k| {
                let inner = basic_open(space, &nat(k)).unwrap();
                match (&outer, &inner) {
                    (BasicOpen::Cantor(a), BasicOpen::Cantor(b)) => a.is_prefix_of(b),
                    (BasicOpen::Baire(a), BasicOpen::Baire(b)) => b.starts_with(a),
                    _ => false,
                }
            })
            .map(nat)
            .collect()
    }

    #[test]
    fn kprime_matches_brute_force() {
        for space in [Space::Cantor, Space::Baire] {
            for n in 1..12u64 {
                let expected = brute_subsets(n, space, 1000);
                for (m, want) in expected.iter().enumerate() {
                    let got = kprime(&nat(n), &nat(m as u64), space).unwrap();
                    assert_eq!(&got, want, "{space:?} n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn kprime_rank_inverts() {
        for n in 1..20u64 {
            for m in 0..50u64 {
                let idx = kprime(&nat(n), &nat(m), Space::Cantor).unwrap();
                let cyl = cantor_cylinder(&idx).unwrap();
                assert_eq!(kprime_rank_cantor(&nat(n), &cyl).unwrap(), nat(m));
            }
        }
    }

    #[test]
    fn lex_word_examples() {
        assert_eq!(lex_word(2, 0).unwrap(), w("00"));
        assert_eq!(lex_word(2, 3).unwrap(), w("11"));
        assert_eq!(lex_word(3, 4).unwrap(), w("100"));
        assert_eq!(lex_word(2, 4), Err(Error::IndexOutOfRange));
    }

    #[test]
    fn kcomb_examples() {
        assert_eq!(kcomb_unrank(4, 2, &nat(0)).unwrap(), vec![0, 1]);
        assert_eq!(kcomb_unrank(4, 2, &nat(5)).unwrap(), vec![2, 3]);
        assert_eq!(kcomb_unrank(4, 2, &nat(6)), Err(Error::IndexOutOfRange));
        assert_eq!(kcomb_unrank(3, 0, &nat(0)).unwrap(), Vec::<u64>::new());
        assert_eq!(kcomb_rank(4, &[1, 3]).unwrap(), nat(4));
        assert_eq!(kcomb_rank(4, &[3, 1]), Err(Error::IndexOutOfRange));
    }

    #[test]
    fn kcomb_matches_lexicographic_brute_force() {
        for n in 0..=8u64 {
            for t in 0..=n {
                let subsets: Vec<Vec<u64>> = (0u32..1 << n)
                    .filter(|m| m.count_ones() as u64 == t)
                    .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect())
                    .collect::<Vec<_>>();
                let mut sorted = subsets.clone();
                sorted.sort();
                for (r, s) in sorted.iter().enumerate() {
                    assert_eq!(&kcomb_unrank(n, t, &nat(r as u64)).unwrap(), s);
                }
            }
        }
    }
}
