//! Meager sets of `2^ω`.
//!
//! The open layer `y ∈ ⋃_{n≥1} U_{kprime(n, x(n))}` gives a universal open set
//! for dense open sets: every term is a nonempty basic subset of `U_n`, so every
//! section is dense. Rows of a matrix parameter give countably many dense open
//! sets; the complement of their intersection is the meager section.
//!
//! Also here: interval partitions and the sets
//! `F_{x,P} = {z : ∀^∞ n, x|I_n ≠ z|I_n}` forming a base of the meager ideal.

use alloc::vec::Vec;

use num_traits::{One, ToPrimitive};

use crate::enumeration::{cantor_cylinder, kprime, kprime_rank_cantor, Space};
use crate::space::{pair_u64, BairePrefix, BitPrefix, BitWord, Clopen, Natural, Tri};
use crate::{Error, Result};

/// Consecutive intervals `[a_n, b_n)` with `a_0 = 0` and `b_n = a_{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntervalPartition {
    intervals: Vec<(usize, usize)>,
}

impl IntervalPartition {
    pub fn from_widths(widths: &[usize]) -> Result<Self> {
        let mut intervals = Vec::with_capacity(widths.len());
        let mut a = 0usize;
        for &w in widths {
            if w == 0 {
                return Err(Error::InvariantViolated("empty interval".into()));
            }
            intervals.push((a, a + w));
            a += w;
        }
        Ok(IntervalPartition { intervals })
    }

    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

/// `I_0 = [0, y(0)+1)`, `I_n = [a_{n-1}, a_{n-1} + y(n) + 1)`, where `a_k` is the
/// right endpoint of `I_k`.
pub fn partition_from(y: &BairePrefix) -> Result<IntervalPartition> {
    let len = y.len_usize().ok_or(Error::IndexOutOfRange)?;
    let widths = y
        .to_vec(len)?
        .iter()
        .map(|v| v.to_usize().and_then(|v| v.checked_add(1)))
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::IndexOutOfRange)?;
    IntervalPartition::from_widths(&widths)
}

/// Stage reading of `z ∈ F_{x,P}` from block `from_block` on.
///
/// Only blocks lying inside both prefixes count. Holds when every such block
/// `n >= from_block` has `x|I_n ≠ z|I_n`; fails on the first block where they
/// agree.
pub fn fxp_eval(
    x: &BitPrefix,
    partition: &IntervalPartition,
    z: &BitPrefix,
    from_block: usize,
) -> Result<Tri> {
    let &(_, first_end) = partition
        .intervals()
        .get(from_block)
        .ok_or(Error::PartitionTooShort { block: from_block })?;
    let known = x.len().min(z.len());
    if first_end > known {
        return Err(Error::insufficient(first_end));
    }
    let (xb, zb) = (x.bits(), z.bits());
    let agree_somewhere = partition.intervals()[from_block..]
        .iter()
        .take_while(|&&(_, b)| b <= known)
        .any(|&(a, b)| xb[a..b] == zb[a..b]);
    Ok(Tri::from(!agree_somewhere))
}

/// Parameter `x` of the universal dense open set; only `x(1..)` is read.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseOpenParam {
    pub prefix: BairePrefix,
}

/// Parameter whose matrix rows `0..rows` are dense-open parameters, declared
/// valid up to stage `n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeagerParam {
    pub prefix: BairePrefix,
    pub rows: u64,
    pub n_max: u64,
}

/// The `n`-th term `U_{kprime(n, x(n))}` as a cylinder stem.
pub fn dense_term(x: &DenseOpenParam, n: u64) -> Result<BitWord> {
    let idx = kprime(&Natural::from(n), &x.prefix.at(n)?, Space::Cantor)?;
    cantor_cylinder(&idx)
}

/// `⋃_{1 ≤ n ≤ n_max} U_{kprime(n, x(n))}`.
pub fn dense_section_stage(x: &DenseOpenParam, n_max: u64) -> Result<Clopen> {
    if !x.prefix.has(&Natural::from(n_max)) {
        return Err(Error::insufficient(n_max + 1));
    }
    let mut acc = Clopen::empty();
    for n in 1..=n_max {
        acc = acc.union(&Clopen::cylinder(&dense_term(x, n)?)?);
    }
    Ok(acc)
}

/// Chooses, for each `1 ≤ n ≤ n_max`, the first nonempty basic subset of
/// `U_n ∩ W`, so that the stage section is contained in `W`.
pub fn dense_open_encode(w: &Clopen, n_max: u64) -> Result<DenseOpenParam> {
    let mut prefix = BairePrefix::zeros(n_max + 1);
    for n in 1..=n_max {
        let index = Natural::from(n);
        let stem = cantor_cylinder(&index)?;
        if !w.meets_cylinder(&stem) {
            return Err(Error::NotDense { index: n });
        }
        let target = first_cylinder_inside(&stem, w);
        prefix.set(Natural::from(n), kprime_rank_cantor(&index, &target)?);
    }
    Ok(DenseOpenParam { prefix })
}

/// Least cylinder `[v] ⊆ [stem] ∩ w` in (level, lex) order; `w` must meet `[stem]`.
fn first_cylinder_inside(stem: &BitWord, w: &Clopen) -> BitWord {
    let depth = (w.level() as usize).saturating_sub(stem.len());
    for j in 0..=depth {
        let level = (stem.len() + j) as u32;
        for r in 0..1usize << j {
            let v = BitWord::from_index(level, (stem.index() << j) + r);
            if w.contains_cylinder(&v) {
                return v;
            }
        }
    }
    unreachable!("w meets the stem, so some level-w.level() cylinder lies inside")
}

/// Packs one dense-open row per set into a matrix parameter.
pub fn meager_encode(dense_opens: &[Clopen], n_max: u64) -> Result<MeagerParam> {
    let mut prefix = BairePrefix::new();
    for (r, w) in dense_opens.iter().enumerate() {
        let row = dense_open_encode(w, n_max)?;
        for n in 0..=n_max {
            prefix.set(pair_u64(r as u64, n), row.prefix.at(n)?);
        }
    }
    Ok(MeagerParam {
        prefix,
        rows: dense_opens.len() as u64,
        n_max,
    })
}

/// Row `r` of a meager parameter, `n_max + 1` cells long.
pub fn meager_row(p: &MeagerParam, r: u64, n_max: u64) -> Result<DenseOpenParam> {
    let mut prefix = BairePrefix::new();
    for n in 0..=n_max {
        prefix.push(p.prefix.get(&pair_u64(r, n))?);
    }
    Ok(DenseOpenParam { prefix })
}

/// Stage membership of `z` in the meager section (the complement of the
/// intersection of the row sections).
///
/// Fails when `[z]` lies inside every row's stage union at `n_max`: those
/// unions only grow, so the point is in every dense open set. Holds when `[z]`
/// misses some row's union at the parameter's declared stage, i.e. no term the
/// parameter determines covers any point of `[z]`. `n_max` may not exceed the
/// declared stage.
pub fn meager_eval(p: &MeagerParam, z: &BitPrefix, rows: u64, n_max: u64) -> Result<Tri> {
    if n_max > p.n_max {
        let last = rows.max(1) - 1;
        return Err(Error::insufficient(pair_u64(last, n_max) + Natural::one()));
    }
    let mut inside_all = true;
    for r in 0..rows {
        let full = dense_section_stage(&meager_row(p, r, p.n_max)?, p.n_max)?;
        if !full.meets_cylinder(z) {
            return Ok(Tri::HoldsAtStage);
        }
        if inside_all {
            let stage = dense_section_stage(&meager_row(p, r, n_max)?, n_max)?;
            inside_all = stage.contains_cylinder(z);
        }
    }
    Ok(if inside_all {
        Tri::FailsAtStage
    } else {
        Tri::InsufficientData
    })
}

/// Stage membership in the universal open set over `ω^ω`: whether `point`
/// extends the stem of some term `U_{kprime(n, x(n))}` with `1 ≤ n ≤ n_max`.
/// An open condition, so it can hold at a stage but never fail.
pub fn dense_open_member_baire(x: &DenseOpenParam, point: &[Natural], n_max: u64) -> Result<Tri> {
    for n in 1..=n_max {
        let idx = kprime(&Natural::from(n), &x.prefix.at(n)?, Space::Baire)?;
        let stem = crate::space::seq_decode(&(idx - 1u32));
        if point.starts_with(&stem) {
            return Ok(Tri::HoldsAtStage);
        }
    }
    Ok(Tri::InsufficientData)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BitWord {
        BitWord::parse(s).unwrap()
    }

    fn c(level: u32, words: &[&str]) -> Clopen {
        let ws: Vec<BitWord> = words.iter().map(|s| w(s)).collect();
        Clopen::from_words(level, &ws).unwrap()
    }

    #[test]
    fn partition_examples() {
        let p = partition_from(&BairePrefix::from_u64s(&[0, 0, 0])).unwrap();
        assert_eq!(p.intervals(), &[(0, 1), (1, 2), (2, 3)]);
        let p = partition_from(&BairePrefix::from_u64s(&[2, 3])).unwrap();
        assert_eq!(p.intervals(), &[(0, 3), (3, 7)]);
        assert!(partition_from(&BairePrefix::new()).unwrap().is_empty());
    }

    #[test]
    fn fxp_examples() {
        let p = partition_from(&BairePrefix::from_u64s(&[2, 3])).unwrap();
        let z = w("0110100");
        assert_eq!(fxp_eval(&z, &p, &z, 0).unwrap(), Tri::FailsAtStage);
        assert_eq!(
            fxp_eval(&z.complement(), &p, &z, 0).unwrap(),
            Tri::HoldsAtStage
        );
        assert_eq!(
            fxp_eval(&z.complement(), &p, &z, 1).unwrap(),
            Tri::HoldsAtStage
        );
        // equal on block 0 only
        let x = w("0111011");
        assert_eq!(fxp_eval(&x, &p, &z, 0).unwrap(), Tri::FailsAtStage);
        assert_eq!(fxp_eval(&x, &p, &z, 1).unwrap(), Tri::HoldsAtStage);
        assert_eq!(
            fxp_eval(&w("01"), &p, &w("01"), 0),
            Err(Error::insufficient(3u32))
        );
        assert_eq!(
            fxp_eval(&x, &p, &z, 2),
            Err(Error::PartitionTooShort { block: 2 })
        );
    }

    #[test]
    fn first_stage_is_a_subset_of_the_whole_space() {
        for v in 0..20u64 {
            let x = DenseOpenParam {
                prefix: BairePrefix::from_u64s(&[0, v]),
            };
            let stage = dense_section_stage(&x, 1).unwrap();
            let expected = cantor_cylinder(
                &kprime(&Natural::from(1u32), &Natural::from(v), Space::Cantor).unwrap(),
            )
            .unwrap();
            assert_eq!(stage, Clopen::cylinder(&expected).unwrap());
        }
    }

    #[test]
    fn zero_parameter_is_dense() {
        let x = DenseOpenParam {
            prefix: BairePrefix::zeros(16u32),
        };
        let stage = dense_section_stage(&x, 15).unwrap();
        assert!(stage.is_whole());
        for n in 1..=15u64 {
            let u = cantor_cylinder(&Natural::from(n)).unwrap();
            assert!(stage.meets_cylinder(&u));
        }
    }

    #[test]
    fn encode_examples() {
        let x = dense_open_encode(&Clopen::whole(), 7).unwrap();
        assert!(dense_section_stage(&x, 7)
            .unwrap()
            .is_subset(&Clopen::whole()));
        let wset = c(2, &["00", "10"]);
        let x = dense_open_encode(&wset, 4).unwrap();
        for n in 1..=4 {
            assert!(dense_section_stage(&x, n).unwrap().is_subset(&wset));
        }
        assert_eq!(
            dense_open_encode(&wset, 5),
            Err(Error::NotDense { index: 5 })
        );
        assert_eq!(
            dense_open_encode(&c(1, &["0"]), 4),
            Err(Error::NotDense { index: 3 })
        );
    }

    #[test]
    fn meager_examples() {
        let empty = meager_encode(&[], 3).unwrap();
        assert_eq!(
            meager_eval(&empty, &w("0101"), 0, 3).unwrap(),
            Tri::FailsAtStage
        );

        let wset = c(3, &["000", "011", "100", "110", "111", "101"]);
        let p = meager_encode(core::slice::from_ref(&wset), 6).unwrap();
        let stage = dense_section_stage(&meager_row(&p, 0, 6).unwrap(), 6).unwrap();
        // complement of the stage is inside the meager section
        for word in stage.complement().words() {
            assert_eq!(meager_eval(&p, &word, 1, 6).unwrap(), Tri::HoldsAtStage);
        }
        for n in 1..=6 {
            assert_eq!(meager_eval(&p, &w("010"), 1, n).unwrap(), Tri::HoldsAtStage);
        }
        assert!(meager_eval(&p, &w("0"), 1, 7).is_err());
    }

    #[test]
    fn two_rows_cover_both_complements() {
        let a = c(2, &["00", "10", "11"]);
        let b = c(2, &["01", "10", "11"]);
        let p = meager_encode(&[a, b], 3).unwrap();
        assert_eq!(meager_eval(&p, &w("01"), 2, 3).unwrap(), Tri::HoldsAtStage);
        assert_eq!(meager_eval(&p, &w("00"), 2, 3).unwrap(), Tri::HoldsAtStage);
    }

    #[test]
    fn baire_open_layer() {
        let x = DenseOpenParam {
            prefix: BairePrefix::from_u64s(&[0, 0, 0]),
        };
        // kprime(1, 0) = U_1 = whole Baire space
        let pt = [Natural::from(3u32)];
        assert_eq!(
            dense_open_member_baire(&x, &pt, 1).unwrap(),
            Tri::HoldsAtStage
        );
    }
}
