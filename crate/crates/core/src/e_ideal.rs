//! The σ-ideal `E` generated by closed null sets, handled through complements.
//!
//! A triple `(x0, x1, x2)` names the open set `⋃_n B^{x0(n)+n}_{x1(n), x2(n)}`,
//! where `B^m_{L,l}` is the union of the level-`L` cylinders picked out by the
//! `l`-th subset of size `2^L − 2^{L−m}`. Each term has measure `1 − 2^-m`, so
//! the set has full measure. Countably many triples give a full-measure `G_δ`
//! set, whose complement is a section of the universal `F_σ` set for `E`.

use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::enumeration::{binomial, kcomb_rank, kcomb_unrank};
use crate::space::{check_level, pair_u64, BairePrefix, BitPrefix, Clopen, Mask, Natural, Tri};
use crate::{Error, Result};

/// Rows 0, 1, 2 of a parameter's matrix view.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ETripleParam {
    pub x0: BairePrefix,
    pub x1: BairePrefix,
    pub x2: BairePrefix,
}

impl ETripleParam {
    pub fn from_prefix(p: &BairePrefix) -> Self {
        ETripleParam {
            x0: p.matrix_row(0),
            x1: p.matrix_row(1),
            x2: p.matrix_row(2),
        }
    }

    /// Inverse of [`ETripleParam::from_prefix`] for the first `len` columns:
    /// every cell up to `pair(2, len - 1)` is present.
    pub fn to_prefix(&self, len: u64) -> Result<BairePrefix> {
        let mut out = BairePrefix::new();
        if len == 0 {
            return Ok(out);
        }
        out.pad_to(&(pair_u64(2, len - 1) + 1u32));
        for (i, row) in [&self.x0, &self.x1, &self.x2].into_iter().enumerate() {
            for n in 0..len {
                out.set(pair_u64(i as u64, n), row.at(n)?);
            }
        }
        Ok(out)
    }
}

/// Matrix rows `0..rows` are triple parameters, each `n_max + 1` columns wide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EParam {
    pub prefix: BairePrefix,
    pub rows: u64,
    pub n_max: u64,
}

fn small(v: Natural) -> Result<u64> {
    v.to_u64().ok_or(Error::IndexOutOfRange)
}

/// `B^{x0(n)+n}_{x1(n), x2(n)}`, with the level lifted to `max(x1(n), x0(n)+n)`.
pub fn e_term(p: &ETripleParam, n: u64) -> Result<Clopen> {
    let x0 = p.x0.at(n)?;
    let x1 = p.x1.at(n)?;
    let x2 = p.x2.at(n)?;
    let m = check_level(small(x0)?.saturating_add(n))?;
    let level = check_level(small(x1)?.max(u64::from(m)))?;
    let width = 1u64 << level;
    let t = width - (1u64 << (level - m));
    let l = x2 % binomial(width, t);
    let mut mask = Mask::zeros(width as usize);
    for k in kcomb_unrank(width, t, &l)? {
        mask.set(k as usize, true);
    }
    Ok(Clopen::from_mask(level, mask))
}

/// `⋃_{n ≤ n_max}` of the terms.
pub fn e_open_stage(p: &ETripleParam, n_max: u64) -> Result<Clopen> {
    let mut acc = Clopen::empty();
    for n in 0..=n_max {
        acc = acc.union(&e_term(p, n)?);
    }
    Ok(acc)
}

/// Indices of level-`n` cylinders contained in `v`.
fn inside_at(v: &Clopen, n: u32) -> Vec<u64> {
    let lv = v.level();
    if n >= lv {
        v.lift(n).iter_ones().map(|i| i as u64).collect()
    } else {
        let shift = lv - n;
        (0..1usize << n)
            .filter(|&i| v.mask().all_in(i << shift, (i + 1) << shift))
            .map(|i| i as u64)
            .collect()
    }
}

/// Encodes a clopen truncation `V` of a full-measure open set so that every term
/// up to `m_max` lies inside `V`.
///
/// The term at `m` is asked for measure `1 − 2^-(m+1)` (`x0(m) = 1`), so the
/// stage at `m_max` already exceeds `1 − 2^-m_max`.
pub fn e_open_encode(v: &Clopen, m_max: u64) -> Result<ETripleParam> {
    let mut p = ETripleParam {
        x0: BairePrefix::zeros(m_max + 1),
        x1: BairePrefix::zeros(m_max + 1),
        x2: BairePrefix::zeros(m_max + 1),
    };
    for m in 0..=m_max {
        let target = check_level(m + 1).map_err(|_| Error::InsufficientResolution { m })?;
        let top = v.level().max(target);
        let mut found = None;
        for n in target..=top {
            let inside = inside_at(v, n);
            let t = (1usize << n) - (1usize << (n - target));
            if inside.len() >= t {
                found = Some((n, kcomb_rank(1u64 << n, &inside[..t])?));
                break;
            }
        }
        let (n, rank) = found.ok_or(Error::InsufficientResolution { m })?;
        p.x0.set(Natural::from(m), Natural::from(1u32));
        p.x1.set(Natural::from(m), Natural::from(n));
        p.x2.set(Natural::from(m), rank);
    }
    Ok(p)
}

/// Packs one triple per set into a matrix parameter.
pub fn e_encode(sets: &[Clopen], m_max: u64) -> Result<EParam> {
    let mut prefix = BairePrefix::new();
    for (r, v) in sets.iter().enumerate() {
        let row = e_open_encode(v, m_max)?.to_prefix(m_max + 1)?;
        let width = row_width(m_max);
        for j in 0..width {
            prefix.set(pair_u64(r as u64, j), row.at(j)?);
        }
    }
    Ok(EParam {
        prefix,
        rows: sets.len() as u64,
        n_max: m_max,
    })
}

fn row_width(n_max: u64) -> u64 {
    // cells 0..=pair(2, n_max) hold the triple
    (pair_u64(2, n_max) + 1u32).to_u64().unwrap_or(u64::MAX)
}

/// Row `r` of an `E` parameter as a triple.
pub fn e_row(p: &EParam, r: u64) -> Result<ETripleParam> {
    let mut inner = BairePrefix::new();
    for j in 0..row_width(p.n_max) {
        inner.push(p.prefix.get(&pair_u64(r, j))?);
    }
    Ok(ETripleParam::from_prefix(&inner))
}

/// Stage membership of `z` in the `F_σ` section (the complement of the
/// intersection of the row open sets).
///
/// Holds when `[z]` misses some row's union at the declared stage; Fails when
/// `[z]` lies inside every row's union at `n_max`.
pub fn e_fsigma_member(p: &EParam, z: &BitPrefix, rows: u64, n_max: u64) -> Result<Tri> {
    if n_max > p.n_max {
        return Err(Error::insufficient(
            pair_u64(rows.max(1) - 1, row_width(n_max) - 1) + 1u32,
        ));
    }
    let mut inside_all = true;
    for r in 0..rows {
        let row = e_row(p, r)?;
        if !e_open_stage(&row, p.n_max)?.meets_cylinder(z) {
            return Ok(Tri::HoldsAtStage);
        }
        if inside_all {
            inside_all = e_open_stage(&row, n_max)?.contains_cylinder(z);
        }
    }
    Ok(if inside_all {
        Tri::FailsAtStage
    } else {
        Tri::InsufficientData
    })
}
