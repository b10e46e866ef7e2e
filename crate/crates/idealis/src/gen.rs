//! Seeded generators for the property suites.

use idealis_core::null::CoverFamily;
use idealis_core::space::Mask;
use idealis_core::{BairePrefix, BitWord, Clopen, Dyadic, Natural};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Gen = ChaCha8Rng;

pub fn rng(seed: u64) -> Gen {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derives an independent stream for a named suite.
pub fn rng_for(seed: u64, salt: &str) -> Gen {
    let h = salt.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3)
    });
    rng(seed ^ h)
}

/// A prefix of `len` entries, each below `bound`, with occasional huge values.
pub fn prefix(g: &mut Gen, len: usize, bound: u64) -> BairePrefix {
    let v: Vec<Natural> = (0..len)
        .map(|_| {
            if g.gen_ratio(1, 16) {
                Natural::from(g.gen::<u64>()) * Natural::from(g.gen::<u64>())
            } else {
                Natural::from(g.gen_range(0..bound.max(1)))
            }
        })
        .collect();
    BairePrefix::from_vec(v)
}

pub fn small_prefix(g: &mut Gen, len: usize, bound: u64) -> BairePrefix {
    BairePrefix::from_vec(
        (0..len)
            .map(|_| Natural::from(g.gen_range(0..bound.max(1))))
            .collect(),
    )
}

pub fn word(g: &mut Gen, len: usize) -> BitWord {
    BitWord::from_index(len as u32, g.gen_range(0..1usize << len))
}

/// Uniformly random subset of the level-`level` cylinders.
pub fn clopen(g: &mut Gen, level: u32) -> Clopen {
    let mut m = Mask::zeros(1 << level);
    for i in 0..1usize << level {
        m.set(i, g.gen_bool(0.5));
    }
    Clopen::from_mask(level, m)
}

/// A clopen set at `level` meeting every cylinder of level `dense_to`.
pub fn dense_clopen(g: &mut Gen, level: u32, dense_to: u32) -> Clopen {
    let mut m = Mask::zeros(1 << level);
    let block = 1usize << (level - dense_to);
    for b in 0..1usize << dense_to {
        m.set(b * block + g.gen_range(0..block), true);
    }
    for i in 0..1usize << level {
        if g.gen_ratio(1, 4) {
            m.set(i, true);
        }
    }
    Clopen::from_mask(level, m)
}

/// A clopen set at `level` whose complement has at most `2^(level - m - 1)`
/// cylinders, so the `E` encoder succeeds up to `m`.
pub fn full_measure_truncation(g: &mut Gen, level: u32, m: u32) -> Clopen {
    let holes = g.gen_range(0..=1usize << (level - m - 1));
    let mut idx: Vec<usize> = (0..1usize << level).collect();
    idx.shuffle(g);
    let mut mask = Mask::ones(1 << level);
    for &i in &idx[..holes] {
        mask.set(i, false);
    }
    Clopen::from_mask(level, mask)
}

/// Covers for rows `0..=big_n`, each at most 8 cylinders of level at most 10,
/// every one of them also covering the planted `point` (length 10).
pub fn cover_family(g: &mut Gen, big_n: usize, point: &BitWord) -> CoverFamily {
    let mut covers = Vec::with_capacity(big_n + 1);
    for n in 0..=big_n {
        let bound = Dyadic::pow2_neg(n as u32 + 1);
        let lo = (n as u32 + 2).min(10);
        let mut cover = Vec::new();
        let first_level = g.gen_range(lo..=10);
        let stem = point.truncate(first_level as usize);
        cover.push(Clopen::cylinder(&stem).expect("level at most 10"));
        let mut total = cover[0].measure();
        let extra = g.gen_range(0..8);
        for _ in 0..extra {
            let level = g.gen_range(lo..=10);
            let c = Clopen::cylinder(&word(g, level as usize)).expect("level at most 10");
            let after = total.add(&c.measure());
            if after < bound {
                total = after;
                cover.push(c);
            }
        }
        cover.shuffle(g);
        covers.push(cover);
    }
    CoverFamily::new(covers)
}

/// A finite map from sequences (length at most `d`, entries below `b`) to values below `vmax`.
pub fn phi(g: &mut Gen, d: usize, b: u64, vmax: u64) -> Vec<(Vec<Natural>, Natural)> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<Natural>> = vec![Vec::new()];
    for _ in 0..=d {
        let mut next = Vec::new();
        for s in frontier {
            if g.gen_ratio(3, 4) {
                out.push((s.clone(), Natural::from(g.gen_range(0..vmax))));
            }
            if s.len() < d {
                for a in 0..b {
                    let mut t = s.clone();
                    t.push(Natural::from(a));
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    out
}
