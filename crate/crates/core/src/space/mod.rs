//! Cantor-space cylinder algebra, Baire-space prefixes, exact dyadic measure and
//! the coding bijections shared by every construction.

mod clopen;
mod coding;
mod dyadic;
mod mask;
mod prefix;
mod tri;
mod word;

use core::sync::atomic::{AtomicU32, Ordering};

pub use clopen::Clopen;
pub use coding::{matrix_entry, pair, pair_u64, seq_code, seq_decode, unpair};
pub use dyadic::Dyadic;
pub use mask::Mask;
pub use prefix::BairePrefix;
pub use tri::Tri;
pub use word::BitWord;

/// Unbounded natural number; parameters and codes routinely exceed 64 bits.
pub type Natural = num_bigint::BigUint;

/// A finite initial segment of a point of `2^ω`.
pub type BitPrefix = BitWord;

/// Largest level any clopen set may be lifted to (a level-24 set is a 2 MiB mask).
pub const HARD_MAX_LEVEL: u32 = 24;

static LEVEL_CAP: AtomicU32 = AtomicU32::new(HARD_MAX_LEVEL);

/// Lowers (or restores) the working level cap. Values above [`HARD_MAX_LEVEL`] are clamped.
pub fn set_level_cap(cap: u32) {
    LEVEL_CAP.store(cap.min(HARD_MAX_LEVEL), Ordering::Relaxed);
}

pub fn level_cap() -> u32 {
    LEVEL_CAP.load(Ordering::Relaxed)
}

pub(crate) fn check_level(level: u64) -> crate::Result<u32> {
    let cap = level_cap();
    if level > u64::from(cap) {
        Err(crate::Error::LevelTooLarge { level, cap })
    } else {
        Ok(level as u32)
    }
}
