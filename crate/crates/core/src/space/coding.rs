use alloc::vec::Vec;

use num_traits::Zero;

use super::{BairePrefix, Natural};
use crate::Result;

/// Cantor pairing `(m+n)(m+n+1)/2 + n`.
pub fn pair(m: &Natural, n: &Natural) -> Natural {
    let s = m + n;
    ((&s * (&s + 1u32)) >> 1) + n
}

pub fn pair_u64(m: u64, n: u64) -> Natural {
    pair(&Natural::from(m), &Natural::from(n))
}

/// Inverse of [`pair`].
pub fn unpair(k: &Natural) -> (Natural, Natural) {
    // w = floor((sqrt(8k+1) - 1) / 2) is the diagonal holding k
    let w = ((k * 8u32 + 1u32).sqrt() - 1u32) >> 1;
    let t = (&w * (&w + 1u32)) >> 1;
    let n = k - t;
    let m = w - &n;
    (m, n)
}

/// Sequence code: `⟨⟩ ↦ 0`, `s⌢a ↦ pair(code(s), a) + 1`.
pub fn seq_code(s: &[Natural]) -> Natural {
    s.iter()
        .fold(Natural::zero(), |acc, a| pair(&acc, a) + 1u32)
}

/// Inverse of [`seq_code`].
pub fn seq_decode(k: &Natural) -> Vec<Natural> {
    let mut out = Vec::new();
    let mut k = k.clone();
    while !k.is_zero() {
        let (rest, last) = unpair(&(k - 1u32));
        out.push(last);
        k = rest;
    }
    out.reverse();
    out
}

/// Entry `(n, k)` of the matrix view of `f`, i.e. `f(pair(n, k))`.
pub fn matrix_entry(f: &BairePrefix, n: &Natural, k: &Natural) -> Result<Natural> {
    f.get(&pair(n, k))
}
