//! Ideals on `ω^ω`: `K_σ` through eventual domination `≤*`, and the Laver
//! ideal through a coded function `Φ : ω^{<ω} → ω`.

use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::space::{seq_code, seq_decode, BairePrefix, Natural};
use crate::{Error, Result};

/// The dominating function `y` of a `K_σ` section `{x : x ≤* y}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KsigmaParam {
    pub bound: BairePrefix,
}

/// `Φ(s) = prefix(seq_code(s))`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaverParam {
    pub prefix: BairePrefix,
}

fn common_len(a: &BairePrefix, b: &BairePrefix) -> Result<u64> {
    a.len().min(b.len()).to_u64().ok_or(Error::IndexOutOfRange)
}

/// `x(m) ≤ y(m)` for every `n < m < L`, `L` the common length.
pub fn dominated_from(y: &KsigmaParam, x: &BairePrefix, n: u64) -> Result<bool> {
    let len = common_len(&y.bound, x)?;
    if len <= n.saturating_add(1) {
        return Err(Error::insufficient(n + 2));
    }
    for m in n + 1..len {
        if x.at(m)? > y.bound.at(m)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pointwise maximum of the points.
pub fn ksigma_encode(points: &[BairePrefix]) -> Result<KsigmaParam> {
    let Some(first) = points.first() else {
        return Ok(KsigmaParam::default());
    };
    let len = first.len().clone();
    if let Some(p) = points.iter().find(|p| p.len() != &len) {
        return Err(Error::LengthMismatch {
            left: len.to_usize().unwrap_or(usize::MAX),
            right: p.len().to_usize().unwrap_or(usize::MAX),
        });
    }
    let mut bound = BairePrefix::zeros(len);
    for p in points {
        for (i, v) in p.nonzero() {
            if v > &bound.get(i)? {
                bound.set(i.clone(), v.clone());
            }
        }
    }
    Ok(KsigmaParam { bound })
}

/// `y + 1`, which is not dominated by `y` from any `n < L − 1`.
pub fn ksigma_diagonal(y: &KsigmaParam) -> Result<BairePrefix> {
    let len = y.bound.len_usize().ok_or(Error::IndexOutOfRange)?;
    let vals = y.bound.to_vec(len)?;
    Ok(BairePrefix::from_vec(
        vals.into_iter().map(|v| v + 1u32).collect(),
    ))
}

/// Lays out `Φ` so that `prefix(seq_code(s)) = Φ(s)` on the given domain and 0
/// elsewhere below the largest code.
pub fn laver_encode(phi: &[(Vec<Natural>, Natural)]) -> LaverParam {
    let mut prefix = BairePrefix::new();
    for (s, v) in phi {
        let code = seq_code(s);
        prefix.pad_to(&(&code + 1u32));
        prefix.set(code, v.clone());
    }
    LaverParam { prefix }
}

/// `Φ(s)`; errors when `seq_code(s)` lies past the prefix.
pub fn laver_phi(p: &LaverParam, s: &[Natural]) -> Result<Natural> {
    p.prefix.get(&seq_code(s))
}

/// The encoded domain: every code with a nonzero value, decoded.
pub fn laver_decode(p: &LaverParam) -> Vec<(Vec<Natural>, Natural)> {
    p.prefix
        .nonzero()
        .map(|(i, v)| (seq_decode(i), v.clone()))
        .collect()
}

/// `|{n ∈ [n0, n1) : f(n) < Φ(f|n)}|`.
pub fn laver_witnesses(p: &LaverParam, f: &BairePrefix, n0: u64, n1: u64) -> Result<u64> {
    if n1 > 0 && !f.has(&Natural::from(n1 - 1)) {
        return Err(Error::insufficient(n1));
    }
    let vals = f.to_vec(n1 as usize)?;
    let mut code = seq_code(&vals[..n0.min(n1) as usize]);
    let mut count = 0;
    for n in n0..n1 {
        let fn_ = &vals[n as usize];
        if fn_ < &p.prefix.get(&code)? {
            count += 1;
        }
        code = crate::space::pair(&code, fn_) + 1u32;
    }
    Ok(count)
}
