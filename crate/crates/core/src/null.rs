//! Null subsets of `2^ω`: `G_f = ⋂_n ⋃_{k>n} C^n_{h(f)(n,k)}`.
//!
//! Read literally, an adversarial `f` can make `⋃_{k>n}` as large as it likes,
//! so every inner union is passed through a measure guard: scanning `k` upward,
//! a candidate is kept only while the running total of kept measures stays
//! below `2^-n`; an overflowing candidate is replaced by `∅`. Every section is
//! then null, and the encoder's output is never touched by the guard.

use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::enumeration::{clopen_enum, clopen_rank};
use crate::space::{pair_u64, BairePrefix, BitPrefix, Clopen, Dyadic, Natural, Tri};
use crate::{Error, Result};

/// Covers `V^n_k` of one set, one list per `n`, with `Σ_k λ(V^n_k) < 2^-n-1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoverFamily {
    pub covers: Vec<Vec<Clopen>>,
}

impl CoverFamily {
    pub fn new(covers: Vec<Vec<Clopen>>) -> Self {
        CoverFamily { covers }
    }

    pub fn validate(&self) -> Result<()> {
        for (n, cover) in self.covers.iter().enumerate() {
            let total: Dyadic = cover.iter().map(Clopen::measure).sum();
            if total >= Dyadic::pow2_neg(n as u32 + 1) {
                return Err(Error::InvariantViolated(alloc::format!(
                    "cover {n} has total measure {total}, not below 2^-{}",
                    n + 1
                )));
            }
        }
        Ok(())
    }

    /// Points (as cylinders) covered by every cover in the family.
    pub fn common_cover(&self) -> Clopen {
        self.covers
            .iter()
            .map(|c| c.iter().fold(Clopen::empty(), |acc, v| acc.union(v)))
            .fold(Clopen::whole(), |acc, u| acc.intersect(&u))
    }
}

/// Parameter `f` together with stage witnesses `K_n` for `n < witness.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullParam {
    pub prefix: BairePrefix,
    pub witness: Vec<u64>,
}

/// Result of scanning one guarded inner union.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GuardScan {
    /// Union of the kept terms.
    pub stage: Clopen,
    /// Sum of the kept measures; always below `2^-n`.
    pub spent: Dyadic,
    /// The guarded term at the last scanned `k`.
    pub last_term: Clopen,
    /// Nonempty candidates replaced by `∅`.
    pub rejected: usize,
}

/// Scans `k = n+1 ..= upto` through the guard.
pub fn guard_scan(f: &BairePrefix, n: u64, upto: u64) -> Result<GuardScan> {
    guard_scan_each(f, n, upto, |_, _| {})
}

/// [`guard_scan`], calling `visit(k, state)` after each `k`.
pub fn guard_scan_each(
    f: &BairePrefix,
    n: u64,
    upto: u64,
    mut visit: impl FnMut(u64, &GuardScan),
) -> Result<GuardScan> {
    let budget = Dyadic::pow2_neg(row_exp(n)?);
    let mut scan = GuardScan {
        stage: Clopen::empty(),
        spent: Dyadic::zero(),
        last_term: Clopen::empty(),
        rejected: 0,
    };
    for k in n + 1..=upto {
        let code = f.get(&pair_u64(n, k))?;
        let candidate = clopen_enum(row_exp(n)?, &code)?;
        let after = scan.spent.add(&candidate.measure());
        if after < budget {
            scan.spent = after;
            scan.stage = scan.stage.union(&candidate);
            scan.last_term = candidate;
        } else {
            scan.rejected += 1;
            scan.last_term = Clopen::empty();
        }
        visit(k, &scan);
    }
    Ok(scan)
}

fn row_exp(n: u64) -> Result<u32> {
    u32::try_from(n).map_err(|_| Error::IndexOutOfRange)
}

/// The guarded `k`-th term of the `n`-th inner union (`k > n`).
pub fn null_term(f: &BairePrefix, n: u64, k: u64) -> Result<Clopen> {
    if k <= n {
        return Err(Error::IndexOutOfRange);
    }
    Ok(guard_scan(f, n, k)?.last_term)
}

/// `⋃_{n<k≤K}` of the guarded terms; measure always `< 2^-n`.
pub fn null_stage(f: &BairePrefix, n: u64, upto: u64) -> Result<Clopen> {
    Ok(guard_scan(f, n, upto)?.stage)
}

/// Stage membership of the cylinder `[z]` in `G_f`.
///
/// Holds when `[z]` lies inside the guarded union at `K_n` for every witnessed
/// `n`. Fails when, for some `n ≤ N`, `[z]` misses that union and the unspent
/// budget is at most `λ([z])`: any later term is smaller than `[z]`, so `[z]`
/// can never be covered. `N` only widens the search for refutations.
pub fn null_member(f: &NullParam, z: &BitPrefix, big_n: u64) -> Result<Tri> {
    if (big_n as usize) >= f.witness.len() {
        return Err(Error::IndexOutOfRange);
    }
    let cyl = Dyadic::pow2_neg(z.len() as u32);
    let mut covered_everywhere = true;
    for (n, &k) in f.witness.iter().enumerate() {
        let n = n as u64;
        let scan = guard_scan(&f.prefix, n, k)?;
        if scan.stage.contains_cylinder(z) {
            continue;
        }
        covered_everywhere = false;
        if n <= big_n && !scan.stage.meets_cylinder(z) {
            let left = Dyadic::pow2_neg(row_exp(n)?)
                .checked_sub(&scan.spent)
                .unwrap_or_else(Dyadic::zero);
            if left <= cyl {
                return Ok(Tri::FailsAtStage);
            }
        }
    }
    Ok(if covered_everywhere {
        Tri::HoldsAtStage
    } else {
        Tri::InsufficientData
    })
}

/// Encoder output with the intermediate sequences exposed for auditing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NullEncoding {
    pub param: NullParam,
    /// The flattened sequence `W_0, W_1, …`.
    pub flat: Vec<Clopen>,
    /// Cut points `a_0 = 0 < a_1 < …`, up to the first one past the sequence.
    pub cuts: Vec<usize>,
}

impl NullEncoding {
    /// `Σ_{k ≥ a_{n+1}} λ(W_k)`.
    pub fn tail_measure(&self, n: usize) -> Dyadic {
        let from = self.cuts.get(n + 1).copied().unwrap_or(self.flat.len());
        self.flat.iter().skip(from).map(Clopen::measure).sum()
    }

    /// Blocks `W̄_m = ⋃_{a_m ≤ j < a_{m+1}} W_j`.
    pub fn blocks(&self) -> Vec<Clopen> {
        self.cuts
            .windows(2)
            .map(|w| {
                self.flat[w[0].min(self.flat.len())..w[1].min(self.flat.len())]
                    .iter()
                    .fold(Clopen::empty(), |acc, c| acc.union(c))
            })
            .collect()
    }
}

/// Diagonal flattening: ascending `n + k`, then ascending `n`.
fn flatten(family: &CoverFamily) -> Vec<Clopen> {
    let longest = family.covers.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = Vec::new();
    for s in 0..family.covers.len() + longest {
        for (n, cover) in family.covers.iter().enumerate().take(s + 1) {
            if let Some(v) = cover.get(s - n) {
                out.push(v.clone());
            }
        }
    }
    out
}

/// `a_0 = 0`, `a_m = min{k > a_{m-1} : Σ_{j>k} λ(W_j) < 2^-m} + 1`, computed
/// until both `m > min_m` and `a_m` is past the end of the sequence.
fn cut_points(flat: &[Clopen], min_m: usize) -> Vec<usize> {
    // tails[k] = Σ_{j>k} λ(W_j); zero from the last index on
    let mut tails = alloc::vec![Dyadic::zero(); flat.len() + 1];
    for k in (0..flat.len().saturating_sub(1)).rev() {
        tails[k] = tails[k + 1].add(&flat[k + 1].measure());
    }
    let tail = |k: usize| tails.get(k).cloned().unwrap_or_else(Dyadic::zero);
    let mut cuts = alloc::vec![0usize];
    let mut m = 1u32;
    while cuts.len() <= min_m || *cuts.last().unwrap_or(&0) < flat.len() {
        let bound = Dyadic::pow2_neg(m);
        let prev = *cuts.last().unwrap_or(&0);
        let mut k = prev + 1;
        while tail(k) >= bound {
            k += 1;
        }
        cuts.push(k + 1);
        m += 1;
    }
    cuts
}

/// Builds `f` with `X ⊆ G_f` at every witnessed stage.
///
/// The family is finite, so after the diagonal flattening the encoder appends
/// `∅` padding and one more copy of the last cover: the tail `⋃_{k ≥ a_{n+1}}
/// W_k` then contains a full cover for every `n` up to the family's length.
pub fn null_encode(family: &CoverFamily) -> Result<NullEncoding> {
    family.validate()?;
    let rows = family.covers.len();
    let mut flat = flatten(family);
    if let Some(last) = family.covers.last() {
        let pad_start = flat.len();
        // a_{n+1} ≤ pad_start + 2(n+1), so this much padding keeps the copy in every tail
        let padding = 2 * (rows + 1);
        flat.extend(core::iter::repeat_n(Clopen::empty(), padding));
        let copy_start = flat.len();
        flat.extend(last.iter().cloned());
        let cuts = cut_points(&flat, rows);
        if cuts[rows] > copy_start {
            return Err(Error::InvariantViolated(alloc::format!(
                "cut a_{rows} = {} passed the final cover at {copy_start} (padding from {pad_start})",
                cuts[rows]
            )));
        }
    }
    let cuts = cut_points(&flat, rows);
    if rows == 0 {
        // G_f = ∅; one witnessed row keeps the evaluator callable
        return Ok(NullEncoding {
            param: NullParam {
                prefix: BairePrefix::zeros(pair_u64(0, 1) + 1u32),
                witness: alloc::vec![1],
            },
            flat,
            cuts,
        });
    }
    let last_nonempty = flat.iter().rposition(|c| !c.is_empty());
    let mut prefix = BairePrefix::new();
    let mut witness = Vec::with_capacity(rows);
    for n in 0..rows {
        let big_k = last_nonempty.map_or(0, |i| i as u64 + 1).max(n as u64 + 1);
        witness.push(big_k);
        let start = cuts[n + 1];
        for k in 0..=big_k {
            let ku = k.to_usize().ok_or(Error::IndexOutOfRange)?;
            let code = match flat.get(ku) {
                Some(w) if ku >= start => clopen_rank(n as u32, w)?,
                _ => Natural::default(),
            };
            prefix.set(pair_u64(n as u64, k), code);
        }
    }
    Ok(NullEncoding {
        param: NullParam { prefix, witness },
        flat,
        cuts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::BitWord;
    use alloc::vec;

    fn w(s: &str) -> BitWord {
        BitWord::parse(s).unwrap()
    }

    fn cyl(s: &str) -> Clopen {
        Clopen::cylinder(&w(s)).unwrap()
    }

    fn zeros_to(s: usize) -> alloc::string::String {
        "0".repeat(s)
    }

    #[test]
    fn zero_parameter_has_empty_terms() {
        let f = BairePrefix::zeros(200u32);
        for n in 0..5 {
            for k in n + 1..10 {
                assert!(null_term(&f, n, k).unwrap().is_empty());
            }
            assert!(null_stage(&f, n, 10).unwrap().is_empty());
        }
    }

    #[test]
    fn guard_drops_overflowing_candidates() {
        // row 1 (budget 1/2): candidates [00], [01], [10] each 1/4
        let mut f = BairePrefix::zeros(64u32);
        let r00 = clopen_rank(1, &cyl("00")).unwrap();
        let r01 = clopen_rank(1, &cyl("01")).unwrap();
        let r10 = clopen_rank(1, &cyl("10")).unwrap();
        f.set(pair_u64(1, 2), r00);
        f.set(pair_u64(1, 3), r01);
        f.set(pair_u64(1, 4), r10.clone());
        assert_eq!(null_term(&f, 1, 2).unwrap(), cyl("00"));
        // 1/4 + 1/4 = 1/2 is not below 1/2
        assert!(null_term(&f, 1, 3).unwrap().is_empty());
        assert!(null_term(&f, 1, 4).unwrap().is_empty());
        let scan = guard_scan(&f, 1, 4).unwrap();
        assert_eq!(scan.rejected, 2);
        assert_eq!(scan.stage, cyl("00"));
        assert!(scan.stage.measure() < Dyadic::pow2_neg(1));
        // with a smaller first candidate the later one fits
        f.set(pair_u64(1, 2), clopen_rank(1, &cyl("000")).unwrap());
        f.set(pair_u64(1, 3), r10);
        let scan = guard_scan(&f, 1, 3).unwrap();
        assert_eq!(scan.rejected, 0);
        assert_eq!(scan.spent, Dyadic::new(3u32, 3));
    }

    #[test]
    fn zero_parameter_membership_is_undecided() {
        let f = NullParam {
            prefix: BairePrefix::zeros(100u32),
            witness: vec![2, 3],
        };
        assert_eq!(null_member(&f, &w("01"), 1).unwrap(), Tri::InsufficientData);
        assert_eq!(
            null_member(&f, &w("0110"), 1).unwrap(),
            Tri::InsufficientData
        );
        // the whole space can never sit inside a set of measure < 1/2
        assert_eq!(null_member(&f, &w(""), 1).unwrap(), Tri::FailsAtStage);
        assert!(null_member(&f, &w("0"), 2).is_err());
    }

    #[test]
    fn empty_family() {
        let enc = null_encode(&CoverFamily::default()).unwrap();
        assert!(enc.param.prefix.nonzero().next().is_none());
        assert_eq!(enc.param.witness, vec![1]);
        assert!(null_stage(&enc.param.prefix, 0, 1).unwrap().is_empty());
        assert_eq!(
            null_member(&enc.param, &w("0"), 0).unwrap(),
            Tri::InsufficientData
        );
    }

    fn point_family(rows: usize) -> CoverFamily {
        CoverFamily::new((0..rows).map(|n| vec![cyl(&zeros_to(n + 2))]).collect())
    }

    #[test]
    fn single_point_round_trip() {
        let fam = point_family(7);
        let enc = null_encode(&fam).unwrap();
        let zero = w(&zeros_to(10));
        for big_n in 0..=6 {
            assert_eq!(
                null_member(&enc.param, &zero, big_n).unwrap(),
                Tri::HoldsAtStage
            );
        }
        for n in 0..7 {
            assert!(enc.tail_measure(n) < Dyadic::pow2_neg(n as u32 + 1));
            let k = enc.param.witness[n];
            assert_eq!(
                guard_scan(&enc.param.prefix, n as u64, k).unwrap().rejected,
                0
            );
        }
        for (m, b) in enc.blocks().iter().enumerate() {
            assert!(b.measure() < Dyadic::pow2_neg(m as u32));
        }
        // a point away from 0^ω is refuted once the budget is too small
        let far = w("1");
        assert_ne!(null_member(&enc.param, &far, 6).unwrap(), Tri::HoldsAtStage);
    }

    #[test]
    fn cut_points_follow_the_tail_formula() {
        let flat: Vec<Clopen> = (0..7).map(|j| cyl(&zeros_to(j + 2))).collect();
        let cuts = cut_points(&flat, 3);
        assert_eq!(&cuts[..4], &[0, 2, 4, 6]);
    }

    #[test]
    fn invalid_family_is_rejected() {
        let fam = CoverFamily::new(vec![vec![cyl("0")]]);
        assert!(matches!(
            null_encode(&fam),
            Err(Error::InvariantViolated(_))
        ));
    }
}
