//! Seeded property suites behind `idealis check`.
//!
//! Every suite draws from its own stream derived from the seed and the suite
//! name, so a suite's report does not depend on which other suites ran.
//! Suites run on separate threads; the report is sorted before printing.

use std::collections::BTreeMap;
use std::thread;

use idealis_core::baire::{
    dominated_from, ksigma_diagonal, ksigma_encode, laver_encode, laver_witnesses, KsigmaParam,
};
use idealis_core::countable::{countable_encode, countable_member, CountableParam};
use idealis_core::e_ideal::{
    e_fsigma_member, e_open_encode, e_open_stage, e_term, EParam, ETripleParam,
};
use idealis_core::enumeration::{
    cantor_cylinder, clopen_enum, clopen_rank, kcomb_rank, kcomb_unrank, level_count,
};
use idealis_core::fubini::{product_member, ProductParam, Stages};
use idealis_core::meager::{
    dense_open_encode, dense_section_stage, dense_term, fxp_eval, meager_eval, partition_from,
    DenseOpenParam, MeagerParam,
};
use idealis_core::null::{guard_scan, null_encode, null_member, NullParam};
use idealis_core::space::Mask;
use idealis_core::{pair, BairePrefix, BitWord, Clopen, Dyadic, Natural, Tri};
use rand::Rng;
use serde_json::{json, Value};

use crate::gen::{self, Gen};
use crate::CliError;

pub const SUITES: &[&str] = &[
    "e-fullness",
    "enum-bijection",
    "fubini-table",
    "fxp-oracle",
    "kcomb",
    "ksigma-diagonal",
    "laver-oracle",
    "meager-density",
    "null-encoder",
    "null-guard",
    "tri-monotone",
];

/// Outcome of one property.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub cases: u64,
    pub failures: u64,
    /// First failing case, if any.
    pub example: Option<String>,
}

#[derive(Default)]
struct Props(BTreeMap<String, Outcome>);

impl Props {
    fn check(&mut self, name: &str, ok: bool, case: impl FnOnce() -> String) {
        let o = self.0.entry(name.to_string()).or_default();
        o.cases += 1;
        if !ok {
            o.failures += 1;
            if o.example.is_none() {
                o.example = Some(case());
            }
        }
    }

    /// Records an unexpected error as a failure.
    fn check_res<T>(
        &mut self,
        name: &str,
        r: idealis_core::Result<T>,
        ok: impl FnOnce(T) -> bool,
        case: impl Fn() -> String,
    ) {
        match r {
            Ok(v) => {
                let passed = ok(v);
                self.check(name, passed, case)
            }
            Err(e) => self.check(name, false, || format!("{}: {e}", case())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub seed: u64,
    pub suite: String,
    /// `suite/property` to outcome.
    pub properties: BTreeMap<String, Outcome>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.properties.values().all(|o| o.failures == 0)
    }

    pub fn to_json(&self) -> Value {
        let props: serde_json::Map<String, Value> = self
            .properties
            .iter()
            .map(|(k, o)| {
                let mut v = json!({ "cases": o.cases, "failures": o.failures });
                if let Some(ex) = &o.example {
                    v["example"] = json!(ex);
                }
                (k.clone(), v)
            })
            .collect();
        json!({
            "seed": self.seed,
            "suite": self.suite,
            "properties": props,
            "passed": self.passed(),
        })
    }
}

fn suite_fn(name: &str) -> Option<fn(&mut Gen, &mut Props)> {
    Some(match name {
        "e-fullness" => e_fullness,
        "enum-bijection" => enum_bijection,
        "fubini-table" => fubini_table,
        "fxp-oracle" => fxp_oracle,
        "kcomb" => kcomb,
        "ksigma-diagonal" => ksigma,
        "laver-oracle" => laver,
        "meager-density" => meager_density,
        "null-encoder" => null_encoder,
        "null-guard" => null_guard,
        "tri-monotone" => tri_monotone,
        _ => return None,
    })
}

/// Runs one suite, or every suite for `"all"`.
pub fn run(suite: &str, seed: u64) -> Result<Report, CliError> {
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![suite]
    } else {
        return Err(CliError::UnknownSuite(suite.to_string()));
    };
    let results: Vec<(String, Props)> = thread::scope(|s| {
        let handles: Vec<_> = names
            .iter()
            .map(|&name| {
                s.spawn(move || {
                    let mut g = gen::rng_for(seed, name);
                    let mut props = Props::default();
                    suite_fn(name).expect("listed suite")(&mut g, &mut props);
                    (name.to_string(), props)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite panicked"))
            .collect()
    });
    let mut properties = BTreeMap::new();
    for (name, props) in results {
        for (p, o) in props.0 {
            properties.insert(format!("{name}/{p}"), o);
        }
    }
    Ok(Report {
        seed,
        suite: suite.to_string(),
        properties,
    })
}

/// No `HoldsAtStage` and `FailsAtStage` in the same sequence.
pub fn never_flips(seq: &[Tri]) -> bool {
    !(seq.contains(&Tri::HoldsAtStage) && seq.contains(&Tri::FailsAtStage))
}

fn null_guard(g: &mut Gen, p: &mut Props) {
    let len = pair(&Natural::from(8u32), &Natural::from(64u32)) + 1u32;
    let len = usize::try_from(len).expect("small");
    for case in 0..200 {
        let f = gen::prefix(g, len, 1 << 20);
        for n in 0..=8u64 {
            let mut last = Clopen::empty();
            for k in [n + 1, 16, 32, 64] {
                let r = guard_scan(&f, n, k);
                let budget = Dyadic::pow2_neg(n as u32);
                p.check_res(
                    "stage-measure-below-budget",
                    r,
                    |s| {
                        let ok = s.stage.measure() < budget && last.is_subset(&s.stage);
                        last = s.stage;
                        ok
                    },
                    || format!("case {case}, n={n}, K={k}"),
                );
            }
        }
    }
}

fn null_encoder(g: &mut Gen, p: &mut Props) {
    for case in 0..50 {
        let big_n = g.gen_range(0..=6usize);
        let point = gen::word(g, 10);
        let fam = gen::cover_family(g, big_n, &point);
        let enc = match null_encode(&fam) {
            Ok(e) => e,
            Err(e) => {
                p.check("encodes", false, || format!("case {case}: {e}"));
                continue;
            }
        };
        for n in 0..=big_n {
            p.check(
                "tail-bound",
                enc.tail_measure(n) < Dyadic::pow2_neg(n as u32 + 1),
                || format!("case {case}, n={n}"),
            );
            let k = enc.param.witness[n];
            p.check_res(
                "guard-is-identity",
                guard_scan(&enc.param.prefix, n as u64, k),
                |s| s.rejected == 0,
                || format!("case {case}, n={n}"),
            );
        }
        for (m, b) in enc.blocks().iter().enumerate() {
            p.check(
                "block-bound",
                b.measure() < Dyadic::pow2_neg(m as u32),
                || format!("case {case}, m={m}"),
            );
        }
        let common = fam.common_cover();
        for w in common.lift(10).iter_ones() {
            let z = BitWord::from_index(10, w);
            for nn in 0..=big_n as u64 {
                p.check_res(
                    "covered-points-hold",
                    null_member(&enc.param, &z, nn),
                    |t| t == Tri::HoldsAtStage,
                    || format!("case {case}, z={z}, N={nn}"),
                );
            }
        }
    }
}

fn enum_bijection(_: &mut Gen, p: &mut Props) {
    for n in 0..=3u32 {
        let mut expected = vec![Clopen::empty()];
        for level in n + 1..=4 {
            let width = 1usize << level;
            for bits in 0u64..1 << width {
                let mut m = Mask::zeros(width);
                for i in 0..width {
                    m.set(i, bits >> i & 1 == 1);
                }
                let c = Clopen::from_mask(level, m);
                if c.level() == level && c.measure() < Dyadic::pow2_neg(n) {
                    expected.push(c);
                }
            }
        }
        for (k, c) in expected.iter().enumerate() {
            p.check_res(
                "enum-matches-order",
                clopen_enum(n, &Natural::from(k)),
                |got| &got == c,
                || format!("n={n}, k={k}"),
            );
            p.check_res(
                "rank-inverts-enum",
                clopen_rank(n, c),
                |r| r == Natural::from(k),
                || format!("n={n}, {c}"),
            );
        }
        let counted: Natural = (n + 1..=4).map(|l| level_count(n, l)).sum::<Natural>() + 1u32;
        p.check(
            "level-counts",
            counted == Natural::from(expected.len()),
            || format!("n={n}"),
        );
    }
}

fn kcomb(_: &mut Gen, p: &mut Props) {
    for n in 0..=10u64 {
        for t in 0..=n {
            let total = idealis_core::enumeration::binomial(n, t);
            let total = u64::try_from(&total).expect("small");
            let mut prev: Option<Vec<u64>> = None;
            for r in 0..total {
                let r = Natural::from(r);
                p.check_res(
                    "rank-unrank",
                    kcomb_unrank(n, t, &r),
                    |s| {
                        let ok = kcomb_rank(n, &s).ok() == Some(r.clone())
                            && prev.as_ref().is_none_or(|q| q < &s);
                        prev = Some(s);
                        ok
                    },
                    || format!("n={n}, t={t}, r={r}"),
                );
            }
        }
    }
}

fn meager_density(g: &mut Gen, p: &mut Props) {
    for case in 0..100 {
        // entries below 2^8 keep every term within level 12
        let x = DenseOpenParam {
            prefix: gen::small_prefix(g, 11, 1 << 8),
        };
        p.check_res(
            "stage-meets-every-basic-open",
            dense_section_stage(&x, 10),
            |s| {
                (1..=10u64).all(|n| {
                    s.meets_cylinder(&cantor_cylinder(&Natural::from(n)).expect("small index"))
                })
            },
            || format!("case {case}"),
        );
    }
    for case in 0..100 {
        // arbitrary entries: terms too deep for a mask are checked as stems
        let x = DenseOpenParam {
            prefix: gen::prefix(g, 11, u64::MAX),
        };
        for n in 1..=10u64 {
            let u = cantor_cylinder(&Natural::from(n)).expect("small index");
            p.check_res(
                "term-is-nonempty-subset",
                dense_term(&x, n),
                |stem| u.is_prefix_of(&stem),
                || format!("case {case}, n={n}"),
            );
        }
    }
    for case in 0..50 {
        let level = g.gen_range(3..=8);
        let dense_to = g.gen_range(1..=level.min(4));
        let w = gen::dense_clopen(g, level, dense_to);
        let n_max = (1u64 << (dense_to + 1)) - 1;
        let r = dense_open_encode(&w, n_max).and_then(|x| dense_section_stage(&x, n_max));
        p.check_res(
            "encoder-subset",
            r,
            |s| s.is_subset(&w),
            || format!("case {case}, W={w}"),
        );
    }
}

/// Direct reading of `x|I_n ≠ z|I_n` for every complete block `n ≥ from`.
fn fxp_naive(x: &BitWord, widths: &[usize], z: &BitWord, from: usize) -> bool {
    let known = x.len().min(z.len());
    let mut a = 0;
    for (n, &w) in widths.iter().enumerate() {
        let b = a + w;
        if b > known {
            break;
        }
        if n >= from && (a..b).all(|i| x.get(i) == z.get(i)) {
            return false;
        }
        a = b;
    }
    true
}

fn fxp_oracle(g: &mut Gen, p: &mut Props) {
    for case in 0..2000 {
        let len = g.gen_range(0..=12usize);
        let ylen = g.gen_range(1..=3usize);
        let y = gen::small_prefix(g, ylen, 4);
        let part = partition_from(&y).expect("small widths");
        let widths: Vec<usize> = part.intervals().iter().map(|(a, b)| b - a).collect();
        let x = gen::word(g, len);
        let z = if g.gen_bool(0.3) {
            x.clone()
        } else {
            gen::word(g, len)
        };
        let from = g.gen_range(0..ylen);
        let first_end = part.intervals()[from].1;
        match fxp_eval(&x, &part, &z, from) {
            Ok(t) => p.check(
                "matches-direct-reading",
                first_end <= len && t == Tri::from(fxp_naive(&x, &widths, &z, from)),
                || format!("case {case}"),
            ),
            Err(_) => p.check("errors-only-when-short", first_end > len, || {
                format!("case {case}")
            }),
        }
    }
}

fn e_fullness(g: &mut Gen, p: &mut Props) {
    for case in 0..100 {
        let n_max = g.gen_range(0..=8u64);
        let len = n_max as usize + 1;
        let t = ETripleParam {
            x0: gen::small_prefix(g, len, 3),
            x1: gen::small_prefix(g, len, 10),
            x2: gen::prefix(g, len, 1 << 30),
        };
        p.check_res(
            "stage-measure",
            e_open_stage(&t, n_max),
            |s| s.measure() >= Dyadic::one_minus_pow2_neg(n_max as u32),
            || format!("case {case}, n_max={n_max}"),
        );
        for n in 0..=n_max {
            let m = (t.x0.at_u64(n).expect("small") + n) as u32;
            p.check_res(
                "term-measure",
                e_term(&t, n),
                |c| c.measure() == Dyadic::one_minus_pow2_neg(m),
                || format!("case {case}, n={n}"),
            );
        }
    }
    for case in 0..30 {
        let level = g.gen_range(4..=10u32);
        let m_max = g.gen_range(0..level - 1);
        let v = gen::full_measure_truncation(g, level, m_max);
        let r = e_open_encode(&v, m_max.into()).and_then(|t| e_open_stage(&t, m_max.into()));
        p.check_res(
            "encoder-subset",
            r,
            |s| s.is_subset(&v) && s.measure() >= Dyadic::one_minus_pow2_neg(m_max),
            || format!("case {case}, V={v}"),
        );
    }
}

fn ksigma(g: &mut Gen, p: &mut Props) {
    for case in 0..100 {
        let y = KsigmaParam {
            bound: gen::prefix(g, 12, 100),
        };
        let d = ksigma_diagonal(&y);
        p.check_res(
            "diagonal-escapes",
            d,
            |d| (0..11).all(|n| dominated_from(&y, &d, n) == Ok(false)),
            || format!("case {case}"),
        );
        let pts: Vec<BairePrefix> = (0..g.gen_range(1..6))
            .map(|_| gen::prefix(g, 12, 50))
            .collect();
        p.check_res(
            "encode-dominates",
            ksigma_encode(&pts),
            |b| pts.iter().all(|x| dominated_from(&b, x, 0) == Ok(true)),
            || format!("case {case}"),
        );
    }
}

fn laver(g: &mut Gen, p: &mut Props) {
    for case in 0..50 {
        let phi = gen::phi(g, 4, 3, 4);
        let lp = laver_encode(&phi);
        let lookup: BTreeMap<Vec<Natural>, Natural> = phi.iter().cloned().collect();
        for _ in 0..20 {
            let len = g.gen_range(0..=4usize);
            let f: Vec<u64> = (0..len).map(|_| g.gen_range(0..3)).collect();
            let direct = (0..len)
                .filter(|&n| {
                    let s: Vec<Natural> = f[..n].iter().map(|&v| Natural::from(v)).collect();
                    Natural::from(f[n]) < lookup.get(&s).cloned().unwrap_or_default()
                })
                .count() as u64;
            p.check_res(
                "witnesses-match-direct-count",
                laver_witnesses(&lp, &BairePrefix::from_u64s(&f), 0, len as u64),
                |c| c == direct,
                || format!("case {case}, f={f:?}"),
            );
        }
    }
}

fn fubini_table(_: &mut Gen, p: &mut Props) {
    for a in Tri::ALL {
        for b in Tri::ALL {
            let expect = match (a, b) {
                (Tri::HoldsAtStage, _) | (_, Tri::HoldsAtStage) => Tri::HoldsAtStage,
                (Tri::FailsAtStage, Tri::FailsAtStage) => Tri::FailsAtStage,
                _ => Tri::InsufficientData,
            };
            p.check("disjunction-table", a.or(b) == expect, || {
                format!("{a:?} or {b:?}")
            });
            for a2 in Tri::ALL.into_iter().filter(|&t| a.refines_to(t)) {
                for b2 in Tri::ALL.into_iter().filter(|&t| b.refines_to(t)) {
                    p.check(
                        "disjunction-monotone",
                        a.or(b).refines_to(a2.or(b2)),
                        || format!("{a:?},{b:?} -> {a2:?},{b2:?}"),
                    );
                }
            }
        }
    }
}

/// A random meager parameter with `rows` rows declared up to `n_max`.
pub fn random_meager(g: &mut Gen, rows: u64, n_max: u64) -> MeagerParam {
    let mut prefix = BairePrefix::new();
    for r in 0..rows {
        for n in 0..=n_max {
            prefix.set(
                pair(&Natural::from(r), &Natural::from(n)),
                Natural::from(g.gen_range(0..64u32)),
            );
        }
    }
    MeagerParam {
        prefix,
        rows,
        n_max,
    }
}

/// A random null parameter with witnesses for `rows` rows.
pub fn random_null(g: &mut Gen, rows: u64) -> NullParam {
    let witness: Vec<u64> = (0..rows).map(|n| g.gen_range(n + 1..n + 12)).collect();
    let top = witness
        .iter()
        .enumerate()
        .map(|(n, &k)| pair(&Natural::from(n), &Natural::from(k)))
        .max();
    let len = top.map_or(0, |t| usize::try_from(t).expect("small") + 1);
    let mut prefix = BairePrefix::zeros(len);
    for i in 0..len {
        if g.gen_ratio(1, 2) {
            prefix.set(Natural::from(i), Natural::from(g.gen_range(0..1u64 << 12)));
        }
    }
    NullParam { prefix, witness }
}

/// A random `E` parameter, adversarial levels included.
pub fn random_e(g: &mut Gen, rows: u64, n_max: u64) -> EParam {
    let width =
        usize::try_from(pair(&Natural::from(2u32), &Natural::from(n_max))).expect("small") + 1;
    let mut prefix = BairePrefix::new();
    for r in 0..rows {
        let t = ETripleParam {
            x0: gen::small_prefix(g, n_max as usize + 1, 3),
            x1: gen::small_prefix(g, n_max as usize + 1, 8),
            x2: gen::prefix(g, n_max as usize + 1, 1 << 20),
        };
        let inner = t.to_prefix(n_max + 1).expect("full rows");
        for j in 0..width as u64 {
            prefix.set(
                pair(&Natural::from(r), &Natural::from(j)),
                inner.at(j).expect("in range"),
            );
        }
    }
    EParam {
        prefix,
        rows,
        n_max,
    }
}

fn tri_monotone(g: &mut Gen, p: &mut Props) {
    let describe = |seq: &[Tri]| format!("{seq:?}");
    for case in 0..500 {
        // countable: the point's depth
        {
            let rows = g.gen_range(0..4u64);
            let pts: Vec<BairePrefix> = (0..rows).map(|_| gen::small_prefix(g, 6, 3)).collect();
            let mut y: CountableParam = countable_encode(&pts, 6).expect("long enough");
            if g.gen_bool(0.3) {
                let keep = g.gen_range(0..30u32);
                let mut short = BairePrefix::new();
                for i in 0..keep.min(y.prefix.len_usize().unwrap_or(0) as u32) {
                    short.push(y.prefix.at(i.into()).expect("in range"));
                }
                y.prefix = short;
            }
            let x = if rows > 0 && g.gen_bool(0.5) {
                pts[g.gen_range(0..pts.len())].clone()
            } else {
                gen::small_prefix(g, 6, 3)
            };
            let seq: Vec<Tri> = (0..=6)
                .filter_map(|d| countable_member(&y, &x, rows, d).ok())
                .collect();
            p.check("countable", never_flips(&seq), || {
                format!("case {case}: {}", describe(&seq))
            });
        }
        // meager: n_max
        {
            let rows = g.gen_range(0..3);
            let mp = random_meager(g, rows, 6);
            let zlen = g.gen_range(0..8);
            let z = gen::word(g, zlen);
            let seq: Vec<Tri> = (0..=6)
                .filter_map(|n| meager_eval(&mp, &z, mp.rows, n).ok())
                .collect();
            p.check("meager", never_flips(&seq) && seq.len() == 7, || {
                format!("case {case}: {}", describe(&seq))
            });
        }
        // null: N
        {
            let np = random_null(g, 5);
            let zlen = g.gen_range(0..8);
            let z = gen::word(g, zlen);
            let seq: Vec<Tri> = (0..5)
                .filter_map(|n| null_member(&np, &z, n).ok())
                .collect();
            p.check("null", never_flips(&seq) && seq.len() == 5, || {
                format!("case {case}: {}", describe(&seq))
            });
        }
        // E: n_max
        {
            let rows = g.gen_range(0..3);
            let ep = random_e(g, rows, 4);
            let zlen = g.gen_range(0..9);
            let z = gen::word(g, zlen);
            let seq: Vec<Tri> = (0..=4)
                .filter_map(|n| e_fsigma_member(&ep, &z, ep.rows, n).ok())
                .collect();
            p.check("e", never_flips(&seq) && seq.len() == 5, || {
                format!("case {case}: {}", describe(&seq))
            });
        }
        // product: both stages together
        {
            let rows = g.gen_range(0..3);
            let meager = random_meager(g, rows, 4);
            let null = random_null(g, 4);
            let pp = if g.gen_bool(0.5) {
                ProductParam::NullMeager { null, meager }
            } else {
                ProductParam::MeagerNull { meager, null }
            };
            let len = g.gen_range(0..5);
            let (y, z) = (gen::word(g, len), gen::word(g, len));
            let seq: Vec<Tri> = (0..4)
                .filter_map(|s| product_member(&pp, &y, &z, Stages { null: s, meager: s }).ok())
                .collect();
            p.check("fubini", never_flips(&seq) && seq.len() == 4, || {
                format!("case {case}: {}", describe(&seq))
            });
        }
        // fxp: a block where x and z agree stays a witness as the prefixes grow
        {
            let y = gen::small_prefix(g, 3, 3);
            let part = partition_from(&y).expect("small widths");
            let total = part.intervals().last().map_or(0, |iv| iv.1);
            let x = gen::word(g, total);
            let mut zbits: Vec<bool> = x.bits().to_vec();
            for b in zbits.iter_mut() {
                if g.gen_ratio(1, 3) {
                    *b = !*b;
                }
            }
            let z = BitWord::new(zbits);
            let seq: Vec<Tri> = (0..=total)
                .filter_map(|l| fxp_eval(&x.truncate(l), &part, &z.truncate(l), 0).ok())
                .collect();
            let fails_persist = seq
                .iter()
                .skip_while(|&&t| t != Tri::FailsAtStage)
                .all(|&t| t == Tri::FailsAtStage);
            p.check("fxp-fails-persist", fails_persist, || {
                format!("case {case}: {}", describe(&seq))
            });
        }
    }
}
