//! The `idealis` command line.
//!
//! Every command prints exactly one JSON document on standard output. JSON
//! arguments may be given inline, as `@path`, or as `-` for standard input.

use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use idealis_core::baire::{
    dominated_from, ksigma_diagonal, ksigma_encode, laver_encode, laver_witnesses, KsigmaParam,
    LaverParam,
};
use idealis_core::countable::{countable_encode, countable_member};
use idealis_core::e_ideal::{e_encode, e_fsigma_member, e_open_stage, e_row, e_term};
use idealis_core::enumeration::{
    basic_open, clopen_enum, clopen_rank, kcomb_rank, kcomb_unrank, kprime, Space,
};
use idealis_core::fubini::{
    product_encode, product_member, section_diagnostic, FactorInput, Proxy, Stages, Variant,
};
use idealis_core::meager::{fxp_eval, meager_encode, meager_eval, partition_from};
use idealis_core::null::{guard_scan, null_encode, null_member, null_term, CoverFamily};
use idealis_core::{pair, seq_code, seq_decode, unpair, BairePrefix, Natural};
use serde_json::{json, Value};

use crate::json::{self, Parsed};
use crate::params::Param;
use crate::{checks, CliError};

#[derive(Parser, Debug)]
#[command(
    name = "idealis",
    version,
    about = "Universal sets for sigma-ideals, evaluated at finite stage"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Clopen algebra and coding bijections
    #[command(subcommand)]
    Space(SpaceCmd),
    /// Enumerations of clopen sets, basic opens and k-subsets
    #[command(subcommand)]
    Enum(EnumCmd),
    /// Countable subsets of Baire space
    #[command(subcommand)]
    Countable(CountableCmd),
    /// Meager subsets of Cantor space
    #[command(subcommand)]
    Meager(MeagerCmd),
    /// Null subsets of Cantor space
    #[command(subcommand)]
    Null(NullCmd),
    /// The ideal generated by closed null sets
    #[command(subcommand)]
    E(ECmd),
    /// K-sigma subsets of Baire space
    #[command(subcommand)]
    Ksigma(KsigmaCmd),
    /// The Laver ideal
    #[command(subcommand)]
    Laver(LaverCmd),
    /// Fubini products of the null and meager ideals
    #[command(subcommand)]
    Fubini(FubiniCmd),
    /// Run seeded property suites
    Check {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum SpaceCmd {
    /// Exact measure of a clopen set
    Measure {
        #[arg(long)]
        clopen: String,
    },
    /// Canonical form of a clopen set
    Canon {
        #[arg(long)]
        clopen: String,
    },
    /// Cantor pairing, or its inverse with --code
    Pair {
        #[arg(long, requires = "n")]
        m: Option<String>,
        #[arg(long, requires = "m")]
        n: Option<String>,
        #[arg(long, conflicts_with_all = ["m", "n"])]
        code: Option<String>,
    },
    /// Sequence coding, or decoding with --code
    Seq {
        /// JSON array of naturals
        #[arg(long)]
        seq: Option<String>,
        #[arg(long, conflicts_with = "seq")]
        code: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SpaceArg {
    Cantor,
    Baire,
}

impl From<SpaceArg> for Space {
    fn from(s: SpaceArg) -> Space {
        match s {
            SpaceArg::Cantor => Space::Cantor,
            SpaceArg::Baire => Space::Baire,
        }
    }
}

#[derive(Subcommand, Debug)]
enum EnumCmd {
    /// The k-th clopen set of measure below 2^-n, or the rank of --clopen
    Clopen {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: Option<String>,
        #[arg(long, conflicts_with = "k")]
        clopen: Option<String>,
    },
    /// The basic open set with a given index
    Basic {
        #[arg(long, value_enum, default_value = "cantor")]
        space: SpaceArg,
        #[arg(long)]
        index: String,
    },
    /// The m-th nonempty basic open subset of U_n
    Kprime {
        #[arg(long, value_enum, default_value = "cantor")]
        space: SpaceArg,
        #[arg(long)]
        n: String,
        #[arg(long)]
        m: String,
    },
    /// Unrank a t-subset of {0..n-1}, or rank --subset
    Kcomb {
        #[arg(long)]
        n: u64,
        #[arg(long, requires = "rank")]
        t: Option<u64>,
        #[arg(long)]
        rank: Option<String>,
        #[arg(long, conflicts_with_all = ["t", "rank"])]
        subset: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum CountableCmd {
    Encode {
        /// JSON array of points (arrays of naturals)
        #[arg(long)]
        points: String,
        #[arg(long)]
        depth: u64,
    },
    Eval {
        #[arg(long)]
        param: String,
        #[arg(long)]
        point: String,
        #[arg(long)]
        depth: u64,
        #[arg(long)]
        rows: Option<u64>,
    },
}

#[derive(Subcommand, Debug)]
enum MeagerCmd {
    Encode {
        /// JSON array of clopen sets, each dense up to the stage
        #[arg(long)]
        sets: String,
        #[arg(long)]
        n_max: u64,
    },
    Eval {
        #[arg(long)]
        param: String,
        #[arg(long)]
        point: String,
        #[arg(long)]
        n_max: u64,
        #[arg(long)]
        rows: Option<u64>,
    },
    /// Stage reading of z in F_{x,P}
    Fxp {
        #[arg(long)]
        x: String,
        #[arg(long)]
        z: String,
        /// Widths-minus-one of the partition, as a JSON array
        #[arg(long)]
        partition: String,
        #[arg(long, default_value_t = 0)]
        from_block: usize,
    },
    /// Interval partition coded by y
    Partition {
        #[arg(long)]
        y: String,
    },
}

#[derive(Subcommand, Debug)]
enum NullCmd {
    Encode {
        /// {"covers": [[clopen, ...], ...]}
        #[arg(long)]
        covers: String,
    },
    Eval {
        #[arg(long)]
        param: String,
        #[arg(long)]
        point: String,
        #[arg(long)]
        n: u64,
    },
    /// Guarded union of the terms n < k <= K
    Stage {
        #[arg(long)]
        param: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// The guarded k-th term of row n
    Term {
        #[arg(long)]
        param: String,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
}

#[derive(Subcommand, Debug)]
enum ECmd {
    Encode {
        /// JSON array of clopen truncations of full-measure open sets
        #[arg(long)]
        sets: String,
        #[arg(long)]
        m_max: u64,
    },
    Eval {
        #[arg(long)]
        param: String,
        #[arg(long)]
        point: String,
        #[arg(long)]
        n_max: u64,
        #[arg(long)]
        rows: Option<u64>,
    },
    Term {
        #[arg(long)]
        param: String,
        #[arg(long, default_value_t = 0)]
        row: u64,
        #[arg(long)]
        n: u64,
    },
    Stage {
        #[arg(long)]
        param: String,
        #[arg(long, default_value_t = 0)]
        row: u64,
        #[arg(long)]
        n_max: u64,
    },
}

#[derive(Subcommand, Debug)]
enum KsigmaCmd {
    Encode {
        #[arg(long)]
        points: String,
    },
    /// Whether the point is dominated from n on
    Eval {
        #[arg(long)]
        param: String,
        #[arg(long)]
        point: String,
        #[arg(long, default_value_t = 0)]
        n: u64,
    },
    /// A point escaping the section, with its certificate
    Diagonal {
        #[arg(long)]
        param: String,
    },
}

#[derive(Subcommand, Debug)]
enum LaverCmd {
    Encode {
        /// JSON array of {"seq": [...], "val": v}
        #[arg(long)]
        phi: String,
    },
    /// Count n in [from, to) with f(n) < phi(f|n)
    Eval {
        #[arg(long)]
        param: String,
        #[arg(long)]
        f: String,
        #[arg(long, default_value_t = 0)]
        from: u64,
        #[arg(long)]
        to: Option<u64>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    Nm,
    Mn,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Variant {
        match v {
            VariantArg::Nm => Variant::NullMeager,
            VariantArg::Mn => Variant::MeagerNull,
        }
    }
}

#[derive(Subcommand, Debug)]
enum FubiniCmd {
    Encode {
        #[arg(long, value_enum)]
        variant: VariantArg,
        /// {"covers": ...} or {"dense_opens": [...], "n_max": k}
        #[arg(long)]
        x_part: String,
        #[arg(long)]
        plane_part: String,
    },
    Eval {
        #[arg(long)]
        param: String,
        #[arg(long)]
        y: String,
        #[arg(long)]
        z: String,
        #[arg(long)]
        null_n: u64,
        #[arg(long)]
        meager_n: u64,
    },
    /// Flag the sections of a finite planar set that fail a proxy
    Diagnose(DiagnoseArgs),
}

#[derive(Args, Debug)]
struct DiagnoseArgs {
    /// Row-major bit string of length 4^d
    #[arg(long)]
    bits: String,
    /// null:<density> or nwd:<level>
    #[arg(long)]
    proxy: String,
    /// Accepted for symmetry with the other fubini commands
    #[arg(long, value_enum)]
    variant: Option<VariantArg>,
}

/// Reads a JSON argument: inline text, `@path`, or `-` for stdin.
fn read_arg(arg: &str) -> Parsed<String> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::malformed(format!("reading stdin: {e}")))?;
        Ok(s)
    } else if let Some(path) = arg.strip_prefix('@') {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::malformed(format!("reading {path}: {e}")))
    } else {
        Ok(arg.to_string())
    }
}

fn parse_json(arg: &str) -> Parsed<Value> {
    let text = read_arg(arg)?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::malformed(format!("invalid JSON argument: {e}")))
}

fn parse_nat(arg: &str) -> Parsed<Natural> {
    arg.trim()
        .parse()
        .map_err(|_| CliError::malformed(format!("{arg:?} is not a natural number")))
}

/// Parameter files are always paths (or `-`); inline JSON also works.
fn load_param(arg: &str) -> Parsed<Param> {
    let text = if arg == "-" || arg.starts_with('@') || arg.trim_start().starts_with('{') {
        read_arg(arg)?
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| CliError::malformed(format!("reading {arg}: {e}")))?
    };
    Param::load(&text)
}

fn wrong_ideal(expected: &str, got: &Param) -> CliError {
    CliError::malformed(format!(
        "expected a {expected} parameter, got {}",
        got.ideal()
    ))
}

macro_rules! expect_param {
    ($arg:expr, $variant:ident, $name:literal) => {
        match load_param($arg)? {
            Param::$variant(p) => p,
            other => return Err(wrong_ideal($name, &other)),
        }
    };
}

fn parse_points(arg: &str) -> Parsed<Vec<BairePrefix>> {
    let v = parse_json(arg)?;
    v.as_array()
        .ok_or_else(|| CliError::malformed("expected a JSON array of points"))?
        .iter()
        .map(json::parse_prefix)
        .collect()
}

fn parse_point(arg: &str) -> Parsed<BairePrefix> {
    json::parse_prefix(&parse_json(arg)?)
}

fn parse_family(v: &Value) -> Parsed<CoverFamily> {
    let covers = v
        .get("covers")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::malformed("expected {\"covers\": [[clopen, ...], ...]}"))?;
    Ok(CoverFamily::new(
        covers
            .iter()
            .map(json::parse_clopens)
            .collect::<Parsed<_>>()?,
    ))
}

fn parse_factor(v: &Value) -> Parsed<FactorInput> {
    if v.get("covers").is_some() {
        return Ok(FactorInput::Null(parse_family(v)?));
    }
    let sets = v.get("dense_opens").ok_or_else(|| {
        CliError::malformed("expected {\"covers\": ...} or {\"dense_opens\": ..., \"n_max\": k}")
    })?;
    let n_max = json::parse_u64(v.get("n_max").unwrap_or(&Value::Null))?;
    Ok(FactorInput::Meager {
        dense_opens: json::parse_clopens(sets)?,
        n_max,
    })
}

fn parse_proxy(s: &str) -> Parsed<Proxy> {
    match s.split_once(':') {
        Some(("null", eps)) => Ok(Proxy::Null(json::parse_dyadic_str(eps)?)),
        Some(("nwd", split)) => split
            .trim()
            .parse()
            .map(Proxy::Nwd)
            .map_err(|_| CliError::malformed(format!("bad split level {split:?}"))),
        _ => Err(CliError::malformed(format!(
            "proxy must be null:<density> or nwd:<level>, got {s:?}"
        ))),
    }
}

fn execute(cmd: Command) -> Parsed<Value> {
    Ok(match cmd {
        Command::Space(c) => match c {
            SpaceCmd::Measure { clopen } => {
                json::dyadic(&json::parse_clopen(&parse_json(&clopen)?)?.measure())
            }
            SpaceCmd::Canon { clopen } => json::clopen(&json::parse_clopen(&parse_json(&clopen)?)?),
            SpaceCmd::Pair { m, n, code } => match (m, n, code) {
                (Some(m), Some(n), None) => {
                    json!({ "code": json::natural(&pair(&parse_nat(&m)?, &parse_nat(&n)?)) })
                }
                (None, None, Some(code)) => {
                    let (m, n) = unpair(&parse_nat(&code)?);
                    json!({ "m": json::natural(&m), "n": json::natural(&n) })
                }
                _ => return Err(CliError::malformed("give --m and --n, or --code")),
            },
            SpaceCmd::Seq { seq, code } => match (seq, code) {
                (Some(s), None) => {
                    json!({ "code": json::natural(&seq_code(&json::parse_naturals(&parse_json(&s)?)?)) })
                }
                (None, Some(c)) => json!({ "seq": json::naturals(&seq_decode(&parse_nat(&c)?)) }),
                _ => return Err(CliError::malformed("give --seq or --code")),
            },
        },
        Command::Enum(c) => match c {
            EnumCmd::Clopen { n, k, clopen } => match (k, clopen) {
                (Some(k), None) => json::clopen(&clopen_enum(n, &parse_nat(&k)?)?),
                (None, Some(c)) => {
                    json!({ "k": json::natural(&clopen_rank(n, &json::parse_clopen(&parse_json(&c)?)?)?) })
                }
                _ => return Err(CliError::malformed("give --k or --clopen")),
            },
            EnumCmd::Basic { space, index } => {
                json::basic_open(&basic_open(space.into(), &parse_nat(&index)?)?)
            }
            EnumCmd::Kprime { space, n, m } => {
                let space: Space = space.into();
                let idx = kprime(&parse_nat(&n)?, &parse_nat(&m)?, space)?;
                let open = basic_open(space, &idx)?;
                let mut v = json::basic_open(&open);
                v["index"] = json::natural(&idx);
                v
            }
            EnumCmd::Kcomb { n, t, rank, subset } => match (t, rank, subset) {
                (Some(t), Some(r), None) => {
                    json!({ "subset": kcomb_unrank(n, t, &parse_nat(&r)?)? })
                }
                (None, None, Some(s)) => {
                    let subset: Vec<u64> = parse_json(&s)?
                        .as_array()
                        .ok_or_else(|| CliError::malformed("--subset must be a JSON array"))?
                        .iter()
                        .map(json::parse_u64)
                        .collect::<Parsed<_>>()?;
                    json!({ "rank": json::natural(&kcomb_rank(n, &subset)?) })
                }
                _ => return Err(CliError::malformed("give --t and --rank, or --subset")),
            },
        },
        Command::Countable(c) => match c {
            CountableCmd::Encode { points, depth } => {
                Param::Countable(countable_encode(&parse_points(&points)?, depth)?).to_json()
            }
            CountableCmd::Eval {
                param,
                point,
                depth,
                rows,
            } => {
                let y = expect_param!(&param, Countable, "countable");
                let rows = rows.unwrap_or(y.rows);
                json::tri(countable_member(&y, &parse_point(&point)?, rows, depth)?)
            }
        },
        Command::Meager(c) => match c {
            MeagerCmd::Encode { sets, n_max } => Param::Meager(meager_encode(
                &json::parse_clopens(&parse_json(&sets)?)?,
                n_max,
            )?)
            .to_json(),
            MeagerCmd::Eval {
                param,
                point,
                n_max,
                rows,
            } => {
                let p = expect_param!(&param, Meager, "meager");
                let rows = rows.unwrap_or(p.rows);
                json::tri(meager_eval(
                    &p,
                    &json::parse_word_str(&point)?,
                    rows,
                    n_max,
                )?)
            }
            MeagerCmd::Fxp {
                x,
                z,
                partition,
                from_block,
            } => {
                let part = partition_from(&parse_point(&partition)?)?;
                json::tri(fxp_eval(
                    &json::parse_word_str(&x)?,
                    &part,
                    &json::parse_word_str(&z)?,
                    from_block,
                )?)
            }
            MeagerCmd::Partition { y } => {
                let part = partition_from(&parse_point(&y)?)?;
                json!({ "intervals": part.intervals().iter().map(|&(a, b)| json!([a, b])).collect::<Vec<_>>() })
            }
        },
        Command::Null(c) => match c {
            NullCmd::Encode { covers } => {
                Param::Null(null_encode(&parse_family(&parse_json(&covers)?)?)?.param).to_json()
            }
            NullCmd::Eval { param, point, n } => {
                let p = expect_param!(&param, Null, "null");
                json::tri(null_member(&p, &json::parse_word_str(&point)?, n)?)
            }
            NullCmd::Stage { param, n, k } => {
                let p = expect_param!(&param, Null, "null");
                let scan = guard_scan(&p.prefix, n, k)?;
                json!({
                    "stage": json::clopen(&scan.stage),
                    "measure": json::dyadic(&scan.stage.measure()),
                    "rejected": scan.rejected,
                })
            }
            NullCmd::Term { param, n, k } => {
                let p = expect_param!(&param, Null, "null");
                json::clopen(&null_term(&p.prefix, n, k)?)
            }
        },
        Command::E(c) => match c {
            ECmd::Encode { sets, m_max } => {
                Param::E(e_encode(&json::parse_clopens(&parse_json(&sets)?)?, m_max)?).to_json()
            }
            ECmd::Eval {
                param,
                point,
                n_max,
                rows,
            } => {
                let p = expect_param!(&param, E, "e");
                let rows = rows.unwrap_or(p.rows);
                json::tri(e_fsigma_member(
                    &p,
                    &json::parse_word_str(&point)?,
                    rows,
                    n_max,
                )?)
            }
            ECmd::Term { param, row, n } => {
                let p = expect_param!(&param, E, "e");
                let t = e_term(&e_row(&p, row)?, n)?;
                json!({ "term": json::clopen(&t), "measure": json::dyadic(&t.measure()) })
            }
            ECmd::Stage { param, row, n_max } => {
                let p = expect_param!(&param, E, "e");
                let s = e_open_stage(&e_row(&p, row)?, n_max)?;
                json!({ "stage": json::clopen(&s), "measure": json::dyadic(&s.measure()) })
            }
        },
        Command::Ksigma(c) => match c {
            KsigmaCmd::Encode { points } => {
                Param::Ksigma(ksigma_encode(&parse_points(&points)?)?).to_json()
            }
            KsigmaCmd::Eval { param, point, n } => {
                let y: KsigmaParam = expect_param!(&param, Ksigma, "ksigma");
                json!({ "dominated": dominated_from(&y, &parse_point(&point)?, n)? })
            }
            KsigmaCmd::Diagonal { param } => {
                let y: KsigmaParam = expect_param!(&param, Ksigma, "ksigma");
                let g = ksigma_diagonal(&y)?;
                let len = u64::try_from(g.len()).unwrap_or(u64::MAX);
                let certificate = (0..len.saturating_sub(1))
                    .map(|n| dominated_from(&y, &g, n))
                    .collect::<idealis_core::Result<Vec<bool>>>()?;
                json!({ "point": json::prefix(&g), "dominated_from": certificate })
            }
        },
        Command::Laver(c) => match c {
            LaverCmd::Encode { phi } => {
                let v = parse_json(&phi)?;
                let entries = v
                    .as_array()
                    .ok_or_else(|| {
                        CliError::malformed("phi must be an array of {\"seq\", \"val\"}")
                    })?
                    .iter()
                    .map(|e| {
                        let seq = json::parse_naturals(e.get("seq").unwrap_or(&Value::Null))?;
                        let val = json::parse_natural(e.get("val").unwrap_or(&Value::Null))?;
                        Ok((seq, val))
                    })
                    .collect::<Parsed<Vec<_>>>()?;
                Param::Laver(laver_encode(&entries)).to_json()
            }
            LaverCmd::Eval { param, f, from, to } => {
                let p: LaverParam = expect_param!(&param, Laver, "laver");
                let f = parse_point(&f)?;
                let to = to.unwrap_or_else(|| u64::try_from(f.len()).unwrap_or(u64::MAX));
                json!({ "witnesses": laver_witnesses(&p, &f, from, to)?, "window": [from, to] })
            }
        },
        Command::Fubini(c) => match c {
            FubiniCmd::Encode {
                variant,
                x_part,
                plane_part,
            } => {
                let pp = product_encode(
                    variant.into(),
                    &parse_factor(&parse_json(&x_part)?)?,
                    &parse_factor(&parse_json(&plane_part)?)?,
                )?;
                Param::Fubini(pp).to_json()
            }
            FubiniCmd::Eval {
                param,
                y,
                z,
                null_n,
                meager_n,
            } => {
                let pp = expect_param!(&param, Fubini, "fubini");
                let stages = Stages {
                    null: null_n,
                    meager: meager_n,
                };
                json::tri(product_member(
                    &pp,
                    &json::parse_word_str(&y)?,
                    &json::parse_word_str(&z)?,
                    stages,
                )?)
            }
            FubiniCmd::Diagnose(a) => {
                let (mask, d) = json::parse_square(&read_arg(&a.bits)?)?;
                let proxy = parse_proxy(&a.proxy)?;
                let flagged = section_diagnostic(&mask, d, &proxy)?;
                let label = match &proxy {
                    Proxy::Null(eps) => format!("null proxy: section density >= {eps}"),
                    Proxy::Nwd(s) => {
                        format!("nowhere-dense proxy: section meets every level-{s} cylinder")
                    }
                };
                let words: Vec<Value> = flagged
                    .iter_ones()
                    .map(|i| json::word(&idealis_core::BitWord::from_index(d, i)))
                    .collect();
                let mut v = json!({ "proxy": label, "level": d, "flagged": words });
                if let Some(variant) = a.variant {
                    v["variant"] = json!(Variant::from(variant).name());
                }
                v
            }
        },
        Command::Check { .. } => unreachable!("handled by run"),
    })
}

/// Runs the tool on `argv` (including the program name) and returns the exit
/// code with the text for standard output.
pub fn run<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => (0, e.to_string()),
                _ => {
                    let err = CliError::malformed(e.to_string().trim().to_string());
                    (err.exit_code(), json::to_line(&err.to_json()))
                }
            };
        }
    };
    match crate::level_cap_from_env() {
        Ok(cap) => idealis_core::space::set_level_cap(cap),
        Err(e) => return (e.exit_code(), json::to_line(&e.to_json())),
    }
    if let Command::Check { suite, seed } = &cli.command {
        // a failing suite still prints its full report
        return match checks::run(suite, *seed) {
            Ok(report) => (
                if report.passed() { 0 } else { 2 },
                json::to_line(&report.to_json()),
            ),
            Err(e) => (e.exit_code(), json::to_line(&e.to_json())),
        };
    }
    match execute(cli.command) {
        Ok(v) => (0, json::to_line(&v)),
        Err(e) => (e.exit_code(), json::to_line(&e.to_json())),
    }
}
