//! Parameter files.
//!
//! ```json
//! {"coding":"cantor-e1","created-by":"idealis 0.1.0","ideal":"null","prefix":[...],"witness":[...]}
//! ```
//!
//! Loading refuses files written under another coding convention.

use idealis_core::baire::{KsigmaParam, LaverParam};
use idealis_core::countable::CountableParam;
use idealis_core::e_ideal::EParam;
use idealis_core::fubini::ProductParam;
use idealis_core::meager::MeagerParam;
use idealis_core::null::NullParam;
use idealis_core::CODING;
use serde_json::{json, Map, Value};

use crate::json::{self, Parsed};
use crate::CliError;

/// How the plane is flattened to a line for planar product components.
pub const PLANE_IDENTIFICATION: &str = "interleave";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Param {
    Countable(CountableParam),
    Meager(MeagerParam),
    Null(NullParam),
    E(EParam),
    Ksigma(KsigmaParam),
    Laver(LaverParam),
    Fubini(ProductParam),
}

pub fn created_by() -> String {
    format!("idealis {}", env!("CARGO_PKG_VERSION"))
}

impl Param {
    pub fn ideal(&self) -> &'static str {
        match self {
            Param::Countable(_) => "countable",
            Param::Meager(_) => "meager",
            Param::Null(_) => "null",
            Param::E(_) => "e",
            Param::Ksigma(_) => "ksigma",
            Param::Laver(_) => "laver",
            Param::Fubini(_) => "fubini",
        }
    }

    pub fn to_json(&self) -> Value {
        let mut o = Map::new();
        o.insert("coding".into(), json!(CODING));
        o.insert("created-by".into(), json!(created_by()));
        o.insert("ideal".into(), json!(self.ideal()));
        match self {
            Param::Countable(p) => {
                o.insert("prefix".into(), json::prefix(&p.prefix));
                o.insert("rows".into(), json!(p.rows));
            }
            Param::Meager(p) => {
                o.insert("prefix".into(), json::prefix(&p.prefix));
                o.insert("rows".into(), json!(p.rows));
                o.insert("n_max".into(), json!(p.n_max));
            }
            Param::Null(p) => {
                o.insert("prefix".into(), json::prefix(&p.prefix));
                o.insert("witness".into(), json!(p.witness));
            }
            Param::E(p) => {
                o.insert("prefix".into(), json::prefix(&p.prefix));
                o.insert("rows".into(), json!(p.rows));
                o.insert("n_max".into(), json!(p.n_max));
            }
            Param::Ksigma(p) => {
                o.insert("prefix".into(), json::prefix(&p.bound));
            }
            Param::Laver(p) => {
                o.insert("prefix".into(), json::prefix(&p.prefix));
            }
            Param::Fubini(pp) => {
                let (first, second) = match pp {
                    ProductParam::NullMeager { null, meager } => {
                        (Param::Null(null.clone()), Param::Meager(meager.clone()))
                    }
                    ProductParam::MeagerNull { meager, null } => {
                        (Param::Meager(meager.clone()), Param::Null(null.clone()))
                    }
                };
                o.insert("variant".into(), json!(pp.variant().name()));
                o.insert("plane".into(), json!(PLANE_IDENTIFICATION));
                o.insert("first".into(), first.to_json());
                o.insert("second".into(), second.to_json());
            }
        }
        Value::Object(o)
    }

    pub fn from_json(v: &Value) -> Parsed<Param> {
        let o = v
            .as_object()
            .ok_or_else(|| CliError::malformed("parameter file must be a JSON object"))?;
        let coding = o
            .get("coding")
            .and_then(Value::as_str)
            .ok_or_else(|| CliError::malformed("parameter file has no \"coding\""))?;
        if coding != CODING {
            return Err(CliError::CodingMismatch {
                found: coding.into(),
            });
        }
        let ideal = o
            .get("ideal")
            .and_then(Value::as_str)
            .ok_or_else(|| CliError::malformed("parameter file has no \"ideal\""))?;
        let field = |name: &str| {
            o.get(name)
                .ok_or_else(|| CliError::malformed(format!("{ideal} parameter needs \"{name}\"")))
        };
        let prefix = || json::parse_prefix(field("prefix")?);
        let num = |name: &str| json::parse_u64(field(name)?);
        Ok(match ideal {
            "countable" => Param::Countable(CountableParam {
                prefix: prefix()?,
                rows: num("rows")?,
            }),
            "meager" => Param::Meager(MeagerParam {
                prefix: prefix()?,
                rows: num("rows")?,
                n_max: num("n_max")?,
            }),
            "null" => Param::Null(NullParam {
                prefix: prefix()?,
                witness: field("witness")?
                    .as_array()
                    .ok_or_else(|| CliError::malformed("\"witness\" must be an array"))?
                    .iter()
                    .map(json::parse_u64)
                    .collect::<Parsed<_>>()?,
            }),
            "e" => Param::E(EParam {
                prefix: prefix()?,
                rows: num("rows")?,
                n_max: num("n_max")?,
            }),
            "ksigma" => Param::Ksigma(KsigmaParam { bound: prefix()? }),
            "laver" => Param::Laver(LaverParam { prefix: prefix()? }),
            "fubini" => {
                let plane = field("plane")?.as_str().unwrap_or_default();
                if plane != PLANE_IDENTIFICATION {
                    return Err(CliError::malformed(format!(
                        "unsupported plane identification {plane:?}"
                    )));
                }
                let first = Param::from_json(field("first")?)?;
                let second = Param::from_json(field("second")?)?;
                let variant = field("variant")?.as_str().unwrap_or_default();
                Param::Fubini(match (variant, first, second) {
                    ("nm", Param::Null(null), Param::Meager(meager)) => ProductParam::NullMeager { null, meager },
                    ("mn", Param::Meager(meager), Param::Null(null)) => ProductParam::MeagerNull { meager, null },
                    _ => {
                        return Err(CliError::malformed(
                            "fubini parameter: variant must be \"nm\" (null, meager) or \"mn\" (meager, null)",
                        ))
                    }
                })
            }
            other => return Err(CliError::malformed(format!("unknown ideal {other:?}"))),
        })
    }

    pub fn load(text: &str) -> Parsed<Param> {
        let v: Value = serde_json::from_str(text)
            .map_err(|e| CliError::malformed(format!("invalid JSON: {e}")))?;
        Param::from_json(&v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use idealis_core::BairePrefix;

    #[test]
    fn round_trip_and_coding_check() {
        let p = Param::Null(NullParam {
            prefix: BairePrefix::from_u64s(&[0, 3, 0]),
            witness: vec![2],
        });
        let v = p.to_json();
        assert_eq!(Param::from_json(&v).unwrap(), p);
        let text = json::to_line(&v);
        assert!(text.starts_with("{\"coding\":\"cantor-e1\",\"created-by\""));
        let mut other = v.clone();
        other["coding"] = json!("rosser-2");
        assert_eq!(
            Param::from_json(&other).unwrap_err().name(),
            "CodingMismatch"
        );
        assert_eq!(Param::load("{").unwrap_err().exit_code(), 1);
    }
}
