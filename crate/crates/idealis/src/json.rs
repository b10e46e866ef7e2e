//! JSON forms of the core types.
//!
//! Naturals are JSON numbers when they fit in 64 bits and decimal strings
//! otherwise. Prefixes are plain arrays, or `{"len", "cells"}` with only the
//! nonzero cells once they get long. Objects come out with sorted keys, so
//! output is byte-stable.

use idealis_core::enumeration::BasicOpen;
use idealis_core::space::Mask;
use idealis_core::{BairePrefix, BitWord, Clopen, Dyadic, Natural, Tri};
use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::CliError;

/// Prefixes longer than this are written in sparse form.
pub const DENSE_PREFIX_MAX: usize = 4096;

pub type Parsed<T> = Result<T, CliError>;

fn bad(what: &str, v: &Value) -> CliError {
    CliError::malformed(format!("expected {what}, got {v}"))
}

pub fn natural(n: &Natural) -> Value {
    match u64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => Value::String(n.to_string()),
    }
}

pub fn parse_natural(v: &Value) -> Parsed<Natural> {
    match v {
        Value::Number(n) => n
            .as_u64()
            .map(Natural::from)
            .ok_or_else(|| bad("a natural number", v)),
        Value::String(s) => s.parse::<BigUint>().map_err(|_| bad("a natural number", v)),
        _ => Err(bad("a natural number", v)),
    }
}

pub fn parse_u64(v: &Value) -> Parsed<u64> {
    v.as_u64().ok_or_else(|| bad("a 64-bit natural number", v))
}

pub fn naturals(s: &[Natural]) -> Value {
    Value::Array(s.iter().map(natural).collect())
}

pub fn parse_naturals(v: &Value) -> Parsed<Vec<Natural>> {
    v.as_array()
        .ok_or_else(|| bad("an array of naturals", v))?
        .iter()
        .map(parse_natural)
        .collect()
}

pub fn prefix(p: &BairePrefix) -> Value {
    match p.len_usize().filter(|&n| n <= DENSE_PREFIX_MAX) {
        Some(n) => naturals(&p.to_vec(n).expect("length checked")),
        None => {
            let cells: Map<String, Value> = p
                .nonzero()
                .map(|(i, v)| (i.to_string(), natural(v)))
                .collect();
            json!({ "len": natural(p.len()), "cells": cells })
        }
    }
}

pub fn parse_prefix(v: &Value) -> Parsed<BairePrefix> {
    match v {
        Value::Array(_) => Ok(BairePrefix::from_vec(parse_naturals(v)?)),
        Value::Object(o) => {
            let len = parse_natural(
                o.get("len")
                    .ok_or_else(|| bad("a prefix with \"len\"", v))?,
            )?;
            let mut out = BairePrefix::zeros(len.clone());
            if let Some(cells) = o.get("cells") {
                let cells = cells
                    .as_object()
                    .ok_or_else(|| bad("an object of cells", cells))?;
                for (k, val) in cells {
                    let idx: Natural = k
                        .parse()
                        .map_err(|_| CliError::malformed(format!("bad cell index {k:?}")))?;
                    if idx >= len {
                        return Err(CliError::malformed(format!(
                            "cell {idx} outside prefix of length {len}"
                        )));
                    }
                    out.set(idx, parse_natural(val)?);
                }
            }
            Ok(out)
        }
        _ => Err(bad("a prefix (array or {\"len\",\"cells\"})", v)),
    }
}

pub fn word(w: &BitWord) -> Value {
    Value::String(w.to_bit_string())
}

pub fn parse_word(v: &Value) -> Parsed<BitWord> {
    let s = v.as_str().ok_or_else(|| bad("a bit string", v))?;
    parse_word_str(s)
}

/// Accepts `0110` as well as the JSON string `"0110"`.
pub fn parse_word_str(s: &str) -> Parsed<BitWord> {
    let s = s.trim();
    let bare = s
        .strip_prefix('"')
        .and_then(|t| t.strip_suffix('"'))
        .unwrap_or(s);
    BitWord::parse(bare)
        .ok_or_else(|| CliError::malformed(format!("{s:?} is not a string of 0s and 1s")))
}

pub fn clopen(c: &Clopen) -> Value {
    json!({
        "level": c.level(),
        "words": c.words().iter().map(word).collect::<Vec<_>>(),
    })
}

/// Accepts `{"level", "words"}`; words of other lengths are rejected by the core.
pub fn parse_clopen(v: &Value) -> Parsed<Clopen> {
    let o = v
        .as_object()
        .ok_or_else(|| bad("a clopen set {\"level\",\"words\"}", v))?;
    let level = o
        .get("level")
        .and_then(Value::as_u64)
        .and_then(|l| u32::try_from(l).ok())
        .ok_or_else(|| bad("a clopen set with a numeric \"level\"", v))?;
    let words = o
        .get("words")
        .and_then(Value::as_array)
        .ok_or_else(|| bad("a clopen set with a \"words\" array", v))?
        .iter()
        .map(parse_word)
        .collect::<Parsed<Vec<_>>>()?;
    Clopen::from_words(level, &words).map_err(|e| match e {
        idealis_core::Error::LevelTooLarge { .. } => CliError::Contract(e),
        _ => CliError::malformed(e.to_string()),
    })
}

pub fn parse_clopens(v: &Value) -> Parsed<Vec<Clopen>> {
    v.as_array()
        .ok_or_else(|| bad("an array of clopen sets", v))?
        .iter()
        .map(parse_clopen)
        .collect()
}

pub fn dyadic(d: &Dyadic) -> Value {
    json!({ "num": natural(d.numerator()), "exp": d.exponent() })
}

/// `{"num", "exp"}` or a string `"a/2^k"`, `"a/b"` with `b` a power of two, or `"a"`.
pub fn parse_dyadic(v: &Value) -> Parsed<Dyadic> {
    match v {
        Value::Object(o) => {
            let num = parse_natural(
                o.get("num")
                    .ok_or_else(|| bad("a dyadic {\"num\",\"exp\"}", v))?,
            )?;
            let exp = o
                .get("exp")
                .and_then(Value::as_u64)
                .and_then(|e| u32::try_from(e).ok())
                .ok_or_else(|| bad("a dyadic with a numeric \"exp\"", v))?;
            Ok(Dyadic::new(num, exp))
        }
        Value::String(s) => parse_dyadic_str(s),
        _ => Err(bad("a dyadic rational", v)),
    }
}

pub fn parse_dyadic_str(s: &str) -> Parsed<Dyadic> {
    let err = || CliError::malformed(format!("{s:?} is not a dyadic rational"));
    let (num, den) = s.split_once('/').unwrap_or((s, "1"));
    let num: Natural = num.trim().parse().map_err(|_| err())?;
    let den = den.trim();
    let exp = if let Some(k) = den.strip_prefix("2^") {
        k.parse::<u32>().map_err(|_| err())?
    } else {
        let d: u64 = den.parse().map_err(|_| err())?;
        if !d.is_power_of_two() {
            return Err(err());
        }
        d.trailing_zeros()
    };
    Ok(Dyadic::new(num, exp))
}

pub fn tri(t: Tri) -> Value {
    json!({ "result": t.name() })
}

pub fn basic_open(b: &BasicOpen) -> Value {
    match b {
        BasicOpen::Empty => json!({ "empty": true }),
        BasicOpen::Cantor(w) => json!({ "empty": false, "stem": word(w) }),
        BasicOpen::Baire(s) => json!({ "empty": false, "stem": naturals(s) }),
    }
}

/// Row-major bit string of length `4^d`.
pub fn parse_square(bits: &str) -> Parsed<(Mask, u32)> {
    let bits = bits.trim();
    let n = bits.len();
    let d = (0..=12u32)
        .find(|&d| 1usize << (2 * d) == n)
        .ok_or_else(|| CliError::malformed(format!("bitset length {n} is not 4^d for d <= 12")))?;
    let mut mask = Mask::zeros(n);
    for (i, c) in bits.chars().enumerate() {
        match c {
            '0' => {}
            '1' => mask.set(i, true),
            _ => return Err(CliError::malformed(format!("bad bit {c:?} in bitset"))),
        }
    }
    Ok((mask, d))
}

pub fn mask_bits(m: &Mask) -> String {
    (0..m.len())
        .map(|i| if m.get(i) { '1' } else { '0' })
        .collect()
}

/// Canonical text of a document: sorted keys, no insignificant whitespace.
pub fn to_line(v: &Value) -> String {
    serde_json::to_string(v).expect("values always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn naturals_round_trip() {
        let big: Natural = "123456789012345678901234567890".parse().unwrap();
        for n in [Natural::from(0u32), Natural::from(u64::MAX), big] {
            assert_eq!(parse_natural(&natural(&n)).unwrap(), n);
        }
        assert!(parse_natural(&json!(-1)).is_err());
        assert!(parse_natural(&json!(1.5)).is_err());
    }

    #[test]
    fn prefix_forms() {
        let p = BairePrefix::from_u64s(&[1, 0, 3]);
        assert_eq!(prefix(&p), json!([1, 0, 3]));
        assert_eq!(parse_prefix(&prefix(&p)).unwrap(), p);
        let mut sparse = BairePrefix::zeros(Natural::from(1u64 << 40));
        sparse.set(Natural::from(7u32), Natural::from(9u32));
        let v = prefix(&sparse);
        assert_eq!(v, json!({"len": 1u64 << 40, "cells": {"7": 9}}));
        assert_eq!(parse_prefix(&v).unwrap(), sparse);
    }

    #[test]
    fn clopen_and_dyadic() {
        let c = parse_clopen(&json!({"level": 3, "words": ["010"]})).unwrap();
        assert_eq!(dyadic(&c.measure()), json!({"num": 1, "exp": 3}));
        assert_eq!(clopen(&c), json!({"level": 3, "words": ["010"]}));
        let canon = parse_clopen(&json!({"level": 2, "words": ["00", "01"]})).unwrap();
        assert_eq!(clopen(&canon), json!({"level": 1, "words": ["0"]}));
        assert_eq!(parse_dyadic_str("3/8").unwrap(), Dyadic::new(3u32, 3));
        assert_eq!(parse_dyadic_str("1/2^5").unwrap(), Dyadic::pow2_neg(5));
        assert!(parse_dyadic_str("1/3").is_err());
    }

    #[test]
    fn square_bits() {
        let (m, d) = parse_square("1001").unwrap();
        assert_eq!(d, 1);
        assert_eq!(mask_bits(&m), "1001");
        assert!(parse_square("101").is_err());
    }
}
