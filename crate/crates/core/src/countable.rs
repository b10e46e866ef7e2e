//! Universal set for countable subsets of `ω^ω`: `(x, y) ∈ C ⟺ ∃n h(y)(n) = x`,
//! where `h(y)(n)(m) = y(pair(n, m))`.

use alloc::vec::Vec;

use crate::space::{pair_u64, BairePrefix, Natural, Tri};
use crate::{Error, Result};

/// Parameter `y` whose matrix rows `0..rows` are the encoded points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountableParam {
    pub prefix: BairePrefix,
    pub rows: u64,
}

/// Lays the points out as matrix rows, truncated to `depth` columns.
///
/// Every cell below the last encoded one is filled, with 0 where no point
/// supplies a value, so the section always contains the zero sequence.
pub fn countable_encode(points: &[BairePrefix], depth: u64) -> Result<CountableParam> {
    let mut prefix = BairePrefix::new();
    for (row, p) in points.iter().enumerate() {
        if p.len() < &Natural::from(depth) {
            return Err(Error::insufficient(depth));
        }
        for col in 0..depth {
            prefix.set(pair_u64(row as u64, col), p.at(col)?);
        }
    }
    Ok(CountableParam {
        prefix,
        rows: points.len() as u64,
    })
}

/// Reads row `row` back out of the parameter, `depth` columns wide.
pub fn countable_row(y: &CountableParam, row: u64, depth: u64) -> Result<Vec<Natural>> {
    (0..depth)
        .map(|col| y.prefix.get(&pair_u64(row, col)))
        .collect()
}

/// Stage membership of `x` in the section `C^y`, looking at rows `0..rows`.
///
/// * Holds: some row agrees with `x` on `[0, depth)` and on every further
///   column where both are known.
/// * Fails: every row is refuted by a column where both are known.
/// * Otherwise the parameter is too short to decide.
///
/// Refutations do not depend on `depth`, so raising the stage never turns a
/// decided answer into its opposite.
pub fn countable_member(y: &CountableParam, x: &BairePrefix, rows: u64, depth: u64) -> Result<Tri> {
    let x_len = x.len_usize().ok_or(Error::IndexOutOfRange)? as u64;
    if x_len < depth {
        return Err(Error::insufficient(depth));
    }
    let mut all_refuted = true;
    for row in 0..rows {
        let mut refuted = false;
        let mut known_through_depth = true;
        for col in 0..x_len {
            match y.prefix.get(&pair_u64(row, col)) {
                Ok(v) => {
                    if v != x.at(col)? {
                        refuted = true;
                        break;
                    }
                }
                Err(_) => {
                    if col < depth {
                        known_through_depth = false;
                    }
                }
            }
        }
        if !refuted && known_through_depth {
            return Ok(Tri::HoldsAtStage);
        }
        all_refuted &= refuted;
    }
    Ok(if all_refuted {
        Tri::FailsAtStage
    } else {
        Tri::InsufficientData
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(v: &[u64]) -> BairePrefix {
        BairePrefix::from_u64s(v)
    }

    #[test]
    fn empty_list_gives_empty_param() {
        let y = countable_encode(&[], 4).unwrap();
        assert_eq!(y.rows, 0);
        assert_eq!(
            countable_member(&y, &bp(&[0, 0, 0, 0]), 0, 4).unwrap(),
            Tri::FailsAtStage
        );
    }

    #[test]
    fn round_trip_and_row_recovery() {
        let a = bp(&[1, 2, 3, 4]);
        let b = bp(&[4, 3, 2, 1]);
        let y = countable_encode(&[a.clone(), b.clone()], 4).unwrap();
        assert_eq!(countable_member(&y, &a, 2, 4).unwrap(), Tri::HoldsAtStage);
        assert_eq!(countable_member(&y, &b, 2, 4).unwrap(), Tri::HoldsAtStage);
        assert_eq!(countable_row(&y, 0, 4).unwrap(), a.to_vec(4).unwrap());
        assert_eq!(countable_row(&y, 1, 4).unwrap(), b.to_vec(4).unwrap());
    }

    #[test]
    fn differing_point_fails() {
        let y = countable_encode(&[bp(&[1, 2, 3]), bp(&[2, 2, 2])], 3).unwrap();
        assert_eq!(
            countable_member(&y, &bp(&[7, 2, 3]), 2, 3).unwrap(),
            Tri::FailsAtStage
        );
        // agreeing with row 0 except in the last column
        assert_eq!(
            countable_member(&y, &bp(&[1, 2, 9]), 2, 1).unwrap(),
            Tri::FailsAtStage
        );
    }

    #[test]
    fn depth_beyond_point_is_an_error() {
        let y = countable_encode(&[bp(&[1, 2])], 2).unwrap();
        assert_eq!(
            countable_member(&y, &bp(&[1, 2]), 1, 3),
            Err(Error::insufficient(3u32))
        );
    }

    #[test]
    fn short_parameter_is_undecided() {
        let y = CountableParam {
            prefix: bp(&[5]),
            rows: 1,
        };
        // row 0 only has column 0
        assert_eq!(
            countable_member(&y, &bp(&[5, 1]), 1, 2).unwrap(),
            Tri::InsufficientData
        );
        assert_eq!(
            countable_member(&y, &bp(&[5, 1]), 1, 1).unwrap(),
            Tri::HoldsAtStage
        );
        assert_eq!(
            countable_member(&y, &bp(&[6, 1]), 1, 2).unwrap(),
            Tri::FailsAtStage
        );
    }
}
