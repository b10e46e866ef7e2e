//! Universal sets for the Fubini products `N⊗M` and `M⊗N` on `2^ω × 2^ω`.
//!
//! A set in `N⊗M` is covered by `(G × 2^ω) ∪ F` with `G` a null `G_δ` set and
//! `F` a meager `F_σ` subset of the plane; `M⊗N` swaps the roles. The plane is
//! identified with `2^ω` by interleaving bits, so the planar component reuses
//! the one-dimensional evaluators.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::meager::{meager_encode, meager_eval, MeagerParam};
use crate::null::{null_encode, null_member, CoverFamily, NullParam};
use crate::space::{BitPrefix, BitWord, Clopen, Dyadic, Mask, Tri};
use crate::{Error, Result};

/// `y(0) z(0) y(1) z(1) …`.
pub fn interleave(y: &BitPrefix, z: &BitPrefix) -> Result<BitPrefix> {
    if y.len() != z.len() {
        return Err(Error::LengthMismatch {
            left: y.len(),
            right: z.len(),
        });
    }
    let mut out = BitWord::empty();
    for (a, b) in y.bits().iter().zip(z.bits()) {
        out.push(*a);
        out.push(*b);
    }
    Ok(out)
}

/// Inverse of [`interleave`]; the input must have even length.
pub fn deinterleave(w: &BitPrefix) -> Result<(BitPrefix, BitPrefix)> {
    if !w.len().is_multiple_of(2) {
        return Err(Error::LengthMismatch {
            left: w.len() / 2 + 1,
            right: w.len() / 2,
        });
    }
    let mut y = BitWord::empty();
    let mut z = BitWord::empty();
    for pair in w.bits().chunks(2) {
        y.push(pair[0]);
        z.push(pair[1]);
    }
    Ok((y, z))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `N⊗M`: null `G_δ` on the first coordinate, meager `F_σ` on the plane.
    NullMeager,
    /// `M⊗N`: meager `F_σ` on the first coordinate, null `G_δ` on the plane.
    MeagerNull,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::NullMeager => "nm",
            Variant::MeagerNull => "mn",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProductParam {
    NullMeager {
        null: NullParam,
        meager: MeagerParam,
    },
    MeagerNull {
        meager: MeagerParam,
        null: NullParam,
    },
}

impl ProductParam {
    pub fn variant(&self) -> Variant {
        match self {
            ProductParam::NullMeager { .. } => Variant::NullMeager,
            ProductParam::MeagerNull { .. } => Variant::MeagerNull,
        }
    }
}

/// Stage arguments for the two components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Stages {
    /// `N` of the null component.
    pub null: u64,
    /// `n_max` of the meager component, at most its declared stage.
    pub meager: u64,
}

/// Stage membership of `(y, z)` in the product section.
pub fn product_member(
    pp: &ProductParam,
    y: &BitPrefix,
    z: &BitPrefix,
    stages: Stages,
) -> Result<Tri> {
    let plane = interleave(y, z)?;
    Ok(match pp {
        ProductParam::NullMeager { null, meager } => {
            let a = null_member(null, y, stages.null)?;
            let b = meager_eval(meager, &plane, meager.rows, stages.meager)?;
            a.or(b)
        }
        ProductParam::MeagerNull { meager, null } => {
            let a = meager_eval(meager, y, meager.rows, stages.meager)?;
            let b = null_member(null, &plane, stages.null)?;
            a.or(b)
        }
    })
}

/// Input for one factor of a product encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorInput {
    /// Covers of a null set.
    Null(CoverFamily),
    /// Dense open sets whose intersection's complement is the meager set.
    Meager {
        dense_opens: Vec<Clopen>,
        n_max: u64,
    },
}

fn encode_null(part: &FactorInput) -> Result<NullParam> {
    match part {
        FactorInput::Null(family) => Ok(null_encode(family)?.param),
        FactorInput::Meager { .. } => Err(Error::InvariantViolated("expected null covers".into())),
    }
}

fn encode_meager(part: &FactorInput) -> Result<MeagerParam> {
    match part {
        FactorInput::Meager { dense_opens, n_max } => meager_encode(dense_opens, *n_max),
        FactorInput::Null(_) => Err(Error::InvariantViolated("expected dense open sets".into())),
    }
}

/// Encodes the factor part on the first coordinate and the planar part over
/// interleaved points.
pub fn product_encode(
    variant: Variant,
    x_part: &FactorInput,
    plane_part: &FactorInput,
) -> Result<ProductParam> {
    Ok(match variant {
        Variant::NullMeager => ProductParam::NullMeager {
            null: encode_null(x_part)?,
            meager: encode_meager(plane_part)?,
        },
        Variant::MeagerNull => ProductParam::MeagerNull {
            meager: encode_meager(x_part)?,
            null: encode_null(plane_part)?,
        },
    })
}

/// Finite stand-ins for "the section is not in the ideal".
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Proxy {
    /// Flag sections of density at least `ε`.
    Null(Dyadic),
    /// Flag sections meeting every cylinder of the given level.
    Nwd(u32),
}

pub const DIAGNOSTIC_MAX_LEVEL: u32 = 12;

/// For `B ⊆ 2^d × 2^d` (row-major: bit `x·2^d + y`), the words `x` whose
/// section `B_x` is flagged by the proxy.
pub fn section_diagnostic(b: &Mask, d: u32, proxy: &Proxy) -> Result<Mask> {
    if d > DIAGNOSTIC_MAX_LEVEL {
        return Err(Error::LevelTooLarge {
            level: d.into(),
            cap: DIAGNOSTIC_MAX_LEVEL,
        });
    }
    let side = 1usize << d;
    if b.len() != side * side {
        return Err(Error::LengthMismatch {
            left: b.len(),
            right: side * side,
        });
    }
    if let Proxy::Nwd(split) = proxy {
        if *split > d {
            return Err(Error::LevelTooLarge {
                level: (*split).into(),
                cap: d,
            });
        }
    }
    let mut out = Mask::zeros(side);
    for x in 0..side {
        let row = x * side;
        let flagged = match proxy {
            Proxy::Null(eps) => {
                let count = (row..row + side).filter(|&i| b.get(i)).count();
                Dyadic::new(count as u64, d) >= *eps
            }
            Proxy::Nwd(split) => {
                let width = side >> split;
                (0..1usize << split).all(|u| b.any_in(row + u * width, row + (u + 1) * width))
            }
        };
        out.set(x, flagged);
    }
    Ok(out)
}

/// Syntactic form of a set built from clopen sets by countable unions and
/// intersections, finite unions, and products with the whole space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Shape {
    Clopen,
    CountableUnion(Box<Shape>),
    CountableIntersection(Box<Shape>),
    FiniteUnion(Vec<Shape>),
    /// `S × 2^ω`.
    Cylinder(Box<Shape>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pointclass {
    Sigma(u32),
    Pi(u32),
    Delta1,
}

impl Shape {
    /// Least Borel class the shape lands in by counting alternations.
    pub fn pointclass(&self) -> Pointclass {
        match self {
            Shape::Clopen => Pointclass::Delta1,
            Shape::Cylinder(s) => s.pointclass(),
            Shape::CountableUnion(s) => match s.pointclass() {
                Pointclass::Delta1 => Pointclass::Sigma(1),
                Pointclass::Sigma(n) => Pointclass::Sigma(n),
                Pointclass::Pi(n) => Pointclass::Sigma(n + 1),
            },
            Shape::CountableIntersection(s) => match s.pointclass() {
                Pointclass::Delta1 => Pointclass::Pi(1),
                Pointclass::Pi(n) => Pointclass::Pi(n),
                Pointclass::Sigma(n) => Pointclass::Pi(n + 1),
            },
            Shape::FiniteUnion(parts) => {
                parts
                    .iter()
                    .fold(Pointclass::Delta1, |acc, p| match (acc, p.pointclass()) {
                        (Pointclass::Delta1, c) | (c, Pointclass::Delta1) => c,
                        (Pointclass::Sigma(a), Pointclass::Sigma(b)) => Pointclass::Sigma(a.max(b)),
                        (Pointclass::Pi(a), Pointclass::Pi(b)) => Pointclass::Pi(a.max(b)),
                        (Pointclass::Sigma(a), Pointclass::Pi(b))
                        | (Pointclass::Pi(b), Pointclass::Sigma(a)) => {
                            if a > b {
                                Pointclass::Sigma(a)
                            } else {
                                Pointclass::Sigma(b + 1)
                            }
                        }
                    })
            }
        }
    }

    /// Nesting depth of countable quantifiers.
    pub fn quantifier_depth(&self) -> u32 {
        match self {
            Shape::Clopen => 0,
            Shape::Cylinder(s) => s.quantifier_depth(),
            Shape::CountableUnion(s) | Shape::CountableIntersection(s) => 1 + s.quantifier_depth(),
            Shape::FiniteUnion(parts) => {
                parts.iter().map(Shape::quantifier_depth).max().unwrap_or(0)
            }
        }
    }
}

/// What [`null_member`] evaluates: `⋂_n ⋃_{k>n}` of clopen terms.
pub fn null_shape() -> Shape {
    Shape::CountableIntersection(Box::new(Shape::CountableUnion(Box::new(Shape::Clopen))))
}

/// What [`meager_eval`] evaluates: `⋃_r ⋂_n` of complements of clopen terms.
pub fn meager_shape() -> Shape {
    Shape::CountableUnion(Box::new(Shape::CountableIntersection(Box::new(
        Shape::Clopen,
    ))))
}

/// Shape of the product section, as assembled by [`product_member`].
pub fn product_shape(variant: Variant) -> Shape {
    match variant {
        Variant::NullMeager => Shape::FiniteUnion(alloc::vec![
            Shape::Cylinder(Box::new(null_shape())),
            meager_shape()
        ]),
        Variant::MeagerNull => Shape::FiniteUnion(alloc::vec![
            Shape::Cylinder(Box::new(meager_shape())),
            null_shape()
        ]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn w(s: &str) -> BitWord {
        BitWord::parse(s).unwrap()
    }

    #[test]
    fn interleave_examples() {
        assert_eq!(interleave(&w(""), &w("")).unwrap(), w(""));
        assert_eq!(interleave(&w("01"), &w("10")).unwrap(), w("0110"));
        assert!(interleave(&w("0"), &w("")).is_err());
        assert!(deinterleave(&w("011")).is_err());
        for len in 0..=6usize {
            for a in 0..1usize << len {
                for b in [0, a, (1 << len) - 1] {
                    let y = BitWord::from_index(len as u32, a);
                    let z = BitWord::from_index(len as u32, b);
                    assert_eq!(deinterleave(&interleave(&y, &z).unwrap()).unwrap(), (y, z));
                }
            }
        }
    }

    #[test]
    fn or_is_monotone() {
        for a in Tri::ALL {
            for a2 in Tri::ALL.into_iter().filter(|&x| a.refines_to(x)) {
                for b in Tri::ALL {
                    for b2 in Tri::ALL.into_iter().filter(|&x| b.refines_to(x)) {
                        assert!(a.or(b).refines_to(a2.or(b2)));
                    }
                }
            }
        }
    }

    fn point_covers(bits: &str, rows: usize) -> CoverFamily {
        CoverFamily::new(
            (0..rows)
                .map(|n| {
                    let stem = bits.repeat(n + 2);
                    vec![Clopen::cylinder(&w(&stem[..n + 2])).unwrap()]
                })
                .collect(),
        )
    }

    #[test]
    fn rectangle_law() {
        let x_part = FactorInput::Null(point_covers("1", 4));
        let plane = FactorInput::Meager {
            dense_opens: vec![Clopen::whole()],
            n_max: 3,
        };
        let pp = product_encode(Variant::NullMeager, &x_part, &plane).unwrap();
        let stages = Stages { null: 3, meager: 3 };
        let a = w("111111");
        for zi in 0..64 {
            let z = BitWord::from_index(6, zi);
            assert_eq!(
                product_member(&pp, &a, &z, stages).unwrap(),
                Tri::HoldsAtStage
            );
        }
        // away from the null part and inside the dense open set; the null
        // component can only refute cylinders at least as large as its unspent budget
        assert_eq!(
            product_member(&pp, &w("0"), &w("0"), stages).unwrap(),
            Tri::FailsAtStage
        );
        assert_eq!(
            product_member(&pp, &w("000000"), &w("000000"), stages).unwrap(),
            Tri::InsufficientData
        );
    }

    #[test]
    fn empty_parts() {
        let pp = product_encode(
            Variant::NullMeager,
            &FactorInput::Null(CoverFamily::default()),
            &FactorInput::Meager {
                dense_opens: vec![],
                n_max: 2,
            },
        )
        .unwrap();
        let r = product_member(&pp, &w("0101"), &w("1100"), Stages { null: 0, meager: 2 }).unwrap();
        assert_ne!(r, Tri::HoldsAtStage);
    }

    #[test]
    fn planar_part_round_trip() {
        // M⊗N with the null part covering interleave(a, b) for a = b = 0^ω
        let pp = product_encode(
            Variant::MeagerNull,
            &FactorInput::Meager {
                dense_opens: vec![Clopen::whole()],
                n_max: 2,
            },
            &FactorInput::Null(point_covers("0", 5)),
        )
        .unwrap();
        let a = w("000000");
        assert_eq!(
            product_member(&pp, &a, &a, Stages { null: 4, meager: 2 }).unwrap(),
            Tri::HoldsAtStage
        );
        assert!(product_encode(
            Variant::MeagerNull,
            &FactorInput::Null(CoverFamily::default()),
            &FactorInput::Null(CoverFamily::default())
        )
        .is_err());
    }

    #[test]
    fn diagnostic_examples() {
        let d = 3;
        let full = Mask::ones(64);
        assert_eq!(
            section_diagnostic(&full, d, &Proxy::Null(Dyadic::pow2_neg(1)))
                .unwrap()
                .count_ones(),
            8
        );
        assert_eq!(
            section_diagnostic(&full, d, &Proxy::Nwd(3))
                .unwrap()
                .count_ones(),
            8
        );
        let empty = Mask::zeros(64);
        assert!(
            section_diagnostic(&empty, d, &Proxy::Null(Dyadic::pow2_neg(1)))
                .unwrap()
                .none()
        );
        assert!(section_diagnostic(&empty, d, &Proxy::Nwd(0))
            .unwrap()
            .none());
        let mut diag = Mask::zeros(64);
        for x in 0..8 {
            diag.set(x * 8 + x, true);
        }
        assert!(
            section_diagnostic(&diag, d, &Proxy::Null(Dyadic::pow2_neg(1)))
                .unwrap()
                .none()
        );
        assert_eq!(
            section_diagnostic(&diag, d, &Proxy::Null(Dyadic::pow2_neg(3)))
                .unwrap()
                .count_ones(),
            8
        );
        // a single point meets the level-0 cylinder but not every level-1 one
        assert_eq!(
            section_diagnostic(&diag, d, &Proxy::Nwd(0))
                .unwrap()
                .count_ones(),
            8
        );
        assert!(section_diagnostic(&diag, d, &Proxy::Nwd(1)).unwrap().none());
        assert!(section_diagnostic(&Mask::zeros(1 << 26), 13, &Proxy::Nwd(0)).is_err());
    }

    #[test]
    fn product_is_sigma_three() {
        assert_eq!(null_shape().pointclass(), Pointclass::Pi(2));
        assert_eq!(meager_shape().pointclass(), Pointclass::Sigma(2));
        for v in [Variant::NullMeager, Variant::MeagerNull] {
            let s = product_shape(v);
            assert_eq!(s.pointclass(), Pointclass::Sigma(3));
            // two countable quantifiers inside the sections, one over the union of pieces
            assert_eq!(s.quantifier_depth() + 1, 3);
        }
    }
}
