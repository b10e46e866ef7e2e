/// Answer of a finite-stage membership query.
///
/// `HoldsAtStage` and `FailsAtStage` are final for the data supplied: raising a
/// stage bound never moves an answer from one to the other, it can only resolve
/// `InsufficientData`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tri {
    HoldsAtStage,
    FailsAtStage,
    InsufficientData,
}

impl Tri {
    pub const ALL: [Tri; 3] = [Tri::HoldsAtStage, Tri::FailsAtStage, Tri::InsufficientData];

    pub fn is_decided(self) -> bool {
        self != Tri::InsufficientData
    }

    /// Disjunction: holds if either side holds, fails only if both fail.
    pub fn or(self, other: Tri) -> Tri {
        match (self, other) {
            (Tri::HoldsAtStage, _) | (_, Tri::HoldsAtStage) => Tri::HoldsAtStage,
            (Tri::FailsAtStage, Tri::FailsAtStage) => Tri::FailsAtStage,
            _ => Tri::InsufficientData,
        }
    }

    /// True when going from `self` to `later` is an allowed refinement.
    pub fn refines_to(self, later: Tri) -> bool {
        !matches!(
            (self, later),
            (Tri::HoldsAtStage, Tri::FailsAtStage) | (Tri::FailsAtStage, Tri::HoldsAtStage)
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            Tri::HoldsAtStage => "HoldsAtStage",
            Tri::FailsAtStage => "FailsAtStage",
            Tri::InsufficientData => "InsufficientData",
        }
    }
}

impl From<bool> for Tri {
    fn from(b: bool) -> Self {
        if b {
            Tri::HoldsAtStage
        } else {
            Tri::FailsAtStage
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn or_table() {
        use Tri::*;
        assert_eq!(FailsAtStage.or(FailsAtStage), FailsAtStage);
        assert_eq!(FailsAtStage.or(InsufficientData), InsufficientData);
        assert_eq!(InsufficientData.or(HoldsAtStage), HoldsAtStage);
        for a in Tri::ALL {
            assert_eq!(a.or(HoldsAtStage), HoldsAtStage);
            for b in Tri::ALL {
                assert_eq!(a.or(b), b.or(a));
            }
        }
    }
}
