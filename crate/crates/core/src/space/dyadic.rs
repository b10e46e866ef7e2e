use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Zero};

use super::Natural;

/// Non-negative dyadic rational `num / 2^exp`, kept in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: Natural,
    exp: u32,
}

impl Dyadic {
    pub fn new(num: impl Into<Natural>, exp: u32) -> Self {
        let mut num = num.into();
        let mut exp = exp;
        if num.is_zero() {
            return Dyadic { num, exp: 0 };
        }
        let tz = num.trailing_zeros().unwrap_or(0).min(u64::from(exp)) as u32;
        num >>= tz;
        exp -= tz;
        Dyadic { num, exp }
    }

    pub fn zero() -> Self {
        Dyadic::new(0u32, 0)
    }

    pub fn one() -> Self {
        Dyadic::new(1u32, 0)
    }

    /// `2^-n`.
    pub fn pow2_neg(n: u32) -> Self {
        Dyadic::new(1u32, n)
    }

    /// `1 - 2^-n`.
    pub fn one_minus_pow2_neg(n: u32) -> Self {
        Dyadic::new((Natural::one() << n) - 1u32, n)
    }

    pub fn numerator(&self) -> &Natural {
        &self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn aligned(&self, other: &Dyadic) -> (Natural, Natural, u32) {
        let exp = self.exp.max(other.exp);
        (
            &self.num << (exp - self.exp),
            &other.num << (exp - other.exp),
            exp,
        )
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        let (a, b, exp) = self.aligned(other);
        Dyadic::new(a + b, exp)
    }

    /// `self - other`, or `None` when negative.
    pub fn checked_sub(&self, other: &Dyadic) -> Option<Dyadic> {
        let (a, b, exp) = self.aligned(other);
        if a < b {
            None
        } else {
            Some(Dyadic::new(a - b, exp))
        }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

impl core::iter::Sum for Dyadic {
    fn sum<I: Iterator<Item = Dyadic>>(iter: I) -> Dyadic {
        iter.fold(Dyadic::zero(), |acc, d| acc.add(&d))
    }
}
