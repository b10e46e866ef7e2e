//! Exact binomial arithmetic with incremental partial sums.

use num_traits::{One, Zero};

use crate::space::Natural;

pub fn binomial(n: u64, k: u64) -> Natural {
    if k > n {
        return Natural::zero();
    }
    let k = k.min(n - k);
    let mut acc = Natural::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `Σ_{j ≤ r} C(n, j)` computed from scratch.
pub fn binomial_prefix_sum(n: u64, r: i64) -> Natural {
    PartialSum::new(n, r).sum().clone()
}

/// Running value of `S(n, r) = Σ_{j ≤ r} C(n, j)` that can step `n → n-1` and
/// `r → r-1` in O(1) big-integer operations each.
#[derive(Clone, Debug)]
pub(crate) struct PartialSum {
    n: u64,
    r: i64,
    sum: Natural,
    /// `C(n, min(r, n))`, zero when `r < 0`.
    term: Natural,
}

impl PartialSum {
    pub fn new(n: u64, r: i64) -> Self {
        if r < 0 {
            return PartialSum {
                n,
                r,
                sum: Natural::zero(),
                term: Natural::zero(),
            };
        }
        if r as u64 >= n {
            return PartialSum {
                n,
                r,
                sum: Natural::one() << n,
                term: Natural::one(),
            };
        }
        let mut term = Natural::one();
        let mut sum = Natural::one();
        for j in 1..=r as u64 {
            term = term * (n - j + 1) / j;
            sum += &term;
        }
        PartialSum { n, r, sum, term }
    }

    pub fn sum(&self) -> &Natural {
        &self.sum
    }

    pub fn step_n(&mut self) {
        debug_assert!(self.n > 0);
        let n = self.n;
        self.n -= 1;
        if self.r < 0 {
            return;
        }
        let r = self.r as u64;
        if r >= self.n {
            self.sum = Natural::one() << self.n;
            self.term = Natural::one();
        } else {
            // C(n-1, r) = C(n, r)(n-r)/n and S(n, r) = 2 S(n-1, r) - C(n-1, r)
            self.term = &self.term * (n - r) / n;
            self.sum = (&self.sum + &self.term) >> 1u32;
        }
    }

    pub fn step_r(&mut self) {
        self.r -= 1;
        if self.r < 0 {
            self.sum = Natural::zero();
            self.term = Natural::zero();
            return;
        }
        let r = self.r as u64;
        let n = self.n;
        if r >= n {
            return;
        }
        if r + 1 >= n {
            // leaving the clamped regime: S(n, n-1) = 2^n - 1
            self.sum = (Natural::one() << n) - 1u32;
            self.term = Natural::from(n);
        } else {
            self.sum -= &self.term;
            self.term = &self.term * (r + 1) / (n - r);
        }
    }

    pub fn step_to(&mut self, n: u64, r: i64) {
        while self.n > n {
            self.step_n();
        }
        while self.r > r {
            self.step_r();
        }
        debug_assert_eq!((self.n, self.r), (n, r));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(n: u64, r: i64) -> Natural {
        (0..=r.max(-1))
            .filter(|&j| j >= 0)
            .map(|j| binomial(n, j as u64))
            .sum()
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), Natural::from(6u32));
        assert_eq!(binomial(16, 8), Natural::from(12870u32));
        assert_eq!(binomial(3, 5), Natural::zero());
    }

    #[test]
    fn stepping_matches_scratch() {
        for n0 in 0..14u64 {
            for r0 in -1..16i64 {
                let mut s = PartialSum::new(n0, r0);
                assert_eq!(s.sum(), &brute(n0, r0));
                // walk down a staircase
                let (mut n, mut r) = (n0, r0);
                let mut flip = false;
                while n > 0 && r >= -1 {
                    if flip {
                        s.step_r();
                        r -= 1;
                    } else {
                        s.step_n();
                        n -= 1;
                    }
                    flip = !flip;
                    assert_eq!(s.sum(), &brute(n, r), "n={n} r={r} from {n0},{r0}");
                }
            }
        }
    }
}
