//! Worst-case sizes guaranteed by the two sieves, and the thresholds derived
//! from them.
//!
//! The arc sieve at step `s` turns a system of size `n` into one of size at
//! least `(s+1) + ceil((n-s-1)/s)`; the monotone sieve into one of size at
//! least `(s+1) + ceil(sqrt(n-s-1))`. Iterating these worst cases until the
//! processed prefix covers the system gives the final guaranteed size, and
//! `n1(t)` / `n2(t)` are the least starting sizes whose final size reaches `t`.
//!
//! The least starting size is obtained by running the recurrence backwards
//! (each step is monotone in `n`, so the least admissible predecessor of a
//! required size is explicit), then confirmed by forward simulation at `n` and
//! `n - 1`. Small results are additionally confirmed by an upward scan that
//! checks the simulation is monotone over the scanned range.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub const DEFAULT_CEILING_DIGITS: usize = 10_000;

/// Bounds up to this value are also confirmed by an upward scan.
const SCAN_LIMIT: u64 = 20_000;

pub fn ceil_sqrt(x: usize) -> usize {
    let r = x.isqrt();
    if r * r == x {
        r
    } else {
        r + 1
    }
}

fn ceil_sqrt_big(x: &BigUint) -> BigUint {
    let r = x.sqrt();
    if &(&r * &r) == x {
        r
    } else {
        r + 1u32
    }
}

/// Final size of the worst-case arc-sieve run starting from size `n`.
pub fn simulate_separated(n: &BigUint) -> BigUint {
    let mut size = n.clone();
    let mut s: u64 = 1;
    while BigUint::from(s + 1) < size {
        let rest = &size - (s + 1);
        size = (rest + (s - 1)) / s + (s + 1);
        s += 1;
    }
    size
}

/// Final size of the worst-case monotone-sieve run starting from size `n`.
pub fn simulate_monotone(n: &BigUint) -> BigUint {
    let mut size = n.clone();
    let mut s: u64 = 0;
    while BigUint::from(s + 1) < size {
        let rest = &size - (s + 1);
        size = ceil_sqrt_big(&rest) + (s + 1);
        s += 1;
    }
    size
}

/// Least `n >= t` whose simulated final size reaches `t`, by upward scan.
/// Panics if the simulation is not monotone over the scanned range.
pub fn least_n_by_scan(t: u64, simulate: fn(&BigUint) -> BigUint, max_n: u64) -> Option<u64> {
    let target = BigUint::from(t);
    let mut previous = BigUint::zero();
    for n in t..=max_n {
        let reached = simulate(&BigUint::from(n));
        assert!(reached >= previous, "simulated size is not monotone at n = {n}");
        if reached >= target {
            return Some(n);
        }
        previous = reached;
    }
    None
}

/// Exact values of `n1`, `n2` and `n0 = n1(n2(n2(4m)))` below a ceiling.
#[derive(Clone, Debug)]
pub struct BoundTable {
    max_digits: usize,
    limit: BigUint,
}

impl Default for BoundTable {
    fn default() -> Self {
        BoundTable::new(DEFAULT_CEILING_DIGITS)
    }
}

impl BoundTable {
    /// Values with more than `max_digits` decimal digits report
    /// [`Error::Overflow`].
    pub fn new(max_digits: usize) -> Self {
        BoundTable {
            max_digits,
            limit: BigUint::from(10u32).pow(max_digits as u32),
        }
    }

    pub fn max_digits(&self) -> usize {
        self.max_digits
    }

    fn check(&self, value: &BigUint) -> Result<()> {
        if value >= &self.limit {
            Err(Error::Overflow {
                max_digits: self.max_digits,
            })
        } else {
            Ok(())
        }
    }

    fn confirm(&self, t: u64, n: &BigUint, simulate: fn(&BigUint) -> BigUint) {
        let target = BigUint::from(t);
        assert!(simulate(n) >= target, "bound {n} does not reach {t}");
        if n > &target {
            let below = n - 1u32;
            assert!(simulate(&below) < target, "bound {n} for {t} is not least");
        }
        if let Some(small) = n.to_u64().filter(|&v| v <= SCAN_LIMIT) {
            assert_eq!(least_n_by_scan(t, simulate, small), Some(small));
        }
    }

    pub fn n1(&self, t: u64) -> Result<BigUint> {
        if t == 0 {
            return Err(Error::SizeTooSmall { size: 0, min: 1 });
        }
        let n = if t <= 2 {
            BigUint::from(t)
        } else {
            // Need `n - s - 1 >= 1` for s = 1..=t-2 along the run.
            let mut need = BigUint::one();
            for s in (1..=t - 3).rev() {
                need = need * s + 1u32;
                self.check(&need)?;
            }
            need + 2u32
        };
        self.check(&n)?;
        self.confirm(t, &n, simulate_separated);
        Ok(n)
    }

    pub fn n2(&self, t: u64) -> Result<BigUint> {
        if t == 0 {
            return Err(Error::SizeTooSmall { size: 0, min: 1 });
        }
        let n = if t == 1 {
            BigUint::one()
        } else {
            // Need `n - s - 1 >= 1` for s = 0..=t-2 along the run.
            let mut need = BigUint::one();
            for _ in 0..t - 2 {
                need = &need * &need + 1u32;
                self.check(&need)?;
            }
            need + 1u32
        };
        self.check(&n)?;
        self.confirm(t, &n, simulate_monotone);
        Ok(n)
    }

    pub fn n0(&self, m: u64) -> Result<BigUint> {
        if m == 0 {
            return Err(Error::SizeTooSmall { size: 0, min: 1 });
        }
        let as_size = |v: BigUint| {
            v.to_u64().ok_or(Error::Overflow {
                max_digits: self.max_digits,
            })
        };
        let inner = as_size(self.n2(4 * m)?)?;
        let middle = as_size(self.n2(inner)?)?;
        self.n1(middle)
    }
}

pub fn bound_n1(t: u64) -> Result<BigUint> {
    BoundTable::default().n1(t)
}

pub fn bound_n2(t: u64) -> Result<BigUint> {
    BoundTable::default().n2(t)
}

pub fn bound_n0(m: u64) -> Result<BigUint> {
    BoundTable::default().n0(m)
}
