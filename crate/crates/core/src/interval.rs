//! Dyadic intervals with big-integer endpoints.
//!
//! An [`Interval`] at precision `P` is a pair of integers `lo <= hi` such that the
//! real value lies in `[lo / 2^P, hi / 2^P]`. Only the operations needed for
//! `sqrt(n) - c * n^(a/b)` style quantities are provided.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

const MAX_PRECISION: u32 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigInt,
    hi: BigInt,
    precision: u32,
}

impl Interval {
    pub fn exact(v: i64, precision: u32) -> Self {
        let x = BigInt::from(v) << precision;
        Interval {
            lo: x.clone(),
            hi: x,
            precision,
        }
    }

    /// Encloses `n^(num/den)`.
    pub fn root_power(n: u64, num: u32, den: u32, precision: u32) -> Self {
        assert!(den >= 1);
        // floor((n^num * 2^(den P))^(1/den)) = floor(n^(num/den) 2^P)
        let radicand = BigUint::from(n).pow(num) << (den as usize * precision as usize);
        let lo = BigInt::from(radicand.nth_root(den));
        let exact = BigUint::try_from(&lo).expect("nonnegative").pow(den) == radicand;
        let hi = if exact { lo.clone() } else { &lo + 1 };
        Interval { lo, hi, precision }
    }

    pub fn sqrt(n: u64, precision: u32) -> Self {
        Self::root_power(n, 1, 2, precision)
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn add(&self, other: &Interval) -> Interval {
        assert_eq!(self.precision, other.precision);
        Interval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
            precision: self.precision,
        }
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        assert_eq!(self.precision, other.precision);
        Interval {
            lo: &self.lo - &other.hi,
            hi: &self.hi - &other.lo,
            precision: self.precision,
        }
    }

    pub fn scale(&self, c: i64) -> Interval {
        let c = BigInt::from(c);
        let (a, b) = (&self.lo * &c, &self.hi * &c);
        let (lo, hi) = if c.is_negative() { (b, a) } else { (a, b) };
        Interval {
            lo,
            hi,
            precision: self.precision,
        }
    }

    /// Smallest and largest possible floor of a value in the interval.
    pub fn floor_range(&self) -> (BigInt, BigInt) {
        let d = BigInt::one() << self.precision;
        (self.lo.div_floor(&d), self.hi.div_floor(&d))
    }

    /// The floor, when every value in the interval has the same one.
    pub fn floor(&self) -> Option<i64> {
        let (a, b) = self.floor_range();
        (a == b).then(|| a.to_i64()).flatten()
    }

    /// Whether every value is `>= v`, every value is `< v`, or neither is known.
    pub fn compare_int(&self, v: i64) -> Option<core::cmp::Ordering> {
        let x = BigInt::from(v) << self.precision;
        if self.lo >= x {
            Some(core::cmp::Ordering::Greater)
        } else if self.hi < x {
            Some(core::cmp::Ordering::Less)
        } else if self.lo == self.hi {
            Some(core::cmp::Ordering::Equal)
        } else {
            None
        }
    }

    pub fn width_is_zero(&self) -> bool {
        (&self.hi - &self.lo).is_zero()
    }
}

/// Floor of `sqrt(n) - c * n^(num/den)`, refining precision until it is pinned
/// down. If it never is, the smaller candidate is returned, so the result never
/// exceeds the true floor.
pub fn floor_sqrt_minus_power(n: u64, c: i64, num: u32, den: u32) -> i64 {
    let mut precision = 64;
    loop {
        let x = Interval::sqrt(n, precision).sub(&Interval::root_power(n, num, den, precision).scale(c));
        let (lo, hi) = x.floor_range();
        if lo == hi || precision >= MAX_PRECISION {
            return lo.to_i64().expect("floor fits in i64");
        }
        precision *= 2;
    }
}

/// Decides `a <= sqrt(n) + n^(num/den)`. `None` if the precision limit is hit
/// before the comparison resolves.
pub fn le_sqrt_plus_power(a: i64, n: u64, num: u32, den: u32) -> Option<bool> {
    let mut precision = 64;
    loop {
        let x = Interval::sqrt(n, precision).add(&Interval::root_power(n, num, den, precision));
        match x.compare_int(a) {
            Some(core::cmp::Ordering::Less) => return Some(false),
            Some(_) => return Some(true),
            None if precision >= MAX_PRECISION => return None,
            None => precision *= 2,
        }
    }
}
