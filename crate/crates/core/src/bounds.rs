//! Closed-form bounds on `r(C4, B_n)` and a best-known aggregator.
//!
//! Every square root is an exact integer square root. The only irrational
//! quantity, `n^0.2625` in the deletion bound, is enclosed in a dyadic interval
//! and floored on the sound side.
//!
//! Bounds proved for one book size are carried to others through
//! `r(C4, B_a) <= r(C4, B_b)` for `a <= b`; provenance strings say so.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::construct::{admissible_t, build_g, build_h, Family};
use crate::field::prime_power;
use crate::interval::floor_sqrt_minus_power;
use crate::witness::{verify_witness, WitnessReport};
use crate::{Error, Result};

/// Known exact values for `n = 1..=14`.
pub const KNOWN_VALUES: [u64; 14] = [7, 7, 9, 11, 12, 13, 16, 17, 18, 19, 20, 21, 22, 24];

/// Constructions are tabulated up to this field order.
pub const MAX_CERTIFIED_Q: u32 = 16;

const MONOTONE: &str = "monotonicity-extended";

/// `g(n) = n + floor(sqrt(n - 1)) + 2`.
pub fn double_star_step(n: u64) -> u64 {
    assert!(n >= 1);
    n + (n - 1).isqrt() + 2
}

/// `g(g(n))`.
pub fn double_star_upper(n: u64) -> u64 {
    double_star_step(double_star_step(n))
}

/// The simplified form `n + 2 floor(sqrt(n)) + 5`, an upper bound on [`double_star_upper`].
pub fn double_star_simplified(n: u64) -> u64 {
    n + 2 * n.isqrt() + 5
}

/// Upper bound `m^2 + t` for `B_{(m-1)^2 + t - 2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BookUpper {
    pub value: u64,
    pub m: u64,
    pub t: u64,
}

impl BookUpper {
    /// The book size the bound is proved for.
    pub fn book(&self) -> u64 {
        (self.m - 1) * (self.m - 1) + self.t - 2
    }
}

/// Smallest `m^2 + t` over `m >= 4, 0 <= t <= m - 1` with
/// `(m-1)^2 + t - 2 >= n`. `None` when it is worse than [`double_star_upper`].
pub fn book_upper(n: u64) -> Option<BookUpper> {
    assert!(n >= 1);
    // the first m with a feasible t minimises m^2 + t, since (m+1)^2 > m^2 + m - 1
    let mut m = 4u64;
    while (m - 1) * (m - 1) + (m - 1) < n + 2 {
        m += 1;
    }
    let t = (n + 2).saturating_sub((m - 1) * (m - 1));
    let bound = BookUpper {
        value: m * m + t,
        m,
        t,
    };
    (bound.value <= double_star_upper(n)).then_some(bound)
}

/// Upper bound for `r(C4, K_{1,n})`: `n + floor(sqrt(n-1)) + 2`, one less when
/// `n - 1` is a perfect square.
pub fn star_upper(n: u64) -> Result<u64> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("star bound needs n >= 2, got {n}")));
    }
    let r = (n - 1).isqrt();
    let base = n + r + 2;
    Ok(if r * r == n - 1 { base - 1 } else { base })
}

/// `floor(sqrt(n) - 6 n^0.2625)`, the minimum degree used by the deletion bound.
pub fn deletion_min_degree(n: u64) -> i64 {
    floor_sqrt_minus_power(n, 6, 21, 80)
}

/// `n + 2 floor(sqrt(n) - 6 n^0.2625)`, or `None` when the floor is not positive.
pub fn deletion_lower(n: u64) -> Option<u64> {
    let m = deletion_min_degree(n);
    (m > 0).then(|| n + 2 * m as u64)
}

/// A construction certificate `r(C4, B_n) >= q^2 + t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructionCertificate {
    pub family: Family,
    pub q: u32,
    pub t: u32,
    pub n: u64,
    pub value: u64,
}

impl ConstructionCertificate {
    pub fn tag(&self) -> String {
        format!("polarity-{}(q={},t={})", self.family, self.q, self.t)
    }
}

/// Certificates from both families for prime powers `4 <= q <= 16`, sorted by `n`.
pub fn construction_certificates() -> Vec<ConstructionCertificate> {
    let mut out = Vec::new();
    for q in 4..=MAX_CERTIFIED_Q {
        if prime_power(u64::from(q)).is_none() {
            continue;
        }
        let family = if q % 2 == 0 { Family::H } else { Family::G };
        for t in admissible_t(q) {
            let (qq, tt) = (u64::from(q), u64::from(t));
            out.push(ConstructionCertificate {
                family,
                q,
                t,
                n: (qq - 1) * (qq - 1) + tt - 2,
                value: qq * qq + tt,
            });
        }
    }
    out.sort_by_key(|c| (c.n, c.value));
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub value: u64,
    pub provenance: String,
}

impl Bound {
    fn new(value: u64, provenance: impl Into<String>) -> Self {
        Bound {
            value,
            provenance: provenance.into(),
        }
    }

    fn extended(value: u64, tag: &str, from: u64, to: u64) -> Self {
        if from == to {
            Bound::new(value, tag)
        } else {
            Bound::new(value, format!("{tag} at n={from}, {MONOTONE}"))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsRecord {
    pub n: u64,
    pub lower: Bound,
    pub upper: Bound,
    pub exact: Option<Bound>,
}

impl fmt::Display for BoundsRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n\t{}", self.n)?;
        writeln!(f, "lower\t{}\t{}", self.lower.value, self.lower.provenance)?;
        writeln!(f, "upper\t{}\t{}", self.upper.value, self.upper.provenance)?;
        match &self.exact {
            Some(e) => write!(f, "exact\t{}\t{}", e.value, e.provenance),
            None => write!(f, "exact\tunknown"),
        }
    }
}

fn keep_max(best: &mut Bound, cand: Bound) {
    if cand.value > best.value {
        *best = cand;
    }
}

fn keep_min(best: &mut Option<Bound>, cand: Bound) {
    if best.as_ref().is_none_or(|b| cand.value < b.value) {
        *best = Some(cand);
    }
}

/// Bounds from formulas and constructions only, without the known values.
pub fn formula_bounds(n: u64) -> (Bound, Bound) {
    assert!(n >= 1);
    let mut lower = Bound::new(n + 2, "trivial");
    if let Some(c) = construction_certificates()
        .into_iter()
        .filter(|c| c.n <= n)
        .max_by_key(|c| c.value)
    {
        keep_max(&mut lower, Bound::extended(c.value, &c.tag(), c.n, n));
    }
    if let Some(v) = deletion_lower(n) {
        keep_max(&mut lower, Bound::new(v, "random-deletion"));
    }

    // the double-star bound needs n >= 2; r(C4, B_1) <= r(C4, B_2) covers n = 1
    let mut upper = None;
    let star_at = n.max(2);
    keep_min(&mut upper, Bound::extended(double_star_upper(star_at), "double-star", star_at, n));
    if let Some(b) = book_upper(n) {
        let tag = format!("book-upper(m={},t={})", b.m, b.t);
        keep_min(&mut upper, Bound::extended(b.value, &tag, b.book(), n));
    }
    (lower, upper.expect("the double-star bound always applies"))
}

/// Best known bounds: known exact values for `n <= 14`, otherwise formulas and
/// constructions. `exact` is set when the two sides meet.
pub fn best_known(n: u64) -> BoundsRecord {
    let (mut lower, mut upper) = formula_bounds(n);
    for (i, &v) in KNOWN_VALUES.iter().enumerate() {
        let m = i as u64 + 1;
        if m <= n {
            keep_max(&mut lower, Bound::extended(v, "known-value", m, n));
        }
        if m >= n && v < upper.value {
            upper = Bound::extended(v, "known-value", m, n);
        }
    }
    let exact = if n as usize <= KNOWN_VALUES.len() {
        Some(Bound::new(KNOWN_VALUES[n as usize - 1], "known-value"))
    } else if lower.value == upper.value {
        Some(Bound::new(
            lower.value,
            format!("lower {}; upper {}", lower.provenance, upper.provenance),
        ))
    } else {
        None
    };
    BoundsRecord {
        n,
        lower,
        upper,
        exact,
    }
}

/// [`best_known`] plus, when its lower bound comes from a construction at this
/// exact `n`, the verifier's report on the rebuilt witness.
pub fn best_known_certified(n: u64) -> Result<(BoundsRecord, Option<WitnessReport>)> {
    let record = best_known(n);
    let cert = construction_certificates()
        .into_iter()
        .find(|c| c.n == n && c.value == record.lower.value && record.lower.provenance == c.tag());
    let report = match cert {
        Some(c) => {
            let built = match c.family {
                Family::H => build_h(c.q, c.t)?,
                Family::G => build_g(c.q, c.t)?,
            };
            Some(verify_witness(&built.graph, n as usize))
        }
        None => None,
    };
    Ok((record, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_star_values() {
        assert_eq!((double_star_step(13), double_star_upper(13)), (18, 24));
        assert_eq!((double_star_step(1), double_star_upper(1)), (3, 6));
        assert_eq!((double_star_step(7), double_star_upper(7)), (11, 16));
        for n in 1..10_000 {
            assert!(double_star_upper(n) <= double_star_simplified(n));
        }
    }

    #[test]
    fn book_upper_values() {
        let v = |n| book_upper(n).map(|b| (b.value, b.m, b.t));
        assert_eq!(v(7), Some((16, 4, 0)));
        assert_eq!(v(10), Some((19, 4, 3)));
        assert_eq!(v(16), Some((27, 5, 2)));
        assert_eq!(v(1), None);
        assert_eq!(v(40), Some((55, 7, 6)));
    }

    #[test]
    fn star_values() {
        assert_eq!(star_upper(10), Ok(14));
        assert_eq!(star_upper(9), Ok(13));
        assert_eq!(star_upper(2), Ok(4));
        assert!(star_upper(1).is_err());
    }

    #[test]
    fn deletion_values() {
        assert_eq!(deletion_lower(1_000_000), Some(1_001_548));
        assert_eq!(deletion_lower(100), None);
        assert_eq!(deletion_lower(10_000), Some(10_064));
        assert_eq!(deletion_lower(40_000), Some(40_206));
    }

    #[test]
    fn best_known_examples() {
        assert_eq!(best_known(9).exact.unwrap().value, 18);
        assert_eq!(best_known(18).exact.unwrap().value, 29);
        assert_eq!(best_known(40).exact.unwrap().value, 55);
        assert_eq!(best_known(1).upper.value, 7);
        let r = best_known(15);
        assert!(r.lower.value <= r.upper.value);
    }

    #[test]
    fn certificates_cover_small_fields() {
        let certs = construction_certificates();
        assert!(certs.iter().any(|c| c.n == 16 && c.value == 27));
        assert!(certs.iter().all(|c| c.q <= MAX_CERTIFIED_Q));
        assert_eq!(certs.iter().filter(|c| c.q == 16).count(), 15);
    }
}
