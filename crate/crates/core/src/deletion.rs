//! Random vertex deletion from a polarity graph.
//!
//! Start from `ER_p` with `p` the smallest prime `>= sqrt(n) + 1/2`, delete a
//! uniform random `d`-subset so that `n + 2m` vertices survive, and keep the
//! result if every survivor still has degree at least
//! `m = floor(sqrt(n) - 6 n^0.2625)`. A C4-free survivor graph with minimum
//! degree `m` has at most `n - 1` common non-neighbours on any non-adjacent
//! pair, so it certifies `r(C4, B_n) > n + 2m`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::deletion_min_degree;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::graph::Graph;
use crate::interval::le_sqrt_plus_power;
use crate::primes::smallest_prime_above_sqrt_plus_half;
use crate::projective::build_er_graph;
use crate::witness::{verify_witness, WitnessReport};

/// Exponent `alpha / 2 = 0.2625` as a fraction.
const HALF_ALPHA: (u32, u32) = (21, 80);

/// Parameters derived from `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TrialParams {
    pub n: u64,
    /// Required surviving minimum degree.
    pub m: u64,
    pub p: u64,
    /// Order of `ER_p`.
    pub big_n: u64,
    /// Number of deleted vertices.
    pub d: u64,
}

impl TrialParams {
    /// Fails with [`Error::VacuousParameters`] when `m < 1` or `d < 0`, and
    /// with [`Error::Construction`] if `p` exceeds `sqrt(n) + n^0.2625 + 1`.
    pub fn new(n: u64) -> Result<Self> {
        let m = deletion_min_degree(n);
        if m < 1 {
            return Err(Error::VacuousParameters { n });
        }
        let m = m as u64;
        let p = smallest_prime_above_sqrt_plus_half(n);
        if le_sqrt_plus_power(p as i64 - 1, n, HALF_ALPHA.0, HALF_ALPHA.1) != Some(true) {
            return Err(Error::Construction(format!(
                "prime {p} exceeds sqrt({n}) + {n}^0.2625 + 1"
            )));
        }
        let big_n = p * p + p + 1;
        let d = big_n
            .checked_sub(n + 2 * m)
            .ok_or(Error::VacuousParameters { n })?;
        Ok(TrialParams { n, m, p, big_n, d })
    }

    /// Order of the surviving graph.
    pub fn surviving_order(&self) -> u64 {
        self.n + 2 * self.m
    }
}

impl fmt::Display for TrialParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} m={} p={} N={} d={}",
            self.n, self.m, self.p, self.big_n, self.d
        )
    }
}

/// Outcome of one seeded deletion.
#[derive(Clone, Debug)]
pub struct TrialReport {
    pub params: TrialParams,
    pub seed: u64,
    pub success: bool,
    pub surviving_order: u64,
    /// Survivors whose degree dropped below `m`.
    pub bad_vertices: usize,
    /// Deleted vertices of `ER_p`, ascending.
    pub deleted: Vec<usize>,
    /// Survivor graph, present on success.
    pub survivor: Option<Graph>,
    /// Independent verification of the survivor, present on success.
    pub witness: Option<WitnessReport>,
}

impl TrialReport {
    /// `n + 2m + 1` when the trial produced a verified certificate.
    pub fn certified_lower(&self) -> Option<u64> {
        self.witness
            .as_ref()
            .filter(|w| w.is_valid())
            .map(|_| self.surviving_order + 1)
    }
}

impl fmt::Display for TrialReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.params;
        writeln!(f, "n\t{}", p.n)?;
        writeln!(f, "m\t{}", p.m)?;
        writeln!(f, "p\t{}", p.p)?;
        writeln!(f, "N\t{}", p.big_n)?;
        writeln!(f, "d\t{}", p.d)?;
        writeln!(f, "seed\t{}", self.seed)?;
        writeln!(f, "surviving_order\t{}", self.surviving_order)?;
        writeln!(f, "bad_vertices\t{}", self.bad_vertices)?;
        writeln!(f, "success\t{}", self.success)?;
        match &self.witness {
            Some(w) if w.is_valid() => write!(f, "statement\tr(C4,B{}) > {}", p.n, self.surviving_order),
            _ => write!(f, "statement\tnone"),
        }
    }
}

/// `ER_p` built once for repeated trials.
pub struct DeletionBase {
    pub params: TrialParams,
    pub er: Graph,
}

impl DeletionBase {
    pub fn new(n: u64) -> Result<Self> {
        let params = TrialParams::new(n)?;
        let spec = FieldSpec::of_order(params.p)?;
        let er = build_er_graph(&spec).graph;
        Ok(DeletionBase { params, er })
    }

    /// The deleted set for `seed`: the first `d` entries of a seeded
    /// Fisher-Yates shuffle, ascending.
    pub fn deleted_set(&self, seed: u64) -> Vec<usize> {
        let big_n = self.params.big_n as usize;
        let d = self.params.d as usize;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut order: Vec<usize> = (0..big_n).collect();
        for i in 0..d {
            let j = rng.gen_range(i..big_n);
            order.swap(i, j);
        }
        order.truncate(d);
        order.sort_unstable();
        order
    }

    /// Survivors of `deleted` whose remaining degree is below `m`.
    pub fn bad_vertices(&self, deleted: &[usize]) -> usize {
        let mut gone = alloc::vec![false; self.er.order()];
        for &v in deleted {
            gone[v] = true;
        }
        let m = self.params.m as usize;
        (0..self.er.order())
            .filter(|&v| !gone[v])
            .filter(|&v| self.er.neighbors(v).filter(|&w| !gone[w]).count() < m)
            .count()
    }

    /// Whether `seed` succeeds, without building the survivor graph.
    pub fn succeeds(&self, seed: u64) -> bool {
        self.bad_vertices(&self.deleted_set(seed)) == 0
    }

    /// One trial. On success the survivor graph is re-verified from scratch;
    /// a survivor that fails verification is an error, never a certificate.
    pub fn run_trial(&self, seed: u64) -> Result<TrialReport> {
        let deleted = self.deleted_set(seed);
        let bad_vertices = self.bad_vertices(&deleted);
        let success = bad_vertices == 0;
        let mut report = TrialReport {
            params: self.params,
            seed,
            success,
            surviving_order: self.params.surviving_order(),
            bad_vertices,
            deleted,
            survivor: None,
            witness: None,
        };
        if success {
            let survivor = self.er.without_vertices(&report.deleted);
            let witness = verify_witness(&survivor, self.params.n as usize);
            if !witness.is_valid() {
                return Err(Error::Construction(format!(
                    "survivor for seed {seed} failed verification"
                )));
            }
            report.survivor = Some(survivor);
            report.witness = Some(witness);
        }
        Ok(report)
    }

    /// Trials with seeds `first_seed, first_seed + 1, ...` until one succeeds.
    pub fn retry_until_witness(&self, max_trials: u32, first_seed: u64) -> Result<TrialReport> {
        for i in 0..max_trials {
            let report = self.run_trial(first_seed.wrapping_add(u64::from(i)))?;
            if report.success {
                return Ok(report);
            }
        }
        Err(Error::TrialsExhausted { trials: max_trials })
    }
}

pub fn run_trial(n: u64, seed: u64) -> Result<TrialReport> {
    DeletionBase::new(n)?.run_trial(seed)
}

pub fn retry_until_witness(n: u64, max_trials: u32, first_seed: u64) -> Result<TrialReport> {
    DeletionBase::new(n)?.retry_until_witness(max_trials, first_seed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameters() {
        let p = TrialParams::new(10_000).unwrap();
        assert_eq!((p.m, p.p, p.big_n, p.d), (32, 101, 10_303, 239));
        assert_eq!(p.surviving_order(), 10_064);
        assert!(matches!(TrialParams::new(100), Err(Error::VacuousParameters { n: 100 })));
        assert!(matches!(retry_until_witness(100, 5, 0), Err(Error::VacuousParameters { .. })));
    }

    #[test]
    fn deleted_sets_are_uniform_subsets_and_deterministic() {
        let base = DeletionBase::new(10_000).unwrap();
        let a = base.deleted_set(3);
        assert_eq!(a, base.deleted_set(3));
        assert_ne!(a, base.deleted_set(4));
        assert_eq!(a.len(), 239);
        assert!(a.windows(2).all(|w| w[0] < w[1]));
        assert!(*a.last().unwrap() < 10_303);
    }
}
