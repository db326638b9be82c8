//! Isomorph-free enumeration of C4-free graphs and exact small Ramsey values.
//!
//! Graphs are grown one vertex at a time. Each level holds one canonical
//! representative per isomorphism class, keyed by its canonical key, so the
//! traversal order (and everything derived from it) is deterministic. A new
//! vertex adjacent to `S` keeps the graph C4-free iff no old vertex has two
//! neighbours in `S`.
//!
//! An optional minimum-degree target `delta` for the final order `N` prunes a
//! `k`-vertex graph with a vertex of degree `d` when `d + (N - k) < delta`:
//! such a vertex cannot reach degree `delta`. Every `k`-vertex induced subgraph
//! of a final graph with minimum degree `delta` passes this test, so no class
//! is lost.

mod canon;
mod small;

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use canon::{canonical_form, canonical_graph, canonical_key};
pub use small::{SmallGraph, MAX_ORDER};

use crate::bounds::star_upper;
use crate::graph::Graph;
use crate::witness::verify_witness;
use crate::{Error, Result};

/// Orders at or below this are also enumerated without pruning as a cross-check.
pub const CROSS_CHECK_LIMIT: usize = 10;

/// Seed for choosing the audited sample of rejected graphs.
const SAMPLE_SEED: u64 = 0x5eed;

/// Spending limit, charged with the number of graphs generated from each parent.
pub trait Budget {
    /// Records `graphs` more generated graphs; `false` once the budget is spent.
    fn charge(&mut self, graphs: u64) -> bool;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Unlimited;

impl Budget for Unlimited {
    fn charge(&mut self, _: u64) -> bool {
        true
    }
}

#[derive(Clone, Copy, Debug)]
pub struct GraphBudget {
    pub remaining: u64,
}

impl Budget for GraphBudget {
    fn charge(&mut self, graphs: u64) -> bool {
        match self.remaining.checked_sub(graphs) {
            Some(r) => {
                self.remaining = r;
                true
            }
            None => {
                self.remaining = 0;
                false
            }
        }
    }
}

/// Whether a `k`-vertex graph can still reach minimum degree `min_degree` at order `target`.
pub fn can_reach(g: &SmallGraph, target: usize, min_degree: usize) -> bool {
    let slack = target - g.order();
    (0..g.order()).all(|v| g.degree(v) + slack >= min_degree)
}

/// C4-free one-vertex extensions of `parent` that pass the degree test.
pub fn extensions(parent: &SmallGraph, target: usize, min_degree: usize) -> Vec<SmallGraph> {
    fn rec(p: &SmallGraph, i: usize, mask: u32, cover: u32, out: &mut Vec<u32>) {
        if i == p.order() {
            out.push(mask);
            return;
        }
        rec(p, i + 1, mask, cover, out);
        if p.row(i) & cover == 0 {
            rec(p, i + 1, mask | 1 << i, cover | p.row(i), out);
        }
    }
    assert!(parent.order() < target && target <= MAX_ORDER);
    let mut masks = Vec::new();
    rec(parent, 0, 0, 0, &mut masks);
    masks
        .into_iter()
        .map(|m| parent.with_vertex(m))
        .filter(|g| can_reach(g, target, min_degree))
        .collect()
}

/// Canonical children of `parent`: `(key, canonically relabelled child)`.
pub fn canonical_children(parent: &SmallGraph, target: usize, min_degree: usize) -> Vec<(u128, SmallGraph)> {
    extensions(parent, target, min_degree)
        .into_iter()
        .map(|child| {
            let (key, perm) = canonical_form(&child);
            (key, child.permuted(&perm))
        })
        .collect()
}

/// Expands a batch of parents, returning one child list per parent in input order.
pub trait Expander {
    fn expand(&self, parents: &[SmallGraph], target: usize, min_degree: usize) -> Vec<Vec<(u128, SmallGraph)>>;
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl Expander for Sequential {
    fn expand(&self, parents: &[SmallGraph], target: usize, min_degree: usize) -> Vec<Vec<(u128, SmallGraph)>> {
        parents.iter().map(|p| canonical_children(p, target, min_degree)).collect()
    }
}

/// Parents handed to an [`Expander`] at once.
const BATCH: usize = 512;

/// Canonical representatives of the next order, with the number of graphs generated.
pub fn next_level(level: &[SmallGraph], target: usize, min_degree: usize) -> (BTreeMap<u128, SmallGraph>, u64) {
    let mut next = BTreeMap::new();
    let mut generated = 0;
    for children in Sequential.expand(level, target, min_degree) {
        generated += children.len() as u64;
        for (key, child) in children {
            next.entry(key).or_insert(child);
        }
    }
    (next, generated)
}

fn first_level(target: usize, min_degree: usize) -> BTreeMap<u128, SmallGraph> {
    let mut level = BTreeMap::new();
    let start = SmallGraph::new(target.min(1));
    if can_reach(&start, target, min_degree) {
        level.insert(0, start);
    }
    level
}

/// Level-by-level enumeration that can stop on budget and resume later.
#[derive(Clone, Debug)]
pub struct Enumerator {
    target: usize,
    min_degree: usize,
    level: BTreeMap<u128, SmallGraph>,
    next: BTreeMap<u128, SmallGraph>,
    /// Key of the last parent in `level` already expanded into `next`.
    resume_after: Option<u128>,
    examined: u64,
}

impl Enumerator {
    pub fn new(target: usize, min_degree: Option<usize>) -> Self {
        assert!(target <= MAX_ORDER, "order {target} exceeds {MAX_ORDER}");
        let min_degree = min_degree.unwrap_or(0);
        Enumerator {
            target,
            min_degree,
            level: first_level(target, min_degree),
            next: BTreeMap::new(),
            resume_after: None,
            examined: 0,
        }
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// Order of the graphs in the current level.
    pub fn current_order(&self) -> usize {
        self.level.values().next().map_or(self.target, SmallGraph::order)
    }

    pub fn is_complete(&self) -> bool {
        self.level.is_empty() || self.current_order() == self.target
    }

    pub fn examined(&self) -> u64 {
        self.examined
    }

    /// Runs until the target order is reached or `budget` is spent. On
    /// [`Error::BudgetExceeded`] the state is kept and `run` may be called again.
    pub fn run(&mut self, budget: &mut impl Budget) -> Result<()> {
        self.run_with(budget, &Sequential)
    }

    /// [`Enumerator::run`] with a custom expander. Children are merged parent
    /// by parent in key order, so the result does not depend on the expander.
    pub fn run_with(&mut self, budget: &mut impl Budget, expander: &impl Expander) -> Result<()> {
        use core::ops::Bound::{Excluded, Unbounded};
        while !self.is_complete() {
            let lower = self.resume_after.map_or(Unbounded, Excluded);
            let parents: Vec<(u128, SmallGraph)> = self.level.range((lower, Unbounded)).map(|(k, g)| (*k, *g)).collect();
            for batch in parents.chunks(BATCH) {
                let graphs: Vec<SmallGraph> = batch.iter().map(|(_, g)| *g).collect();
                let expanded = expander.expand(&graphs, self.target, self.min_degree);
                for (&(key, _), children) in batch.iter().zip(expanded) {
                    let count = children.len() as u64;
                    for (k, child) in children {
                        self.next.entry(k).or_insert(child);
                    }
                    self.examined += count;
                    self.resume_after = Some(key);
                    // charged after the parent is done, so every call makes progress
                    if !budget.charge(count) {
                        return Err(Error::BudgetExceeded);
                    }
                }
            }
            self.level = core::mem::take(&mut self.next);
            self.resume_after = None;
        }
        Ok(())
    }

    /// Graphs of the target order in canonical-key order, once complete.
    pub fn results(&self) -> Option<Vec<SmallGraph>> {
        self.is_complete().then(|| self.level.values().copied().collect())
    }
}

/// One representative of every C4-free isomorphism class on `n` vertices
/// (with minimum degree at least `min_degree`, if given), in canonical-key order.
pub fn enumerate_c4free(n: usize, min_degree: Option<usize>) -> Vec<SmallGraph> {
    let mut e = Enumerator::new(n, min_degree);
    e.run(&mut Unlimited).expect("unlimited budget");
    e.results().expect("complete")
}

/// All C4-free classes of every order `0..=max`, unpruned.
pub fn c4free_levels(max: usize) -> Vec<Vec<SmallGraph>> {
    assert!(max <= MAX_ORDER);
    let mut levels = alloc::vec![alloc::vec![SmallGraph::new(0)]];
    for k in 1..=max {
        let (next, _) = next_level(&levels[k - 1], k, 0);
        levels.push(next.into_values().collect());
    }
    levels
}

/// Minimum degree any graph on `order` vertices without `B_n` in its complement
/// must have: a vertex of complement degree `>= r(C4, K_{1,n})` would give a
/// C4 or a book. `None` for `n = 1`, where the star bound is unavailable.
pub fn min_degree_bound(n: usize, order: usize) -> Option<usize> {
    let star = star_upper(n as u64).ok()? as usize;
    Some(order.saturating_sub(star))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Refutation {
    /// No valid witness on `R - 1` vertices, so the value is below `R`.
    NoWitnessBelow,
    /// A valid witness on `R` vertices, so the value exceeds `R`.
    WitnessAtClaim,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchStatus {
    Confirmed,
    Refuted(Refutation),
    Inconclusive,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub n: usize,
    pub claim: usize,
    pub status: SearchStatus,
    /// First valid witness on `R - 1` vertices in canonical order.
    pub witness: Option<Graph>,
    /// A valid graph on `R` vertices, if one was found.
    pub counter_witness: Option<Graph>,
    /// Every C4-free graph on `R` vertices has `B_n` in its complement.
    pub impossibility: bool,
    pub graphs_examined: u64,
    pub min_degree_bound: Option<usize>,
    /// Classes left after pruning at order `R`, all rejected on a confirmation.
    pub rejected: u64,
    pub sampled: u64,
    /// Sampled rejected graphs that a direct recount did not reject.
    pub sample_failures: u64,
    /// Whether the unpruned enumeration agreed, when it was run.
    pub cross_check: Option<bool>,
}

/// Direct recount: some non-adjacent pair has at least `n` common non-neighbours.
fn naive_rejects(g: &SmallGraph, n: usize) -> bool {
    let k = g.order();
    (0..k).any(|u| {
        (u + 1..k).any(|v| {
            !g.has_edge(u, v)
                && (0..k)
                    .filter(|&w| w != u && w != v && !g.has_edge(u, w) && !g.has_edge(v, w))
                    .count()
                    >= n
        })
    })
}

fn enumerate(
    target: usize,
    min_degree: Option<usize>,
    budget: &mut impl Budget,
    expander: &impl Expander,
    examined: &mut u64,
) -> Option<Vec<SmallGraph>> {
    let mut e = Enumerator::new(target, min_degree);
    let done = e.run_with(budget, expander);
    *examined += e.examined();
    done.ok().and_then(|_| e.results())
}

/// Decides `r(C4, B_n) = R` by a witness search on `R - 1` vertices and an
/// impossibility proof on `R` vertices. Running out of budget is never a confirmation.
pub fn verify_exact(n: usize, claim: usize, budget: &mut impl Budget) -> Result<SearchOutcome> {
    verify_exact_with(n, claim, budget, &Sequential)
}

/// [`verify_exact`] with a custom expander; the outcome is the same for every expander.
pub fn verify_exact_with(
    n: usize,
    claim: usize,
    budget: &mut impl Budget,
    expander: &impl Expander,
) -> Result<SearchOutcome> {
    if n == 0 || claim < 2 || claim > MAX_ORDER {
        return Err(Error::OutOfRange(alloc::format!(
            "needs n >= 1 and 2 <= R <= {MAX_ORDER}, got n={n}, R={claim}"
        )));
    }
    let bound = min_degree_bound(n, claim);
    let mut out = SearchOutcome {
        n,
        claim,
        status: SearchStatus::Inconclusive,
        witness: None,
        counter_witness: None,
        impossibility: false,
        graphs_examined: 0,
        min_degree_bound: bound,
        rejected: 0,
        sampled: 0,
        sample_failures: 0,
        cross_check: None,
    };

    let Some(below) = enumerate(claim - 1, None, budget, expander, &mut out.graphs_examined) else {
        return Ok(out);
    };
    let witness = below.iter().find(|g| verify_witness(&g.to_graph(), n).is_valid());
    out.witness = witness.map(SmallGraph::to_graph);

    let Some(at) = enumerate(claim, bound, budget, expander, &mut out.graphs_examined) else {
        return Ok(out);
    };
    out.rejected = at.len() as u64;
    if let Some(g) = at.iter().find(|g| verify_witness(&g.to_graph(), n).is_valid()) {
        out.counter_witness = Some(g.to_graph());
        out.status = SearchStatus::Refuted(Refutation::WitnessAtClaim);
        return Ok(out);
    }
    out.impossibility = true;

    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut sample: Vec<&SmallGraph> = at.iter().filter(|_| rng.gen_ratio(1, 100)).collect();
    if sample.is_empty() {
        sample.extend(at.first());
    }
    out.sampled = sample.len() as u64;
    out.sample_failures = sample.iter().filter(|g| !naive_rejects(g, n)).count() as u64;

    if claim <= CROSS_CHECK_LIMIT && bound.is_some_and(|b| b > 0) {
        let Some(all) = enumerate(claim, None, budget, expander, &mut out.graphs_examined) else {
            return Ok(out);
        };
        let missed = all.iter().find(|g| verify_witness(&g.to_graph(), n).is_valid());
        out.cross_check = Some(missed.is_none());
        if let Some(g) = missed {
            out.impossibility = false;
            out.counter_witness = Some(g.to_graph());
            out.status = SearchStatus::Refuted(Refutation::WitnessAtClaim);
            return Ok(out);
        }
    }

    out.status = if out.witness.is_none() {
        SearchStatus::Refuted(Refutation::NoWitnessBelow)
    } else if out.sample_failures > 0 {
        SearchStatus::Inconclusive
    } else {
        SearchStatus::Confirmed
    };
    Ok(out)
}
