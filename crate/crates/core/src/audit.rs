//! Neighbourhood decompositions of C4-free graphs and checkable structural
//! statements about them and about polarity graphs.
//!
//! Around a vertex `v` with neighbours `v_1..v_m`:
//! `A_i = N(v_i) \ N[v]`, `B_i = (⋃_{x in A_i} N(x)) \ ({v_i} ∪ ⋃_j A_j)` and
//! `B = V \ (N[v] ∪ ⋃_i A_i)`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::construct::build_frame;
use crate::field::{prime_power, FieldSpec};
use crate::graph::{Diameter, Graph};
use crate::projective::{build_er_graph, PolarityGraph};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Vertices exhibiting the failure; empty on success.
    pub evidence: Vec<usize>,
    pub note: String,
}

impl CheckResult {
    fn pass(name: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: true,
            evidence: Vec::new(),
            note: String::new(),
        }
    }

    fn fail(name: impl Into<String>, evidence: Vec<usize>, note: impl Into<String>) -> Self {
        CheckResult {
            name: name.into(),
            passed: false,
            evidence,
            note: note.into(),
        }
    }

    fn from_first(name: &str, failure: Option<(Vec<usize>, String)>) -> Self {
        match failure {
            None => CheckResult::pass(name),
            Some((evidence, note)) => CheckResult::fail(name, evidence, note),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AuditReport {
    pub checks: Vec<CheckResult>,
}

impl AuditReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, c: CheckResult) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: AuditReport) {
        self.checks.extend(other.checks);
    }
}

/// One line per check: `name<TAB>pass` or `name<TAB>fail<TAB>evidence<TAB>note`.
impl fmt::Display for AuditReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.checks.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            if c.passed {
                write!(f, "{}\tpass", c.name)?;
            } else {
                let ev: Vec<String> = c.evidence.iter().map(|v| format!("{v}")).collect();
                write!(f, "{}\tfail\t{}\t{}", c.name, ev.join(","), c.note)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct PartitionDecomposition<'g> {
    pub graph: &'g Graph,
    pub v: usize,
    /// `v_1..v_m` in increasing order.
    pub neighbors: Vec<usize>,
    pub a: Vec<Vec<usize>>,
    pub b_sets: Vec<Vec<usize>>,
    pub b: Vec<usize>,
    /// Neighbours of `v` with degree `m`.
    pub tau: usize,
    /// Neighbours of `v` with degree at least `m + 2`.
    pub sigma: usize,
    /// Edges inside `N(v)`.
    pub e_n: usize,
}

fn edges_within(g: &Graph, s: &[usize]) -> usize {
    let mut e = 0;
    for (i, &x) in s.iter().enumerate() {
        e += s[i + 1..].iter().filter(|&&y| g.has_edge(x, y)).count();
    }
    e
}

fn edges_between(g: &Graph, s: &[usize], t: &[usize]) -> usize {
    s.iter()
        .map(|&x| t.iter().filter(|&&y| g.has_edge(x, y)).count())
        .sum()
}

fn neighbors_in(g: &Graph, x: usize, s: &[usize]) -> Vec<usize> {
    s.iter().copied().filter(|&y| g.has_edge(x, y)).collect()
}

/// Lowest-index vertex of minimum degree.
pub fn min_degree_vertex(g: &Graph) -> Option<usize> {
    let d = g.min_degree()?;
    (0..g.order()).find(|&v| g.degree(v) == d)
}

pub fn decompose(g: &Graph, v: usize) -> Result<PartitionDecomposition<'_>> {
    if let Some(c) = g.find_c4() {
        return Err(Error::ContainsC4(c));
    }
    if v >= g.order() || g.degree(v) == 0 {
        return Err(Error::OutOfRange(format!("vertex {v} must exist and have a neighbour")));
    }
    let n = g.order();
    let neighbors: Vec<usize> = g.neighbors(v).collect();
    let m = neighbors.len();
    let mut closed = vec![false; n];
    closed[v] = true;
    for &x in &neighbors {
        closed[x] = true;
    }
    let a: Vec<Vec<usize>> = neighbors
        .iter()
        .map(|&vi| g.neighbors(vi).filter(|&x| !closed[x]).collect())
        .collect();
    let mut in_a = vec![false; n];
    for &x in a.iter().flatten() {
        in_a[x] = true;
    }
    let b_sets = neighbors
        .iter()
        .zip(&a)
        .map(|(&vi, ai)| {
            let mut hit = vec![false; n];
            for &x in ai {
                for y in g.neighbors(x) {
                    hit[y] = true;
                }
            }
            (0..n).filter(|&y| hit[y] && y != vi && !in_a[y]).collect()
        })
        .collect();
    let b = (0..n).filter(|&y| !closed[y] && !in_a[y]).collect();
    let degree = |x: usize| g.degree(x);
    Ok(PartitionDecomposition {
        graph: g,
        v,
        tau: neighbors.iter().filter(|&&x| degree(x) == m).count(),
        sigma: neighbors.iter().filter(|&&x| degree(x) >= m + 2).count(),
        e_n: edges_within(g, &neighbors),
        neighbors,
        a,
        b_sets,
        b,
    })
}

impl PartitionDecomposition<'_> {
    pub fn m(&self) -> usize {
        self.neighbors.len()
    }

    /// `sum d(v_i) = m + sum |A_i| + 2 e(N(v))`.
    pub fn check_neighbour_degree_sum(&self) -> bool {
        let g = self.graph;
        let lhs: usize = self.neighbors.iter().map(|&x| g.degree(x)).sum();
        let rhs = self.m() + self.a.iter().map(Vec::len).sum::<usize>() + 2 * self.e_n;
        lhs == rhs
    }

    /// `sum_{x in A_i} (d(x) - 1) = 2 e(A_i) + sum_{j != i} e(A_i, A_j) + |B_i|`.
    pub fn check_a_set_degree_sum(&self, i: usize) -> bool {
        let g = self.graph;
        let ai = &self.a[i];
        let lhs: usize = ai.iter().map(|&x| g.degree(x) - 1).sum();
        let cross: usize = (0..self.m())
            .filter(|&j| j != i)
            .map(|j| edges_between(g, ai, &self.a[j]))
            .sum();
        lhs == 2 * edges_within(g, ai) + cross + self.b_sets[i].len()
    }

    /// `{v}`, `N(v)`, the `A_i` and `B` are pairwise disjoint and cover `V`.
    pub fn check_partition(&self) -> bool {
        let mut seen = vec![0u32; self.graph.order()];
        for &x in core::iter::once(&self.v)
            .chain(&self.neighbors)
            .chain(self.a.iter().flatten())
            .chain(&self.b)
        {
            seen[x] += 1;
        }
        seen.iter().all(|&c| c == 1)
            && self.b_sets.iter().flatten().all(|x| self.b.binary_search(x).is_ok())
    }

    /// The local matching statements at this decomposition (parts 2 to 6; part 1
    /// is global and handled by [`check_neighbourhood_matchings`]). Each entry is the first
    /// counterexample, if any.
    fn local_parts(&self) -> [Option<(Vec<usize>, String)>; 5] {
        let g = self.graph;
        let m = self.m();
        let mut part = [None, None, None, None, None];

        'p2: for ai in &self.a {
            for &x in ai {
                let hits = neighbors_in(g, x, ai);
                if hits.len() > 1 {
                    part[0] = Some((
                        vec![x, hits[0], hits[1]],
                        "vertex with two neighbours inside its own A set".into(),
                    ));
                    break 'p2;
                }
            }
        }
        'p3: for i in 0..m {
            for j in i + 1..m {
                if let Some(&x) = self.a[i].iter().find(|x| self.a[j].contains(x)) {
                    part[1] = Some((
                        vec![x, self.neighbors[i], self.neighbors[j]],
                        "vertex in two A sets".into(),
                    ));
                    break 'p3;
                }
            }
        }
        'p4: for i in 0..m {
            for j in 0..m {
                if i == j {
                    continue;
                }
                for &x in &self.a[i] {
                    let hits = neighbors_in(g, x, &self.a[j]);
                    if hits.len() > 1 {
                        part[2] = Some((
                            vec![x, hits[0], hits[1]],
                            format!("two neighbours in the A set of {}", self.neighbors[j]),
                        ));
                        break 'p4;
                    }
                }
            }
        }
        'p5: for i in 0..m {
            for j in i + 1..m {
                if !g.has_edge(self.neighbors[i], self.neighbors[j]) {
                    continue;
                }
                for &x in &self.a[i] {
                    if let Some(&y) = self.a[j].iter().find(|&&y| g.has_edge(x, y)) {
                        part[3] = Some((
                            vec![self.neighbors[i], self.neighbors[j], x, y],
                            "edge between A sets of adjacent neighbours".into(),
                        ));
                        break 'p5;
                    }
                }
            }
        }
        'p6: for (ai, bi) in self.a.iter().zip(&self.b_sets) {
            for &y in bi {
                let hits = neighbors_in(g, y, ai);
                if hits.len() != 1 {
                    let mut ev = vec![y];
                    ev.extend(hits.iter().take(2));
                    part[4] = Some((ev, format!("{} neighbours in its A set", hits.len())));
                    break 'p6;
                }
            }
        }
        part
    }
}

const MATCHING_CHECKS: [&str; 6] = [
    "neighbourhood-edges-matching",
    "a-set-edges-matching",
    "a-sets-disjoint",
    "a-set-pairs-matching",
    "adjacent-neighbours-no-a-edges",
    "b-vertex-one-a-neighbour",
];

fn first_neighbourhood_matching_failure(g: &Graph) -> Option<(Vec<usize>, String)> {
    for u in 0..g.order() {
        let nu: Vec<usize> = g.neighbors(u).collect();
        for &y in &nu {
            let hits = neighbors_in(g, y, &nu);
            if hits.len() > 1 {
                return Some((vec![u, y, hits[0], hits[1]], "vertex with two neighbours inside N(u)".into()));
            }
        }
    }
    None
}

/// All six matching statements, at every vertex of positive degree.
pub fn check_neighbourhood_matchings(g: &Graph) -> Result<AuditReport> {
    if let Some(c) = g.find_c4() {
        return Err(Error::ContainsC4(c));
    }
    let mut first: [Option<(Vec<usize>, String)>; 6] = Default::default();
    first[0] = first_neighbourhood_matching_failure(g);
    for v in (0..g.order()).filter(|&v| g.degree(v) > 0) {
        let d = decompose(g, v)?;
        for (slot, found) in first[1..].iter_mut().zip(d.local_parts()) {
            if slot.is_none() {
                *slot = found.map(|(ev, note)| (ev, format!("at v={v}: {note}")));
            }
        }
    }
    let mut report = AuditReport::default();
    for (name, f) in MATCHING_CHECKS.iter().zip(first) {
        report.push(CheckResult::from_first(name, f));
    }
    Ok(report)
}

/// Both counting identities at every vertex of positive degree.
pub fn check_facts(g: &Graph) -> Result<AuditReport> {
    let mut degree_sum = None;
    let mut a_set_sum = None;
    let mut partition = None;
    for v in (0..g.order()).filter(|&v| g.degree(v) > 0) {
        let d = decompose(g, v)?;
        if degree_sum.is_none() && !d.check_neighbour_degree_sum() {
            degree_sum = Some((vec![v], String::from("degree sum identity")));
        }
        if a_set_sum.is_none() {
            if let Some(i) = (0..d.m()).find(|&i| !d.check_a_set_degree_sum(i)) {
                a_set_sum = Some((vec![v, d.neighbors[i]], String::from("A-set degree identity")));
            }
        }
        if partition.is_none() && !d.check_partition() {
            partition = Some((vec![v], String::from("decomposition is not a partition")));
        }
    }
    let mut report = AuditReport::default();
    report.push(CheckResult::from_first("neighbour-degree-sum", degree_sum));
    report.push(CheckResult::from_first("a-set-degree-sum", a_set_sum));
    report.push(CheckResult::from_first("decomposition-partition", partition));
    Ok(report)
}

/// Outcome of evaluating the counterexample claims.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CounterexampleAudit {
    pub m: usize,
    pub t: usize,
    pub hypotheses: AuditReport,
    pub claims: AuditReport,
}

impl CounterexampleAudit {
    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.all_passed()
    }

    /// Either the graph is not a counterexample, or a claim derived from
    /// assuming it is fails on it.
    pub fn contradiction_exposed(&self) -> bool {
        !self.hypotheses_hold() || !self.claims.all_passed()
    }
}

/// Evaluates what the upper-bound argument derives about a graph on `m^2 + t`
/// vertices with no 4-cycle and no `B_{(m-1)^2 + t - 2}` in its complement.
/// The hypotheses are reported separately; the claims are evaluated whenever
/// the graph is C4-free.
pub fn check_counterexample_claims(g: &Graph, m: usize, t: usize) -> Result<CounterexampleAudit> {
    if m < 4 || t >= m {
        return Err(Error::OutOfRange(format!("needs m >= 4 and 0 <= t <= m - 1, got m={m}, t={t}")));
    }
    let book = (m - 1) * (m - 1) + t - 2;
    let mut hypotheses = AuditReport::default();
    let order = m * m + t;
    hypotheses.push(if g.order() == order {
        CheckResult::pass("order")
    } else {
        CheckResult::fail("order", vec![], format!("{} vertices, expected {order}", g.order()))
    });
    let c4 = g.find_c4();
    hypotheses.push(match c4 {
        None => CheckResult::pass("c4-free"),
        Some(c) => CheckResult::fail("c4-free", c.to_vec(), "contains C4"),
    });
    let bn = g.max_book_in_complement();
    hypotheses.push(match bn {
        crate::graph::BookNumber::Pages { value, u, v } if value >= book => {
            CheckResult::fail("complement-book-free", vec![u, v], format!("{value} common non-neighbours"))
        }
        _ => CheckResult::pass("complement-book-free"),
    });
    let mut claims = AuditReport::default();
    if c4.is_some() || g.order() == 0 {
        return Ok(CounterexampleAudit { m, t, hypotheses, claims });
    }

    let deg = g.degrees();
    let delta = g.min_degree().unwrap_or(0);
    claims.push(if delta == m {
        CheckResult::pass("min-degree-equals-m")
    } else {
        CheckResult::fail("min-degree-equals-m", min_degree_vertex(g).into_iter().collect(), format!("minimum degree {delta}"))
    });

    let low: Vec<usize> = (0..g.order()).filter(|&v| deg[v] == m).collect();
    let mut pair_fail = None;
    'pairs: for (i, &u) in low.iter().enumerate() {
        for &w in &low[i + 1..] {
            if !g.has_edge(u, w) && g.common_neighbor_count(u, w) == 1 {
                pair_fail = Some((vec![u, w], String::from("non-adjacent degree-m vertices with a common neighbour")));
                break 'pairs;
            }
        }
    }
    claims.push(CheckResult::from_first("degree-m-pairs-adjacent", pair_fail));

    // the remaining statements rely on the neighbourhood matching property
    let matching = first_neighbourhood_matching_failure(g);
    claims.push(CheckResult::from_first("neighbourhood-edges-matching", matching.clone()));

    let mut two_low = None;
    let mut a_degrees = None;
    let mut b_vs_a = None;
    let mut nbhd_edges = None;
    for &v in &low {
        let d = decompose(g, v)?;
        if two_low.is_none() && d.tau > 2 {
            two_low = Some((vec![v], format!("{} degree-m neighbours", d.tau)));
        }
        if a_degrees.is_none() {
            if let Some(&x) = d.a.iter().flatten().find(|&&x| deg[x] < m + 1) {
                a_degrees = Some((vec![v, x], format!("degree {}", deg[x])));
            }
        }
        if b_vs_a.is_none() && matching.is_none() {
            for (i, &vi) in d.neighbors.iter().enumerate() {
                let has_partner = d.neighbors.iter().any(|&vj| g.has_edge(vi, vj));
                if has_partner && d.b_sets[i].len() < d.a[i].len() {
                    b_vs_a = Some((
                        vec![v, vi],
                        format!("|B_i| = {} < |A_i| = {}", d.b_sets[i].len(), d.a[i].len()),
                    ));
                    break;
                }
            }
        }
        if nbhd_edges.is_none() && d.e_n < (m - 2).div_ceil(2) {
            nbhd_edges = Some((vec![v], format!("e(N(v)) = {}", d.e_n)));
        }
    }
    claims.push(CheckResult::from_first("at-most-two-degree-m-neighbours", two_low));
    claims.push(CheckResult::from_first("a-vertices-degree-above-m", a_degrees));
    let mut bva = CheckResult::from_first("b-set-at-least-a-set", b_vs_a);
    if matching.is_some() {
        bva.note = String::from("skipped: requires neighbourhood-edges-matching");
    }
    claims.push(bva);
    claims.push(CheckResult::from_first("neighbourhood-edge-lower-bound", nbhd_edges));
    Ok(CounterexampleAudit { m, t, hypotheses, claims })
}

fn check(name: &str, ok: bool, evidence: Vec<usize>, note: impl Into<String>) -> CheckResult {
    if ok {
        CheckResult::pass(name)
    } else {
        CheckResult::fail(name, evidence, note)
    }
}

/// Perfect matching between `s` and `t`: every vertex on each side has exactly
/// one neighbour on the other.
fn perfect_matching_failure(g: &Graph, s: &[usize], t: &[usize]) -> Option<Vec<usize>> {
    if s.len() != t.len() {
        return Some(Vec::new());
    }
    s.iter()
        .find(|&&x| neighbors_in(g, x, t).len() != 1)
        .or_else(|| t.iter().find(|&&y| neighbors_in(g, y, s).len() != 1))
        .map(|&x| vec![x])
}

fn generic_er_checks(er: &PolarityGraph, report: &mut AuditReport) {
    let g = &er.graph;
    let q = er.q() as usize;
    let n = g.order();
    report.push(check("order", n == q * q + q + 1, vec![], format!("{n} vertices")));
    report.push(check("diameter-two", g.diameter() == Diameter::Finite(2), vec![], format!("{:?}", g.diameter())));
    let c4 = g.find_c4();
    report.push(check("c4-free", c4.is_none(), c4.map(|c| c.to_vec()).unwrap_or_default(), "contains C4"));
    let bad = (0..n).find(|&v| g.degree(v) != q && g.degree(v) != q + 1);
    report.push(check("degrees-q-or-q-plus-one", bad.is_none(), bad.into_iter().collect(), "degree outside {q, q+1}"));
    let low: Vec<usize> = (0..n).filter(|&v| g.degree(v) == q).collect();
    report.push(check(
        "degree-q-are-absolute",
        low == er.absolute && low.len() == q + 1,
        low.clone(),
        "degree-q vertices differ from absolute points",
    ));
    let edge = low.iter().enumerate().find_map(|(i, &x)| low[i + 1..].iter().find(|&&y| g.has_edge(x, y)).map(|&y| vec![x, y]));
    report.push(check("degree-q-independent", edge.is_none(), edge.unwrap_or_default(), "edge between degree-q vertices"));
}

fn decomposition_checks(er: &PolarityGraph, report: &mut AuditReport) -> Result<()> {
    let g = &er.graph;
    let mut covered = None;
    for &v in &er.absolute {
        let d = decompose(g, v)?;
        if covered.is_none() && !d.b.is_empty() {
            covered = Some((vec![v, d.b[0]], String::from("B is not empty")));
        }
    }
    report.push(CheckResult::from_first("degree-q-decomposition-covers", covered));
    report.extend(check_facts(g)?);
    report.extend(check_neighbourhood_matchings(g)?);
    Ok(())
}

fn even_frame_checks(er: &PolarityGraph, report: &mut AuditReport) {
    let g = &er.graph;
    let frame = match build_frame(er) {
        Ok(f) => f,
        Err(e) => {
            report.push(CheckResult::fail("hub-frame", vec![], format!("{e}")));
            return;
        }
    };
    report.push(CheckResult::pass("hub-frame"));
    report.push(check(
        "hub-neighbourhood-is-degree-q-set",
        frame.w == er.absolute,
        frame.w.clone(),
        "hub neighbourhood differs from the degree-q vertices",
    ));
    let mut matching = None;
    for i in 0..frame.a.len() {
        for j in i + 1..frame.a.len() {
            if matching.is_none() {
                if let Some(ev) = perfect_matching_failure(g, &frame.a[i], &frame.a[j]) {
                    matching = Some((ev, format!("between A_w{} and A_w{}", i + 1, j + 1)));
                }
            }
        }
    }
    report.push(CheckResult::from_first("a-set-pairs-perfect-matching", matching));
    let indep = frame.a.iter().position(|a| !g.is_independent(a));
    report.push(check("a-sets-independent", indep.is_none(), indep.map(|i| frame.a[i].clone()).unwrap_or_default(), "A set spans an edge"));
}

fn odd_frame_checks(er: &PolarityGraph, report: &mut AuditReport) {
    let g = &er.graph;
    let q = er.q() as usize;
    let frame = match build_frame(er) {
        Ok(f) => f,
        Err(e) => {
            report.push(CheckResult::fail("hub-frame", vec![], format!("{e}")));
            return;
        }
    };
    report.push(CheckResult::pass("hub-frame"));
    let w = &frame.w;
    if q % 4 == 3 {
        let low = w.iter().find(|&&x| g.degree(x) != q + 1);
        report.push(check("hub-neighbours-degree-q-plus-one", low.is_none(), low.into_iter().copied().collect(), "degree-q hub neighbour"));
        let bad = (0..=q).step_by(2).find(|&i| !g.has_edge(w[i], w[i + 1]));
        report.push(check("hub-neighbourhood-perfect-matching", bad.is_none(), bad.map(|i| vec![w[i], w[i + 1]]).unwrap_or_default(), "consecutive pair not adjacent"));
    } else {
        let low: Vec<usize> = w.iter().copied().filter(|&x| g.degree(x) == q).collect();
        report.push(check(
            "two-degree-q-hub-neighbours-last",
            low == w[q - 1..] && !g.has_edge(w[q - 1], w[q]),
            low,
            "degree-q hub neighbours are not the non-adjacent final pair",
        ));
        let bad = (0..q - 1).step_by(2).find(|&i| !g.has_edge(w[i], w[i + 1]));
        report.push(check("hub-neighbourhood-perfect-matching", bad.is_none(), bad.map(|i| vec![w[i], w[i + 1]]).unwrap_or_default(), "consecutive pair not adjacent"));
    }
    let mut unmatched = None;
    'outer: for i in 0..w.len() {
        if g.degree(w[i]) != q + 1 {
            continue;
        }
        for j in 0..w.len() {
            if i != j && !g.has_edge(w[i], w[j]) {
                if let Some(ev) = perfect_matching_failure(g, &frame.a[i], &frame.a[j]) {
                    unmatched = Some((ev, format!("between A_w{} and A_w{}", i + 1, j + 1)));
                    break 'outer;
                }
            }
        }
    }
    report.push(CheckResult::from_first("non-adjacent-a-sets-perfect-matching", unmatched));
}

/// Every structural statement applicable to the parity of `q`, for prime
/// powers `2 <= q <= 16`. Frame statements need `q >= 4` (even) or `q >= 5` (odd).
pub fn audit_er_structure(q: u32) -> Result<AuditReport> {
    if !(2..=16).contains(&q) || prime_power(u64::from(q)).is_none() {
        return Err(Error::OutOfRange(format!("audit needs a prime power 2 <= q <= 16, got {q}")));
    }
    let er = build_er_graph(&FieldSpec::of_order(u64::from(q))?);
    let mut report = AuditReport::default();
    generic_er_checks(&er, &mut report);
    decomposition_checks(&er, &mut report)?;
    if q % 2 == 0 && q >= 4 {
        even_frame_checks(&er, &mut report);
    } else if q % 2 == 1 && q >= 5 {
        odd_frame_checks(&er, &mut report);
    }
    Ok(report)
}
