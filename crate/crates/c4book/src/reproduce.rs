//! The reproduction matrix: one row per checked statement, each with a
//! runtime limit. Shared by the `reproduce` subcommand and the acceptance
//! test target.

use std::time::{Duration, Instant};

use c4book_core::audit::{audit_er_structure, check_neighbourhood_matchings, check_counterexample_claims, check_facts};
use c4book_core::bounds::{formula_bounds, double_star_upper, book_upper, KNOWN_VALUES};
use c4book_core::construct::{admissible_t, build_largest_t_witness, build_g, build_h, ConstructionResult};
use c4book_core::deletion::DeletionBase;
use c4book_core::field::FieldSpec;
use c4book_core::graph::{graph6, BookNumber, Diameter};
use c4book_core::projective::build_er_graph;
use c4book_core::search::{c4free_levels, verify_exact_with, GraphBudget, SearchStatus, Unlimited};
use c4book_core::witness::verify_witness;
use c4book_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::oracle::{explicit_max_book, naive_contains_c4, page_scan_max_book, quadruple_scan_c4, reference_graph6};
use crate::parallel::{failing_seeds, Parallel};

#[derive(Clone, Debug)]
pub struct Row {
    pub id: &'static str,
    pub statement: &'static str,
    /// All checks in the row held.
    pub checks_passed: bool,
    /// First failed check, or a summary on success.
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl Row {
    pub fn passed(&self) -> bool {
        self.checks_passed && self.elapsed <= self.limit
    }

    /// `id<TAB>pass|fail<TAB>statement<TAB>detail`, without timing so that
    /// repeated runs print identical lines.
    pub fn line(&self) -> String {
        let verdict = if self.passed() { "pass" } else { "fail" };
        format!("{}\t{verdict}\t{}\t{}", self.id, self.statement, self.detail)
    }
}

/// Collects failures; the first one becomes the row detail.
#[derive(Default)]
struct Checks {
    failures: Vec<String>,
    count: usize,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.count += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn fail(&mut self, what: String) {
        self.check(false, || what);
    }
}

fn timed(id: &'static str, statement: &'static str, limit_secs: u64, body: impl FnOnce(&mut Checks) -> String) -> Row {
    let start = Instant::now();
    let mut checks = Checks::default();
    let summary = body(&mut checks);
    let elapsed = start.elapsed();
    let detail = match checks.failures.first() {
        Some(f) => format!("{} failed checks, first: {f}", checks.failures.len()),
        None => format!("{} checks; {summary}", checks.count),
    };
    Row {
        id,
        statement,
        checks_passed: checks.failures.is_empty(),
        detail,
        elapsed,
        limit: Duration::from_secs(limit_secs),
    }
}

/// Fast-path answers against the reference implementations.
fn oracle_agreement(c: &mut Checks, g: &Graph, label: &str) {
    let fast = g.find_c4();
    c.check(fast.is_some() == naive_contains_c4(g), || format!("{label}: C4 detection disagrees"));
    if let Some([a, b, x, d]) = fast {
        let cyc = g.has_edge(a, b) && g.has_edge(b, x) && g.has_edge(x, d) && g.has_edge(d, a);
        c.check(cyc, || format!("{label}: reported C4 is not a cycle"));
    }
    c.check(g.max_book_in_complement().value() == explicit_max_book(g), || {
        format!("{label}: complement book number disagrees")
    });
}

pub fn polarity_graphs() -> Row {
    timed("1", "polarity graphs ER_q, q in {2,3,4,5,7,8,9}", 10, |c| {
        for q in [2u32, 3, 4, 5, 7, 8, 9] {
            let er = build_er_graph(&FieldSpec::of_order(u64::from(q)).expect("prime power"));
            let g = &er.graph;
            let qs = q as usize;
            c.check(g.order() == qs * qs + qs + 1, || format!("q={q}: order {}", g.order()));
            let degrees = g.degrees();
            c.check(degrees.iter().all(|&d| d == qs || d == qs + 1), || format!("q={q}: degree outside {{q, q+1}}"));
            let low: Vec<usize> = (0..g.order()).filter(|&v| degrees[v] == qs).collect();
            c.check(low.len() == qs + 1, || format!("q={q}: {} vertices of degree q", low.len()));
            c.check(g.is_independent(&low), || format!("q={q}: degree-q vertices not independent"));
            c.check(low == er.absolute, || format!("q={q}: degree-q vertices differ from absolute points"));
            c.check(g.diameter() == Diameter::Finite(2), || format!("q={q}: diameter {:?}", g.diameter()));
            c.check(!g.contains_c4() && !naive_contains_c4(g), || format!("q={q}: contains C4"));
        }
        "orders, degrees, absolute points, diameter and C4-freeness exact".into()
    })
}

/// Order, C4-freeness, minimum degree, complement books, oracles and the matching upper bound.
fn construction_checks(c: &mut Checks, r: &ConstructionResult, label: &str) {
    let (q, t) = (r.q as usize, r.t as usize);
    let n = (q - 1) * (q - 1) + t - 2;
    let g = &r.graph;
    c.check(g.order() == q * q + t - 1, || format!("{label}: order {}", g.order()));
    c.check(!g.contains_c4(), || format!("{label}: contains C4"));
    c.check(g.min_degree().unwrap_or(0) >= q, || format!("{label}: min degree {:?}", g.min_degree()));
    let book = g.max_book_in_complement().value().unwrap_or(0);
    c.check(book < n, || format!("{label}: complement book {book} >= {n}"));
    oracle_agreement(c, g, label);
    let report = verify_witness(g, n);
    c.check(report.is_valid(), || format!("{label}: witness invalid"));
    c.check(report.certified_lower() == Some(q * q + t), || format!("{label}: certified {:?}", report.certified_lower()));
    let upper = book_upper(n as u64).map(|b| b.value);
    c.check(upper == Some((q * q + t) as u64), || format!("{label}: upper {upper:?} differs from {}", q * q + t));
}

pub fn even_constructions() -> Row {
    timed("2", "even q in {4,8,16}: H_q^t witnesses meet the upper bound", 30, |c| {
        let mut cases = 0;
        for q in [4u32, 8, 16] {
            for t in admissible_t(q) {
                match build_h(q, t) {
                    Ok(r) => construction_checks(c, &r, &format!("H(q={q},t={t})")),
                    Err(e) => c.fail(format!("H(q={q},t={t}): {e}")),
                }
                cases += 1;
            }
        }
        for (n, value) in [(7u64, 16u64), (9, 18), (10, 19)] {
            let t = (n + 2 - 9) as u32;
            let certified = build_h(4, t).ok().and_then(|r| r.report.certified_lower());
            c.check(certified == Some(value as usize), || format!("B{n}: certified {certified:?}"));
            c.check(KNOWN_VALUES[n as usize - 1] == value, || format!("B{n}: known value differs"));
        }
        format!("{cases} cases equal q^2 + t; r(C4,B7)=16, r(C4,B9)=18, r(C4,B10)=19")
    })
}

pub fn odd_constructions() -> Row {
    timed("3", "odd q in {5,7,9,13}: G_q^t witnesses meet the upper bound", 60, |c| {
        let mut cases = 0;
        for q in [5u32, 7, 9, 13] {
            for t in admissible_t(q) {
                match build_g(q, t) {
                    Ok(r) => construction_checks(c, &r, &format!("G(q={q},t={t})")),
                    Err(e) => c.fail(format!("G(q={q},t={t}): {e}")),
                }
                cases += 1;
            }
        }
        for (t, n, order) in [(2u32, 16usize, 26usize), (4, 18, 28)] {
            let r = build_g(5, t).ok();
            let ok = r.as_ref().is_some_and(|r| r.order() == order && r.target_book == n && r.report.is_valid());
            c.check(ok, || format!("G(q=5,t={t}) does not certify r(C4,B{n}) = {}", order + 1));
        }
        format!("{cases} cases; r(C4,B16)=27 and r(C4,B18)=29")
    })
}

pub fn largest_t_witnesses() -> Row {
    timed("4", "q in {4,5,7,8}: order q^2+q-2 witnesses for B_{q^2-q-2}", 60, |c| {
        for q in [4usize, 5, 7, 8] {
            let n = q * q - q - 2;
            match build_largest_t_witness(q as u32) {
                Ok(r) => {
                    let g = &r.graph;
                    c.check(g.order() == q * q + q - 2, || format!("q={q}: order {}", g.order()));
                    oracle_agreement(c, g, &format!("q={q}"));
                    c.check(verify_witness(g, n).is_valid(), || format!("q={q}: witness invalid for B{n}"));
                    let upper = book_upper(n as u64).map(|b| b.value);
                    c.check(upper == Some((q * q + q - 1) as u64), || format!("q={q}: upper {upper:?}"));
                }
                Err(e) => c.fail(format!("q={q}: {e}")),
            }
        }
        "r(C4,B_{q^2-q-2}) = q^2+q-1 for q = 4, 5, 7, 8".into()
    })
}

/// One extra vertex attached to every `stride`-th vertex of a witness.
fn near_witness(g: &Graph, stride: usize) -> Graph {
    let n = g.order();
    let mut h = Graph::new(n + 1);
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    if stride > 0 {
        for v in (0..n).step_by(stride) {
            h.add_edge(n, v);
        }
    }
    h
}

pub fn structure_audit() -> Row {
    timed("5", "structure audit: polarity frames, identities on all small C4-free graphs", 120, |c| {
        for q in [2u32, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
            match audit_er_structure(q) {
                Ok(r) => {
                    for f in r.failures() {
                        c.fail(format!("q={q}: {} {:?} {}", f.name, f.evidence, f.note));
                    }
                    c.check(true, String::new);
                }
                Err(e) => c.fail(format!("q={q}: {e}")),
            }
        }
        let levels = c4free_levels(9);
        let graphs: Vec<Graph> = levels.iter().flatten().map(|g| g.to_graph()).collect();
        let failures: Vec<String> = graphs
            .par_iter()
            .filter_map(|g| {
                let mut report = check_facts(g).ok()?;
                report.extend(check_neighbourhood_matchings(g).ok()?);
                let bad: Vec<String> = report.failures().map(|f| f.name.clone()).collect();
                let code = String::from_utf8(graph6::encode(g).ok()?).ok()?;
                (!bad.is_empty()).then(|| format!("{code}: {}", bad.join(",")))
            })
            .collect();
        for f in failures {
            c.fail(f);
        }
        c.check(graphs.len() > 800, || format!("only {} small graphs", graphs.len()));
        let mut near = 0;
        for (q, r) in admissible_t(4)
            .into_iter()
            .filter_map(|t| build_h(4, t).ok())
            .chain(admissible_t(5).into_iter().filter_map(|t| build_g(5, t).ok()))
            .map(|r| (r.q, r))
        {
            for stride in [0, 1, 2, 3, 5, 7] {
                let h = near_witness(&r.graph, stride);
                match check_counterexample_claims(&h, q as usize, r.t as usize) {
                    Ok(a) => c.check(a.contradiction_exposed(), || format!("q={q} t={} stride={stride}: no contradiction", r.t)),
                    Err(e) => c.fail(format!("q={q} t={}: {e}", r.t)),
                }
                near += 1;
            }
        }
        format!("{} small graphs, {near} near-witnesses", graphs.len())
    })
}

pub fn exact_small_values() -> Row {
    timed("6", "exhaustive search: r(C4,B1)=7 and r(C4,B2)=7", 600, |c| {
        for n in [1usize, 2] {
            let start = Instant::now();
            match verify_exact_with(n, 7, &mut Unlimited, &Parallel) {
                Ok(o) => {
                    c.check(o.status == SearchStatus::Confirmed, || format!("n={n}: {:?}", o.status));
                    c.check(o.sample_failures == 0, || format!("n={n}: sample failures"));
                    let w = o.witness.as_ref().map(|w| verify_witness(w, n).is_valid());
                    c.check(w == Some(true), || format!("n={n}: witness not independently valid"));
                }
                Err(e) => c.fail(format!("n={n}: {e}")),
            }
            c.check(start.elapsed() < Duration::from_secs(300), || format!("n={n}: over 5 min"));
        }
        "witness on 6 vertices and impossibility on 7 for n = 1, 2".into()
    })
}

/// Opt-in stretch row for three pages. Running out of budget is reported as inconclusive.
pub fn exact_three_pages() -> Row {
    timed("6b", "exhaustive search: r(C4,B3)=9", 3600, |c| {
        let mut budget = GraphBudget { remaining: 2_000_000_000 };
        match verify_exact_with(3, 9, &mut budget, &Parallel) {
            Ok(o) => {
                c.check(o.status == SearchStatus::Confirmed, || format!("{:?}", o.status));
                c.check(o.sample_failures == 0, || "sample failures".into());
                format!("{} graphs examined", o.graphs_examined)
            }
            Err(e) => {
                c.fail(e.to_string());
                String::new()
            }
        }
    })
}

pub fn bounds_consistency() -> Row {
    timed("7", "bounds: known values within computed bounds, book bound beats double star", 1, |c| {
        for (i, &v) in KNOWN_VALUES.iter().enumerate() {
            let n = i as u64 + 1;
            let (lo, hi) = formula_bounds(n);
            c.check(lo.value <= v && v <= hi.value, || format!("n={n}: {v} outside [{}, {}]", lo.value, hi.value));
        }
        c.check(double_star_upper(13) == 24, || format!("double star at 13 = {}", double_star_upper(13)));
        let mut cases = 0;
        for m in 4..=1000u64 {
            for t in 3..m {
                let n = (m - 1) * (m - 1) + t - 2;
                let b = book_upper(n).map(|b| b.value);
                c.check(b.is_some_and(|b| b < double_star_upper(n)), || format!("m={m} t={t}: {b:?} vs {}", double_star_upper(n)));
                cases += 1;
            }
        }
        format!("known values n=1..14; double star at 13 = 24; {cases} improvement cases")
    })
}

pub fn random_deletion() -> Row {
    timed("8", "random deletion at n=10000 certifies r(C4,B10000) > 10064", 120, |c| {
        let base = match DeletionBase::new(10_000) {
            Ok(b) => b,
            Err(e) => {
                c.fail(e.to_string());
                return String::new();
            }
        };
        let p = base.params;
        c.check((p.m, p.p, p.big_n, p.d) == (32, 101, 10_303, 239), || format!("params {p}"));
        match base.retry_until_witness(5, 0) {
            Ok(r) => {
                let survivor = r.survivor.as_ref().expect("success keeps the survivor");
                c.check(verify_witness(survivor, 10_000).is_valid(), || "certificate invalid".into());
                c.check(r.certified_lower() == Some(10_065), || format!("certified {:?}", r.certified_lower()));
            }
            Err(e) => c.fail(e.to_string()),
        }
        let failures = failing_seeds(&base, 0..100).len();
        c.check(failures < 5, || format!("{failures} of 100 seeds failed"));
        format!("{failures} of 100 seeds failed")
    })
}

fn random_graph(rng: &mut ChaCha8Rng) -> Graph {
    // half the instances are small enough for the quadruple scan
    let n = if rng.gen_bool(0.5) { rng.gen_range(6..=8) } else { rng.gen_range(9..=40) };
    match rng.gen_range(0..3) {
        // G(n, p) with random p
        0 => {
            let p: f64 = rng.gen_range(0.0..1.0);
            let mut g = Graph::new(n);
            for v in 1..n {
                for u in 0..v {
                    if rng.gen_bool(p) {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        }
        // random greedy C4-free graph, then perhaps one extra edge
        1 => {
            let mut g = Graph::new(n);
            for _ in 0..n * n / 2 {
                let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                if u != v && !g.has_edge(u, v) {
                    g.add_edge(u, v);
                    if g.contains_c4() {
                        g.remove_edge(u, v);
                    }
                }
            }
            if rng.gen_bool(0.5) {
                let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                g.add_edge(u, v);
            }
            g
        }
        // sparse or dense extremes
        _ => {
            let mut g = if rng.gen_bool(0.5) { Graph::new(n) } else { Graph::complete(n) };
            for _ in 0..rng.gen_range(0..4) {
                let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                if g.has_edge(u, v) {
                    g.remove_edge(u, v);
                } else {
                    g.add_edge(u, v);
                }
            }
            g
        }
    }
}

/// Orders up to which the O(n^4) scan also runs.
const QUADRUPLE_SCAN_LIMIT: usize = 12;

/// Disagreements between the fast paths and the reference implementations on `g`.
fn discrepancies(g: &Graph) -> u32 {
    let mut d = 0;
    d += u32::from(g.contains_c4() != naive_contains_c4(g));
    d += u32::from(g.max_book_in_complement().value() != explicit_max_book(g));
    d += u32::from(g.max_book_in_complement().value() != page_scan_max_book(g));
    if g.order() <= QUADRUPLE_SCAN_LIMIT {
        d += u32::from(g.contains_c4() != quadruple_scan_c4(g));
    }
    if let Some([a, b, x, y]) = g.find_c4() {
        d += u32::from(!(g.has_edge(a, b) && g.has_edge(b, x) && g.has_edge(x, y) && g.has_edge(y, a)));
    }
    if let BookNumber::Pages { value, u, v } = g.max_book_in_complement() {
        let pages = (0..g.order()).filter(|&w| w != u && w != v && !g.has_edge(u, w) && !g.has_edge(v, w)).count();
        d += u32::from(g.has_edge(u, v) || pages != value);
    }
    match graph6::encode(g) {
        Ok(bytes) => {
            d += u32::from(bytes != reference_graph6(g));
            d += u32::from(graph6::decode(&bytes).ok().as_ref() != Some(g));
        }
        Err(_) => d += 1,
    }
    d
}

/// Number of random instances in the oracle row.
pub const RANDOM_INSTANCES: u64 = 100_000;

pub fn oracle_equivalences() -> Row {
    timed("9", "fast paths agree with reference implementations", 300, |c| {
        let mut exhaustive = 0u64;
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
            for bits in 0u32..1 << pairs.len() {
                let mut g = Graph::new(n);
                for (k, &(u, v)) in pairs.iter().enumerate() {
                    if bits >> k & 1 == 1 {
                        g.add_edge(u, v);
                    }
                }
                let d = discrepancies(&g);
                c.check(d == 0, || format!("n={n} bits={bits:#x}: {d} discrepancies"));
                exhaustive += 1;
            }
        }
        let bad: Vec<u64> = (0..RANDOM_INSTANCES)
            .into_par_iter()
            .filter(|&seed| discrepancies(&random_graph(&mut ChaCha8Rng::seed_from_u64(seed))) != 0)
            .collect();
        c.check(bad.is_empty(), || format!("{} random instances disagree, first seed {:?}", bad.len(), bad.first()));
        // orders beyond the dense book limit use the sparse path
        for q in [37u32, 41] {
            let er = build_er_graph(&FieldSpec::of_order(u64::from(q)).expect("prime"));
            let g = er.graph.without_vertices(&[0, 5, 17]);
            c.check(g.max_book_in_complement().value() == explicit_max_book(&g), || format!("ER_{q} minus 3: book disagrees"));
            c.check(!g.contains_c4(), || format!("ER_{q} minus 3: C4 reported"));
        }
        format!("{exhaustive} exhaustive and {RANDOM_INSTANCES} random instances, zero discrepancies")
    })
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Options {
    /// Skip randomized trials.
    pub quick: bool,
    pub include_search_n3: bool,
}

/// Every row, in order.
pub fn run(opts: Options) -> Vec<Row> {
    let mut rows = vec![
        polarity_graphs(),
        even_constructions(),
        odd_constructions(),
        largest_t_witnesses(),
        structure_audit(),
        exact_small_values(),
    ];
    if opts.include_search_n3 {
        rows.push(exact_three_pages());
    }
    rows.push(bounds_consistency());
    if !opts.quick {
        rows.push(random_deletion());
    }
    rows.push(oracle_equivalences());
    rows
}
