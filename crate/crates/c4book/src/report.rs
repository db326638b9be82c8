//! Text and JSON forms of every report. Text is `key<TAB>value` lines in a
//! fixed order; JSON objects carry the same fields.

use std::fmt::Write as _;

use c4book_core::audit::AuditReport;
use c4book_core::bounds::{Bound, BoundsRecord};
use c4book_core::construct::ConstructionResult;
use c4book_core::deletion::TrialReport;
use c4book_core::graph::{graph6, BookNumber};
use c4book_core::search::{Refutation, SearchOutcome, SearchStatus};
use c4book_core::witness::{Verdict, WitnessReport};
use c4book_core::Graph;
use serde_json::{json, Value};

fn g6(g: &Graph) -> String {
    String::from_utf8(graph6::encode(g).expect("order fits graph6")).expect("graph6 is ASCII")
}

pub fn witness_json(r: &WitnessReport) -> Value {
    let (verdict, failure) = match r.verdict {
        Verdict::Valid => ("valid", None),
        Verdict::Invalid(f) => ("invalid", Some(f.to_string())),
    };
    json!({
        "order": r.order,
        "claimed_n": r.claimed_n,
        "c4_free": r.c4_free(),
        "c4": r.c4,
        "min_degree": r.min_degree,
        "book_max": match r.book {
            BookNumber::NoNonEdge => None,
            BookNumber::Pages { value, .. } => Some(value),
        },
        "verdict": verdict,
        "failure": failure,
        "certified_lower": r.certified_lower(),
    })
}

pub fn construction_text(c: &ConstructionResult) -> String {
    format!(
        "family\t{}\nq\t{}\nt\t{}\nn\t{}\n{}\n",
        c.family, c.q, c.t, c.target_book, c.report
    )
}

pub fn construction_json(c: &ConstructionResult) -> Value {
    json!({
        "family": c.family.to_string(),
        "q": c.q,
        "t": c.t,
        "n": c.target_book,
        "certified_lower": c.certified_lower,
        "graph6": g6(&c.graph),
        "report": witness_json(&c.report),
    })
}

fn bound_json(b: &Bound) -> Value {
    json!({ "value": b.value, "provenance": b.provenance })
}

/// Text form plus one machine-readable `record` line:
/// `record<TAB>n<TAB>lower<TAB>upper<TAB>exact|-<TAB>lower provenance<TAB>upper provenance`.
pub fn bounds_text(r: &BoundsRecord) -> String {
    let exact = r.exact.as_ref().map_or("-".to_string(), |e| e.value.to_string());
    format!(
        "{r}\nrecord\t{}\t{}\t{}\t{exact}\t{}\t{}\n",
        r.n, r.lower.value, r.upper.value, r.lower.provenance, r.upper.provenance
    )
}

pub fn bounds_json(r: &BoundsRecord) -> Value {
    json!({
        "n": r.n,
        "lower": bound_json(&r.lower),
        "upper": bound_json(&r.upper),
        "exact": r.exact.as_ref().map(bound_json),
    })
}

pub fn status_name(s: SearchStatus) -> &'static str {
    match s {
        SearchStatus::Confirmed => "confirmed",
        SearchStatus::Refuted(Refutation::NoWitnessBelow) => "refuted-no-witness-below",
        SearchStatus::Refuted(Refutation::WitnessAtClaim) => "refuted-witness-at-claim",
        SearchStatus::Inconclusive => "inconclusive",
    }
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map_or("none".to_string(), |v| v.to_string())
}

pub fn search_text(o: &SearchOutcome) -> String {
    let mut s = String::new();
    writeln!(s, "n\t{}", o.n).unwrap();
    writeln!(s, "claim\t{}", o.claim).unwrap();
    writeln!(s, "status\t{}", status_name(o.status)).unwrap();
    writeln!(s, "witness\t{}", opt(o.witness.as_ref().map(g6))).unwrap();
    writeln!(s, "counter_witness\t{}", opt(o.counter_witness.as_ref().map(g6))).unwrap();
    writeln!(s, "impossibility\t{}", o.impossibility).unwrap();
    writeln!(s, "graphs_examined\t{}", o.graphs_examined).unwrap();
    writeln!(s, "min_degree_bound\t{}", opt(o.min_degree_bound)).unwrap();
    writeln!(s, "rejected\t{}", o.rejected).unwrap();
    writeln!(s, "sampled\t{}", o.sampled).unwrap();
    writeln!(s, "sample_failures\t{}", o.sample_failures).unwrap();
    writeln!(s, "cross_check\t{}", opt(o.cross_check)).unwrap();
    s
}

pub fn search_json(o: &SearchOutcome) -> Value {
    json!({
        "n": o.n,
        "claim": o.claim,
        "status": status_name(o.status),
        "witness": o.witness.as_ref().map(g6),
        "counter_witness": o.counter_witness.as_ref().map(g6),
        "impossibility": o.impossibility,
        "graphs_examined": o.graphs_examined,
        "min_degree_bound": o.min_degree_bound,
        "rejected": o.rejected,
        "sampled": o.sampled,
        "sample_failures": o.sample_failures,
        "cross_check": o.cross_check,
    })
}

pub fn trial_json(r: &TrialReport) -> Value {
    let p = &r.params;
    json!({
        "n": p.n,
        "m": p.m,
        "p": p.p,
        "N": p.big_n,
        "d": p.d,
        "seed": r.seed,
        "surviving_order": r.surviving_order,
        "bad_vertices": r.bad_vertices,
        "success": r.success,
        "certified_lower": r.certified_lower(),
        "graph6": r.survivor.as_ref().map(g6),
    })
}

pub fn audit_json(r: &AuditReport) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| json!({ "name": c.name, "passed": c.passed, "evidence": c.evidence, "note": c.note }))
        .collect();
    json!({ "all_passed": r.all_passed(), "checks": checks })
}
