use std::collections::BTreeSet;

use c4book_core::audit::{check_neighbourhood_matchings, check_counterexample_claims, check_facts, decompose};
use c4book_core::construct::{admissible_t, build_g, build_h};
use c4book_core::search::{
    c4free_levels, canonical_key, enumerate_c4free, min_degree_bound, verify_exact, SearchStatus, SmallGraph,
    Unlimited,
};
use c4book_core::witness::verify_witness;
use c4book_core::Graph;

/// Minimum adjacency key over all vertex orders: a complete invariant.
fn brute_key(g: &SmallGraph) -> u128 {
    let n = g.order();
    let mut perm: Vec<u8> = (0..n as u8).collect();
    let mut best = g.key_under(&perm);
    // Heap's algorithm
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(g.key_under(&perm));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

fn all_labelled(n: usize) -> impl Iterator<Item = SmallGraph> {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |bits| {
        let mut g = SmallGraph::new(n);
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if bits >> k & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    })
}

#[test]
fn class_counts_match_brute_force() {
    for n in 0..=6 {
        let brute: BTreeSet<u128> = all_labelled(n).filter(|g| g.c4_free()).map(|g| brute_key(&g)).collect();
        let found = enumerate_c4free(n, None);
        assert_eq!(found.len(), brute.len(), "n={n}");
        let keys: BTreeSet<u128> = found.iter().map(brute_key).collect();
        assert_eq!(keys, brute, "n={n}");
    }
    assert_eq!(enumerate_c4free(4, None).len(), 8);
    assert_eq!(enumerate_c4free(3, None).len(), 4);
    assert_eq!(enumerate_c4free(1, None).len(), 1);
}

#[test]
fn pruned_enumeration_keeps_every_high_degree_class() {
    for (n, delta) in [(7, 2), (8, 2), (9, 3), (8, 3)] {
        let all: BTreeSet<u128> = enumerate_c4free(n, None)
            .into_iter()
            .filter(|g| g.min_degree().unwrap() >= delta)
            .map(|g| canonical_key(&g))
            .collect();
        let pruned: BTreeSet<u128> = enumerate_c4free(n, Some(delta)).iter().map(canonical_key).collect();
        assert_eq!(pruned, all, "n={n} delta={delta}");
    }
}

#[test]
fn deterministic_runs() {
    let a = verify_exact(2, 7, &mut Unlimited).unwrap();
    let b = verify_exact(2, 7, &mut Unlimited).unwrap();
    assert_eq!(a.graphs_examined, b.graphs_examined);
    assert_eq!(a.witness, b.witness);
}

#[test]
fn exact_values_for_one_and_two_pages() {
    for n in [1, 2] {
        let out = verify_exact(n, 7, &mut Unlimited).unwrap();
        assert_eq!(out.status, SearchStatus::Confirmed);
        let w = out.witness.unwrap();
        assert!(verify_witness(&w, n).is_valid());
        assert_eq!(w.order(), 6);
        assert_eq!(out.sample_failures, 0);
        assert!(out.sampled <= out.rejected.max(1));
        assert!(out.impossibility);
    }
    assert_eq!(min_degree_bound(2, 7), Some(3));
    assert_eq!(min_degree_bound(1, 7), None);
}

#[test]
fn three_pages() {
    let out = verify_exact(3, 9, &mut Unlimited).unwrap();
    assert_eq!(out.status, SearchStatus::Confirmed);
    assert_eq!(out.cross_check, Some(true));
}

/// Counting identities and matching statements on every C4-free graph with at
/// most nine vertices.
#[test]
fn identities_hold_on_all_small_c4_free_graphs() {
    let levels = c4free_levels(9);
    let mut graphs = 0;
    for level in &levels {
        for g in level {
            let g = g.to_graph();
            let facts = check_facts(&g).unwrap();
            assert!(facts.all_passed(), "{g:?}\n{facts}");
            let parts = check_neighbourhood_matchings(&g).unwrap();
            assert!(parts.all_passed(), "{g:?}\n{parts}");
            graphs += 1;
        }
    }
    assert!(graphs > 800);
}

#[test]
fn near_witnesses_expose_a_contradiction() {
    let mut builds = Vec::new();
    for t in admissible_t(4) {
        builds.push((4, t, build_h(4, t).unwrap().graph));
    }
    for t in admissible_t(5) {
        builds.push((5, t, build_g(5, t).unwrap().graph));
    }
    let mut x = 7u64;
    for (q, t, g) in builds {
        let n = g.order();
        // one more vertex, joined to a pseudo-random set (possibly empty)
        for trial in 0..40 {
            let mut h = Graph::new(n + 1);
            for (u, v) in g.edges() {
                h.add_edge(u, v);
            }
            for v in 0..n {
                x ^= x << 13;
                x ^= x >> 7;
                x ^= x << 17;
                if trial > 0 && x % (n as u64 / 3) == 0 {
                    h.add_edge(n, v);
                }
            }
            let audit = check_counterexample_claims(&h, q as usize, t as usize).unwrap();
            assert!(audit.contradiction_exposed(), "q={q} t={t} trial={trial}");
        }
    }
}

#[test]
fn claims_trip_when_hypotheses_are_forced() {
    // a C4-free graph of the right order whose complement has large books
    let g = build_h(4, 0).unwrap().graph;
    let mut h = Graph::new(16);
    for (u, v) in g.edges() {
        h.add_edge(u, v);
    }
    let audit = check_counterexample_claims(&h, 4, 0).unwrap();
    assert!(!audit.hypotheses_hold());
    assert!(!audit.claims.all_passed());
    let d = decompose(&h, 0).unwrap();
    assert!(d.check_neighbour_degree_sum());
}
