use c4book_core::construct::{admissible_t, build_largest_t_witness, build_frame, build_g, build_h};
use c4book_core::projective::build_er_graph;
use c4book_core::witness::verify_witness;
use c4book_core::{FieldSpec, Graph};

/// Largest number of common non-neighbours over non-adjacent pairs, by definition.
fn naive_book(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best = None;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let c = (0..n)
                .filter(|&w| w != u && w != v && !g.has_edge(u, w) && !g.has_edge(v, w))
                .count();
            best = best.max(Some(c));
        }
    }
    best
}

fn naive_c4_free(g: &Graph) -> bool {
    let n = g.order();
    (0..n).all(|u| (u + 1..n).all(|v| (0..n).filter(|&w| g.has_edge(u, w) && g.has_edge(v, w)).count() <= 1))
}

fn check_family(q: u32, build: fn(u32, u32) -> c4book_core::Result<c4book_core::construct::ConstructionResult>) {
    let qq = q as usize;
    for t in admissible_t(q) {
        let r = build(q, t).unwrap_or_else(|e| panic!("q={q} t={t}: {e}"));
        let t = t as usize;
        assert_eq!(r.order(), qq * qq + t - 1);
        assert!(!r.graph.contains_c4());
        assert!(r.graph.min_degree().unwrap() >= qq);
        let book = r.graph.max_book_in_complement().value().unwrap();
        assert!(book <= (qq - 1) * (qq - 1) + t - 3, "q={q} t={t} book={book}");
        assert!(r.report.is_valid());
        assert_eq!(r.certified_lower, qq * qq + t);
        if qq <= 9 {
            assert_eq!(naive_book(&r.graph), Some(book));
            assert!(naive_c4_free(&r.graph));
        }
        // one page fewer is rejected exactly when the ceiling is attained
        let below = verify_witness(&r.graph, r.target_book - 1);
        assert_eq!(below.is_valid(), book < r.target_book - 1);
    }
}

#[test]
fn even_family_all_admissible() {
    for q in [4, 8, 16] {
        check_family(q, build_h);
    }
}

#[test]
fn odd_family_all_admissible() {
    for q in [5, 7, 9, 11, 13] {
        check_family(q, build_g);
    }
}

#[test]
fn small_values_match_known_values() {
    let certified: Vec<(usize, usize)> = admissible_t(4)
        .into_iter()
        .map(|t| {
            let r = build_h(4, t).unwrap();
            (r.target_book, r.certified_lower)
        })
        .collect();
    assert_eq!(certified, [(7, 16), (9, 18), (10, 19)]);
    assert_eq!(build_g(5, 2).unwrap().order(), 26);
    assert_eq!(build_g(5, 4).unwrap().order(), 28);
}

#[test]
fn largest_t_witnesses() {
    for q in [4u32, 5, 7, 8] {
        let r = build_largest_t_witness(q).unwrap();
        let qq = q as usize;
        assert_eq!(r.order(), qq * qq + qq - 2);
        assert_eq!(r.target_book, qq * qq - qq - 2);
        assert!(verify_witness(&r.graph, r.target_book).is_valid());
    }
}

#[test]
fn even_degree_table() {
    for q in [4u32, 8] {
        let qq = q as usize;
        let er = build_er_graph(&FieldSpec::of_order(q.into()).unwrap());
        let frame = build_frame(&er).unwrap();
        for t in admissible_t(q).into_iter().filter(|&t| t >= 2) {
            let r = build_h(q, t).unwrap();
            let u = &frame.a[0];
            let deleted: Vec<usize> = u[t as usize - 2..].to_vec();
            let mut expect_q: Vec<usize> = vec![frame.hub];
            expect_q.extend_from_slice(&frame.w[1..]);
            expect_q.extend_from_slice(&u[..t as usize - 2]);
            for a in &frame.a[1..] {
                expect_q.extend(a.iter().copied().filter(|&x| deleted.iter().any(|&d| er.graph.has_edge(x, d))));
            }
            for (i, label) in r.labels.iter().enumerate() {
                let v = er.index_of(label);
                let want = if expect_q.contains(&v) { qq } else { qq + 1 };
                assert_eq!(r.graph.degree(i), want, "q={q} t={t} vertex {v}");
            }
        }
    }
}

#[test]
fn even_frames_have_matchings_and_independent_sets() {
    for q in [4u64, 8, 16] {
        let er = build_er_graph(&FieldSpec::of_order(q).unwrap());
        let f = build_frame(&er).unwrap();
        for (i, a) in f.a.iter().enumerate() {
            assert!(er.graph.is_independent(a));
            for b in &f.a[i + 1..] {
                for &x in a {
                    assert_eq!(b.iter().filter(|&&y| er.graph.has_edge(x, y)).count(), 1);
                }
            }
        }
    }
}

#[test]
fn odd_frames_have_matchings_between_non_adjacent_neighbours() {
    for q in [5u64, 7, 9, 11, 13] {
        let er = build_er_graph(&FieldSpec::of_order(q).unwrap());
        let f = build_frame(&er).unwrap();
        for i in 0..f.w.len() {
            if er.graph.degree(f.w[i]) != q as usize + 1 {
                continue;
            }
            for j in 0..f.w.len() {
                if i == j || er.graph.has_edge(f.w[i], f.w[j]) {
                    continue;
                }
                for &x in &f.a[i] {
                    assert_eq!(f.a[j].iter().filter(|&&y| er.graph.has_edge(x, y)).count(), 1);
                }
                for &y in &f.a[j] {
                    assert_eq!(f.a[i].iter().filter(|&&x| er.graph.has_edge(x, y)).count(), 1);
                }
            }
        }
    }
}
