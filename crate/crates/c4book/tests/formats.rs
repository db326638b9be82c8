use c4book::io::{read_graph6, write_graph6};
use c4book::parallel::{failing_seeds, Parallel};
use c4book_core::deletion::DeletionBase;
use c4book_core::search::{verify_exact, verify_exact_with, Enumerator, Sequential, Unlimited};
use c4book_core::Graph;

#[test]
fn graph6_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for n in [0, 1, 5, 62, 63, 100] {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
            if v % 3 == 0 {
                g.add_edge(0, v);
            }
        }
        let path = dir.path().join(format!("g{n}.g6"));
        write_graph6(&path, &g).unwrap();
        assert_eq!(read_graph6(&path).unwrap(), g);
    }
    let path = dir.path().join("header.g6");
    std::fs::write(&path, ">>graph6<<A_\n").unwrap();
    assert_eq!(read_graph6(&path).unwrap(), Graph::complete(2));
    std::fs::write(&path, "").unwrap();
    assert!(read_graph6(&path).is_err());
}

#[test]
fn parallel_expansion_matches_sequential() {
    for (n, delta) in [(9, None), (10, Some(2))] {
        let mut a = Enumerator::new(n, delta);
        a.run_with(&mut Unlimited, &Sequential).unwrap();
        let mut b = Enumerator::new(n, delta);
        b.run_with(&mut Unlimited, &Parallel).unwrap();
        assert_eq!(a.results(), b.results());
        assert_eq!(a.examined(), b.examined());
    }
    let s = verify_exact(2, 7, &mut Unlimited).unwrap();
    let p = verify_exact_with(2, 7, &mut Unlimited, &Parallel).unwrap();
    assert_eq!((s.status, s.witness, s.graphs_examined), (p.status, p.witness, p.graphs_examined));
}

#[test]
fn parallel_seed_survey_matches_sequential() {
    let base = DeletionBase::new(12_000).unwrap();
    let sequential: Vec<u64> = (0..40).filter(|&s| !base.succeeds(s)).collect();
    assert_eq!(failing_seeds(&base, 0..40), sequential);
}
