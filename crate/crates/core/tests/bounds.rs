use c4book_core::bounds::{
    best_known, best_known_certified, construction_certificates, formula_bounds, double_star_upper, deletion_lower,
    star_upper, book_upper, KNOWN_VALUES,
};

/// min m^2 + t over every (m, t) in range, by exhaustion.
fn book_upper_oracle(n: u64) -> u64 {
    let mut best = u64::MAX;
    for m in 4..=n + 10 {
        for t in 0..m {
            if (m - 1) * (m - 1) + t >= n + 2 {
                best = best.min(m * m + t);
            }
        }
    }
    best
}

fn float_isqrt(x: u64) -> u64 {
    (x as f64).sqrt().floor() as u64
}

#[test]
fn book_upper_matches_exhaustion() {
    for n in 1..=600 {
        let oracle = book_upper_oracle(n);
        match book_upper(n) {
            Some(b) => assert_eq!(b.value, oracle, "n={n}"),
            None => assert!(oracle > double_star_upper(n), "n={n}"),
        }
    }
}

#[test]
fn double_star_matches_float_evaluation() {
    for n in 1..=100_000u64 {
        let g = |x: u64| x + float_isqrt(x - 1) + 2;
        assert_eq!(double_star_upper(n), g(g(n)));
    }
}

#[test]
fn book_upper_beats_double_star_where_claimed() {
    for m in 4..=300u64 {
        for t in 3..m {
            let n = (m - 1) * (m - 1) + t - 2;
            let b = book_upper(n).expect("applies");
            assert_eq!(b.value, m * m + t);
            assert!(b.value < double_star_upper(n), "m={m} t={t}");
        }
    }
}

#[test]
fn known_values_within_formula_bounds() {
    for (i, &v) in KNOWN_VALUES.iter().enumerate() {
        let (lo, hi) = formula_bounds(i as u64 + 1);
        assert!(lo.value <= v && v <= hi.value, "n={} lo={lo:?} hi={hi:?}", i + 1);
    }
    assert!(double_star_upper(13) >= 22);
}

#[test]
fn records_are_consistent() {
    for n in 1..=3000 {
        let r = best_known(n);
        assert!(r.lower.value <= r.upper.value, "n={n}");
        if let Some(e) = &r.exact {
            assert!(r.lower.value <= e.value && e.value <= r.upper.value);
        }
    }
}

#[test]
fn construction_exact_values_are_backed_by_witnesses() {
    let mut checked = 0;
    for c in construction_certificates() {
        let (record, report) = best_known_certified(c.n).unwrap();
        if c.n as usize <= KNOWN_VALUES.len() {
            continue;
        }
        let exact = record.exact.expect("constructions meet the book upper bound");
        assert_eq!(exact.value, c.value);
        let report = report.expect("witness rebuilt");
        assert!(report.is_valid());
        assert_eq!(report.certified_lower(), Some(c.value as usize));
        checked += 1;
    }
    assert!(checked >= 30);
}

#[test]
fn star_bound_oracle() {
    for n in 2..5000u64 {
        let r = float_isqrt(n - 1);
        let square = (1..=n).any(|k| k * k + 1 == n);
        assert_eq!(star_upper(n).unwrap(), n + r + 2 - u64::from(square));
    }
}

#[test]
fn deletion_bound_vacuous_until_large() {
    assert_eq!(deletion_lower(100), None);
    assert_eq!(deletion_lower(1000), None);
    let first = (1..5000).find(|&n| deletion_lower(n).is_some()).unwrap();
    let f = |n: f64| n.sqrt() - 6.0 * n.powf(0.2625);
    assert!(f(first as f64) >= 1.0 && f(first as f64 - 1.0) < 1.0);
}
