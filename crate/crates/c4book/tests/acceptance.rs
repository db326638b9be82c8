//! One line per acceptance criterion: `criterion <id>: PASS|FAIL (<elapsed> / limit <limit>) <statement>; <detail>`.
//! Set `C4BOOK_SEARCH_N3=1` to add the three-page search row.

use c4book::reproduce::{self, Options};

fn main() {
    let opts = Options {
        quick: false,
        include_search_n3: std::env::var_os("C4BOOK_SEARCH_N3").is_some(),
    };
    let rows = reproduce::run(opts);
    let mut failed = 0;
    for r in &rows {
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        println!(
            "criterion {}: {verdict} ({:.2?} / limit {:?}) {}; {}",
            r.id, r.elapsed, r.limit, r.statement, r.detail
        );
        failed += usize::from(!r.passed());
    }
    println!("acceptance: {} of {} criteria passed", rows.len() - failed, rows.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
