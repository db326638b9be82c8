//! Argument parsing and dispatch.
//!
//! Exit codes: 0 success or confirmation, 1 verification failure or
//! refutation, 2 usage error, 3 inconclusive.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use anyhow::Result;
use c4book_core::audit::{audit_er_structure, AuditReport};
use c4book_core::bounds::best_known;
use c4book_core::construct::{build_g, build_h, Family};
use c4book_core::deletion::DeletionBase;
use c4book_core::primes::is_prime;
use c4book_core::search::{verify_exact_with, Budget, SearchStatus};
use c4book_core::witness::{check_gq_membership, verify_witness};
use c4book_core::Error;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::parallel::Parallel;
use crate::{io, report, reproduce};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "c4book", version, about = "Witnesses and bounds for Ramsey numbers of C4 versus books")]
pub struct Cli {
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FamilyArg {
    H,
    G,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a polarity-graph witness.
    Construct {
        #[arg(long, value_enum, ignore_case = true)]
        family: FamilyArg,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        t: u32,
        /// Write the graph as graph6.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write parameters and vertex labels as JSON.
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
    /// Check a graph6 file as a witness for a book size.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        book: usize,
        /// Also test membership in the family for this q.
        #[arg(long)]
        gq: Option<u64>,
    },
    /// Audit the structure of polarity graphs.
    Audit {
        /// Prime powers to audit; all of 2..=16 by default.
        #[arg(long, num_args = 1..)]
        q: Vec<u32>,
    },
    /// Best known bounds with provenance.
    Bounds {
        #[arg(long)]
        n: u64,
    },
    /// Decide a small value by exhaustive search.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        claim: usize,
        #[arg(long)]
        budget_seconds: Option<u64>,
        /// Write the witness on claim - 1 vertices as graph6.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lower bound by random deletion from a polarity graph.
    RandomLower {
        #[arg(long)]
        n: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        trials: u32,
        /// Write the certificate graph as graph6.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the reproduction matrix.
    Reproduce {
        /// Skip randomized trials.
        #[arg(long)]
        quick: bool,
        #[arg(long)]
        include_search_n3: bool,
    },
}

/// Wall-clock budget for the search.
struct Deadline(Instant);

impl Budget for Deadline {
    fn charge(&mut self, _: u64) -> bool {
        Instant::now() < self.0
    }
}

struct Output {
    text: String,
    json: serde_json::Value,
    code: i32,
}

fn usage(msg: String) -> Output {
    Output {
        text: format!("error: {msg}\n"),
        json: json!({ "error": msg }),
        code: EXIT_USAGE,
    }
}

fn valid_code(ok: bool) -> i32 {
    if ok {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}

fn construct(family: FamilyArg, q: u32, t: u32, out: Option<PathBuf>, manifest: Option<PathBuf>) -> Result<Output> {
    let built = match family {
        FamilyArg::H => build_h(q, t),
        FamilyArg::G => build_g(q, t),
    };
    let r = match built {
        Ok(r) => r,
        Err(e @ Error::OutOfRange(_)) => return Ok(usage(e.to_string())),
        Err(e) => return Err(e.into()),
    };
    debug_assert!(matches!((family, r.family), (FamilyArg::H, Family::H) | (FamilyArg::G, Family::G)));
    if let Some(path) = out {
        io::write_graph6(&path, &r.graph)?;
    }
    if let Some(path) = manifest {
        io::write_manifest(&path, &r)?;
    }
    Ok(Output {
        text: report::construction_text(&r),
        json: report::construction_json(&r),
        code: valid_code(r.report.is_valid()),
    })
}

fn verify(input: PathBuf, book: usize, gq: Option<u64>) -> Result<Output> {
    if book == 0 {
        return Ok(usage("--book must be at least 1".into()));
    }
    let g = io::read_graph6(&input)?;
    let r = verify_witness(&g, book);
    let mut text = format!("{r}\n");
    let mut value = report::witness_json(&r);
    let mut ok = r.is_valid();
    if let Some(q) = gq {
        match check_gq_membership(&g, q) {
            Ok(member) => {
                text += &format!("gq_member\t{member}\n");
                value["gq_member"] = json!(member);
                ok &= member;
            }
            Err(e) => return Ok(usage(e.to_string())),
        }
    }
    Ok(Output {
        text,
        json: value,
        code: valid_code(ok),
    })
}

fn audit(qs: Vec<u32>) -> Result<Output> {
    let qs = if qs.is_empty() {
        (2..=16).filter(|&q| c4book_core::field::prime_power(u64::from(q)).is_some()).collect()
    } else {
        qs
    };
    let mut text = String::new();
    let mut records = Vec::new();
    let mut ok = true;
    for q in qs {
        let r: AuditReport = match audit_er_structure(q) {
            Ok(r) => r,
            Err(e) => return Ok(usage(e.to_string())),
        };
        ok &= r.all_passed();
        for line in r.to_string().lines() {
            text += &format!("q={q}\t{line}\n");
        }
        let mut value = report::audit_json(&r);
        value["q"] = json!(q);
        records.push(value);
    }
    Ok(Output {
        text,
        json: json!({ "all_passed": ok, "audits": records }),
        code: valid_code(ok),
    })
}

fn bounds(n: u64) -> Output {
    if n == 0 {
        return usage("--n must be at least 1".into());
    }
    let r = best_known(n);
    Output {
        text: report::bounds_text(&r),
        json: report::bounds_json(&r),
        code: EXIT_OK,
    }
}

fn search(n: usize, claim: usize, budget_seconds: Option<u64>, out: Option<PathBuf>) -> Result<Output> {
    let secs = budget_seconds.unwrap_or(u64::MAX / 4);
    let mut budget = Deadline(Instant::now() + Duration::from_secs(secs.min(1 << 40)));
    let o = match verify_exact_with(n, claim, &mut budget, &Parallel) {
        Ok(o) => o,
        Err(e @ Error::OutOfRange(_)) => return Ok(usage(e.to_string())),
        Err(e) => return Err(e.into()),
    };
    if let (Some(path), Some(w)) = (out, &o.witness) {
        io::write_graph6(&path, w)?;
    }
    let code = match o.status {
        SearchStatus::Confirmed => EXIT_OK,
        SearchStatus::Refuted(_) => EXIT_FAILURE,
        SearchStatus::Inconclusive => EXIT_INCONCLUSIVE,
    };
    Ok(Output {
        text: report::search_text(&o),
        json: report::search_json(&o),
        code,
    })
}

fn random_lower(n: u64, seed: u64, trials: u32, out: Option<PathBuf>) -> Result<Output> {
    let base = match DeletionBase::new(n) {
        Ok(b) => b,
        Err(e @ Error::VacuousParameters { .. }) => return Ok(usage(e.to_string())),
        Err(e) => return Err(e.into()),
    };
    debug_assert!(is_prime(base.params.p));
    match base.retry_until_witness(trials, seed) {
        Ok(r) => {
            if let (Some(path), Some(g)) = (out, &r.survivor) {
                io::write_graph6(&path, g)?;
            }
            Ok(Output {
                text: format!("{r}\n"),
                json: report::trial_json(&r),
                code: EXIT_OK,
            })
        }
        Err(e @ Error::TrialsExhausted { .. }) => Ok(Output {
            text: format!("params\t{}\nstatus\tinconclusive\nreason\t{e}\n", base.params),
            json: json!({ "status": "inconclusive", "reason": e.to_string() }),
            code: EXIT_INCONCLUSIVE,
        }),
        Err(e) => Err(e.into()),
    }
}

fn reproduce_rows(quick: bool, include_search_n3: bool) -> Output {
    let rows = reproduce::run(reproduce::Options { quick, include_search_n3 });
    let ok = rows.iter().all(reproduce::Row::passed);
    let mut text = String::new();
    for r in &rows {
        text += &r.line();
        text.push('\n');
        eprintln!("{}\t{:.2?} (limit {:?})", r.id, r.elapsed, r.limit);
    }
    let records: Vec<_> = rows
        .iter()
        .map(|r| json!({ "id": r.id, "passed": r.passed(), "statement": r.statement, "detail": r.detail }))
        .collect();
    Output {
        text,
        json: json!({ "all_passed": ok, "rows": records }),
        code: valid_code(ok),
    }
}

/// Runs a parsed command, printing its report; returns the exit code.
pub fn execute(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Construct { family, q, t, out, manifest } => construct(family, q, t, out, manifest),
        Command::Verify { input, book, gq } => verify(input, book, gq),
        Command::Audit { q } => audit(q),
        Command::Bounds { n } => Ok(bounds(n)),
        Command::Search { n, claim, budget_seconds, out } => search(n, claim, budget_seconds, out),
        Command::RandomLower { n, seed, trials, out } => random_lower(n, seed, trials, out),
        Command::Reproduce { quick, include_search_n3 } => Ok(reproduce_rows(quick, include_search_n3)),
    };
    match result {
        Ok(out) => {
            if cli.json {
                println!("{}", out.json);
            } else {
                print!("{}", out.text);
            }
            if out.code == EXIT_USAGE && !cli.json {
                eprint!("{}", out.text);
            }
            out.code
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            EXIT_FAILURE
        }
    }
}

/// Parses `args` (program name first) and runs; clap errors exit with 2.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}
