use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use mocktheta_core::relations::{self, RelationReport};
use mocktheta_core::verify::{self, EXPAND_IDS};
use mocktheta_core::{Error, VerificationReport};
use serde::Serialize;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_ARITH: u8 = 3;

#[derive(Parser)]
#[command(name = "mocktheta", version, about = "Exact q-series checks for fifth and seventh order mock theta functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the coefficients of a series as `n<TAB>c_n` lines.
    Expand {
        /// One of chi0, chi1, F0, F1, F2, C0, C1, f0, f1, f2, eta.
        id: String,
        #[arg(long, default_value_t = 500)]
        terms: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify one identity, or `all` of them.
    Verify {
        id: String,
        #[arg(long, default_value_t = 500)]
        terms: usize,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Check coefficient relations along arithmetic progressions.
    Relations {
        #[command(subcommand)]
        which: RelationCmd,
    },
}

#[derive(Subcommand)]
enum RelationCmd {
    /// Fifth order chi0/chi1 relations for a prime p = 3, 7 mod 10.
    Chirels(PrimeArgs),
    /// Seventh order relations for an odd prime p with (7/p) = -1.
    Mock7(PrimeArgs),
    /// The p = 5 seventh order relations.
    F25(CommonArgs),
}

#[derive(Args)]
struct PrimeArgs {
    #[arg(long)]
    prime: u64,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct CommonArgs {
    #[arg(long, default_value_t = 20)]
    nmax: i64,
    /// Series order; defaults to the order the relation needs.
    #[arg(long)]
    terms: Option<usize>,
    #[arg(long)]
    json: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Arith(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnknownId(_) | Error::Precondition(_) | Error::InsufficientOrder { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Arith(e.to_string()),
        }
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Failure {
    Failure::Usage(format!("{}: {e}", path.display()))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Failure::Arith(e.to_string()))?;
    fs::write(path, text + "\n").map_err(|e| io_err(path, e))
}

fn cmd_expand(id: &str, terms: usize, out: Option<&Path>) -> Result<bool, Failure> {
    if !EXPAND_IDS.contains(&id) {
        return Err(Failure::Usage(format!("unknown series id {id:?}; expected one of {}", EXPAND_IDS.join(", "))));
    }
    let dump = verify::expand(id, terms)?.to_dump();
    match out {
        Some(path) => fs::write(path, dump).map_err(|e| io_err(path, e))?,
        None => std::io::stdout().write_all(dump.as_bytes()).map_err(|e| Failure::Usage(e.to_string()))?,
    }
    Ok(true)
}

fn print_report(r: &VerificationReport) {
    let status = serde_json::to_value(r.status).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default();
    let mut line = format!("{:<16} N={:<6} {:<18} {:>9.1} ms", r.identity_id, r.order, status, r.elapsed_ms);
    if let Some(m) = r.first_mismatch {
        line.push_str(&format!("  first mismatch at q^{}: {} vs {}", m.exponent, m.lhs, m.rhs));
    }
    println!("{line}");
    if !r.notes.is_empty() {
        println!("    {}", r.notes);
    }
}

fn cmd_verify(id: &str, terms: usize, json: Option<&Path>) -> Result<bool, Failure> {
    let reports = if id == "all" { verify::verify_all(terms)? } else { vec![verify::verify_identity(id, terms)?] };
    for r in &reports {
        print_report(r);
    }
    if let Some(path) = json {
        write_json(path, &reports)?;
    }
    Ok(reports.iter().all(|r| r.passed()))
}

fn check_terms(terms: Option<usize>, needed: usize) -> Result<Option<i64>, Failure> {
    match terms {
        Some(t) if t < needed => Err(Failure::Usage(format!("--terms {t} is too small; this check needs {needed}"))),
        Some(t) => Ok(Some(t as i64)),
        None => Ok(None),
    }
}

fn require_prime(p: u64) -> Result<(), Failure> {
    if relations::is_prime(p) {
        Ok(())
    } else {
        Err(Failure::Usage(format!("{p} is not prime")))
    }
}

fn cmd_relations(which: &RelationCmd) -> Result<bool, Failure> {
    let (report, json): (RelationReport, _) = match which {
        RelationCmd::Chirels(a) => {
            require_prime(a.prime)?;
            let needed = relations::chirels_order(a.prime, a.common.nmax)?;
            let sweep = check_terms(a.common.terms, needed)?;
            (relations::check_chirels_with_sweep(a.prime, a.common.nmax, sweep)?, &a.common.json)
        }
        RelationCmd::Mock7(a) => {
            require_prime(a.prime)?;
            let needed = relations::mock7rels_order(a.prime, a.common.nmax)?;
            let sweep = check_terms(a.common.terms, needed)?;
            (relations::check_mock7rels_with_sweep(a.prime, a.common.nmax, sweep)?, &a.common.json)
        }
        RelationCmd::F25(c) => {
            check_terms(c.terms, relations::f25_order(c.nmax))?;
            (relations::check_f25(c.nmax)?, &c.json)
        }
    };
    let status = if report.passed() { "pass" } else { "fail" };
    println!(
        "{} p={} n<={} N={} checks={} {status}",
        report.relation_id,
        report.prime.map_or("-".into(), |p| p.to_string()),
        report.n_range.1,
        report.required_order,
        report.checks
    );
    for c in report.counterexamples.iter().take(10) {
        println!("    {} at n={}: {} vs {}", c.label, c.n, c.lhs, c.rhs);
    }
    if !report.notes.is_empty() {
        println!("    {}", report.notes);
    }
    if let Some(path) = json {
        write_json(path, &report)?;
    }
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let result = match &cli.command {
        Command::Expand { id, terms, out } => cmd_expand(id, *terms, out.as_deref()),
        Command::Verify { id, terms, json } => cmd_verify(id, *terms, json.as_deref()),
        Command::Relations { which } => cmd_relations(which),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAIL),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Arith(msg)) => {
            eprintln!("arithmetic error: {msg}");
            ExitCode::from(EXIT_ARITH)
        }
    }
}
