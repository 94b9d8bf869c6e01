//! `consec312` command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 resource bound refused,
//! 3 verification failure.

use std::fmt::Display;
use std::io::{self, BufRead, BufWriter, Write};
use std::ops::RangeInclusive;
use std::process::ExitCode;
use std::str::FromStr;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use consec312::bijection::{delta_hat, krattenthaler, krattenthaler_inverse, mu, mu_inverse, nu, nu_inverse};
use consec312::distribution::{
    avoider_count, closed_row, compare_triangle, distribution_brute, distribution_dp, gf_series, parse_bfile,
    Pattern, DEFAULT_BRUTE_BOUND,
};
use consec312::path::{deutsch, DyckPath, MotzkinPath};
use consec312::perm::{count_consecutive, enumerate_avoiders, Permutation, Word};
use consec312::verify::{run_suite, Suite};
use consec312::Error;
use num_bigint::BigUint;
use serde_json::{json, Number, Value};

#[derive(Parser)]
#[command(name = "consec312", version, about = "Consecutive patterns on 3-1-2-avoiding permutations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate a(n, k), the number of 3-1-2-avoiders of length n with k occurrences of the consecutive pattern.
    Table {
        #[arg(long)]
        tau: Pattern,
        /// A single length ("5") or an inclusive range ("1..5").
        #[arg(long, value_parser = parse_range)]
        n: RangeInclusive<usize>,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Largest n for brute-force enumeration. Cost grows like 4^n: n = 14 already visits 2.7 million permutations.
        #[arg(long, default_value_t = DEFAULT_BRUTE_BOUND)]
        bound: usize,
        /// Largest n for the series expansion.
        #[arg(long, default_value_t = 60)]
        gf_bound: usize,
        /// Cross-check the triangle, rows 0 through the end of the range, against an OEIS b-file.
        #[arg(long)]
        bfile: Option<std::path::PathBuf>,
    },
    /// Apply a bijection to each object read from stdin, one per line.
    Transform {
        #[arg(value_enum)]
        name: Transform,
    },
    /// Number of 3-1-2-avoiders of length n with no consecutive occurrence of tau.
    Count {
        #[arg(long)]
        tau: Pattern,
        #[arg(long)]
        n: usize,
    },
    /// Count, or with --list enumerate, the avoiders of 3-1-2 and consecutive tau.
    Avoiders {
        #[arg(long)]
        tau: Pattern,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        list: bool,
        /// Largest n for --list. Cost grows like 4^n.
        #[arg(long, default_value_t = DEFAULT_BRUTE_BOUND)]
        bound: usize,
    },
    /// Run a verification suite exhaustively and print one JSON line per check.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Checks run for every size 0..=bound.
        #[arg(long, default_value_t = 8)]
        bound: usize,
        /// Refuse bounds above this. Raising it is expensive: enumeration cost grows like 4^n.
        #[arg(long, default_value_t = DEFAULT_BRUTE_BOUND)]
        limit: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Dp,
    Brute,
    Gf,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Transform {
    #[value(name = "K")]
    K,
    #[value(name = "K-inv")]
    KInv,
    #[value(name = "delta")]
    Delta,
    #[value(name = "delta-hat")]
    DeltaHat,
    #[value(name = "nu")]
    Nu,
    #[value(name = "nu-inv")]
    NuInv,
    #[value(name = "mu")]
    Mu,
    #[value(name = "mu-inv")]
    MuInv,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Display) -> Self {
        Failure {
            code,
            message: message.to_string(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BoundExceeded { .. } => 2,
            Error::Inconsistency(_) => 3,
            _ => 1,
        };
        Failure::new(code, e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::new(1, e)
    }
}

type Outcome = Result<(), Failure>;

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected N or A..B, got '{s}'");
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.strip_prefix('=').unwrap_or(hi)),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(lo..=hi)
}

fn number(v: &BigUint) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("decimal integer"))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = out.flush();
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command, out: &mut impl Write) -> Outcome {
    match command {
        Command::Table {
            tau,
            n,
            method,
            format,
            bound,
            gf_bound,
            bfile,
        } => table(out, tau, n, method, format, bound, gf_bound, bfile.as_deref()),
        Command::Transform { name } => transform(out, name),
        Command::Count { tau, n } => {
            writeln!(out, "{}", avoider_count(tau, n)?)?;
            Ok(())
        }
        Command::Avoiders { tau, n, list, bound } => avoiders(out, tau, n, list, bound),
        Command::Verify { suite, bound, limit } => verify(out, suite, bound, limit),
    }
}

fn gf_rows(tau: Pattern, max_n: usize, gf_bound: usize) -> Result<Vec<Vec<BigUint>>, Error> {
    if max_n > gf_bound {
        return Err(Error::BoundExceeded { n: max_n, bound: gf_bound });
    }
    gf_series(tau, max_n)?.integer_rows()
}

/// Rows `n` for every `n` in `range`, by a single method.
fn rows_by(tau: Pattern, range: RangeInclusive<usize>, method: Method, bound: usize, gf_bound: usize) -> Result<Vec<Vec<BigUint>>, Error> {
    match method {
        Method::Closed | Method::All => range.map(|n| closed_row(tau, n)).collect(),
        Method::Dp => Ok(range.map(|n| distribution_dp(&tau.statistic(), n)).collect()),
        Method::Brute => range.map(|n| distribution_brute(tau, n, bound)).collect(),
        Method::Gf => {
            let start = *range.start();
            let mut rows = gf_rows(tau, *range.end(), gf_bound)?;
            Ok(rows.split_off(start))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn table(
    out: &mut impl Write,
    tau: Pattern,
    range: RangeInclusive<usize>,
    method: Method,
    format: Format,
    bound: usize,
    gf_bound: usize,
    bfile: Option<&std::path::Path>,
) -> Outcome {
    let rows = rows_by(tau, range.clone(), method, bound, gf_bound)?;
    let mut failed = Vec::new();
    if method == Method::All {
        failed.extend(agreement_report(tau, range.clone(), &rows, bound, gf_bound)?);
    }

    match format {
        Format::Csv => {
            writeln!(out, "n,k,count")?;
            for (n, row) in range.clone().zip(&rows) {
                for (k, c) in row.iter().enumerate() {
                    writeln!(out, "{n},{k},{c}")?;
                }
            }
        }
        Format::Json => {
            let value = json!({
                "tau": tau.to_string(),
                "method": method.to_possible_value().expect("named").get_name(),
                "n": range.clone().collect::<Vec<_>>(),
                "rows": rows.iter().map(|r| r.iter().map(number).collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            writeln!(out, "{value}")?;
        }
    }

    if let Some(path) = bfile {
        let text = std::fs::read_to_string(path).map_err(|e| Failure::new(1, format!("{}: {e}", path.display())))?;
        let entries = parse_bfile(&text)?;
        let triangle = rows_by(tau, 0..=*range.end(), method, bound, gf_bound)?;
        let report = compare_triangle(&triangle, &entries);
        eprintln!(
            "b-file {}: {} entries compared, {} mismatches, {} beyond row {}",
            path.display(),
            report.compared,
            report.mismatches.len(),
            report.uncovered,
            range.end()
        );
        for (index, expected, got) in &report.mismatches {
            eprintln!("b-file mismatch at index {index}: file {expected}, computed {got}");
        }
        if !report.passed() {
            failed.push("b-file".into());
        }
    }

    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::new(3, format!("verification failed: {}", failed.join(", "))))
    }
}

/// Per-cell comparison of every method on stderr; returns the failures.
fn agreement_report(
    tau: Pattern,
    range: RangeInclusive<usize>,
    closed: &[Vec<BigUint>],
    bound: usize,
    gf_bound: usize,
) -> Result<Vec<String>, Failure> {
    let gf = gf_rows(tau, (*range.end()).min(gf_bound), gf_bound)?;
    let mut failed = Vec::new();
    let mut cells = 0usize;
    for (n, closed_row) in range.zip(closed) {
        let dp = distribution_dp(&tau.statistic(), n);
        let gf_row = gf.get(n);
        let brute = if n <= bound { Some(distribution_brute(tau, n, bound)?) } else { None };
        let width = [Some(closed_row), Some(&dp), gf_row, brute.as_ref()]
            .iter()
            .flatten()
            .map(|r| r.len())
            .max()
            .unwrap_or(0);
        let cell = |row: Option<&Vec<BigUint>>, k: usize| {
            row.map(|r| r.get(k).cloned().unwrap_or_default())
        };
        for k in 0..width {
            cells += 1;
            let values = [
                ("closed", cell(Some(closed_row), k)),
                ("dp", cell(Some(&dp), k)),
                ("gf", cell(gf_row, k)),
                ("brute", cell(brute.as_ref(), k)),
            ];
            let reference = values[0].1.clone();
            let agree = values.iter().all(|(_, v)| v.is_none() || *v == reference);
            let shown: Vec<String> = values
                .iter()
                .map(|(name, v)| match v {
                    Some(v) => format!("{name}={v}"),
                    None => format!("{name}=skipped"),
                })
                .collect();
            eprintln!("n={n} k={k} {} {}", shown.join(" "), if agree { "agree" } else { "DISAGREE" });
            if !agree {
                failed.push(format!("n={n} k={k}"));
            }
        }
    }
    eprintln!(
        "{cells} cells checked, {} disagreements (brute limited to n <= {bound}, gf to n <= {gf_bound})",
        failed.len()
    );
    Ok(failed)
}

fn apply(name: Transform, line: &str) -> Result<String, Error> {
    Ok(match name {
        Transform::K => krattenthaler(&line.parse()?)?.to_string(),
        Transform::KInv => krattenthaler_inverse(&line.parse()?).to_string(),
        Transform::Delta => deutsch(&line.parse::<DyckPath>()?).to_string(),
        Transform::DeltaHat => delta_hat(&line.parse()?)?.to_string(),
        Transform::Nu => nu(&line.parse()?)?.to_string(),
        Transform::NuInv => nu_inverse(&line.parse::<MotzkinPath>()?).to_string(),
        Transform::Mu => mu(&line.parse::<Word>()?)?.to_string(),
        Transform::MuInv => mu_inverse(&line.parse::<MotzkinPath>()?).to_string(),
    })
}

fn transform(out: &mut impl Write, name: Transform) -> Outcome {
    let mut errors = 0usize;
    for (i, line) in io::stdin().lock().lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match apply(name, line) {
            Ok(result) => writeln!(out, "{result}")?,
            Err(e) => {
                errors += 1;
                eprintln!("line {}: {e}", i + 1);
            }
        }
    }
    if errors > 0 {
        return Err(Failure::new(1, format!("{errors} input line(s) rejected")));
    }
    Ok(())
}

fn avoiders(out: &mut impl Write, tau: Pattern, n: usize, list: bool, bound: usize) -> Outcome {
    if !list {
        writeln!(out, "{}", avoider_count(tau, n)?)?;
        return Ok(());
    }
    if n > bound {
        return Err(Error::BoundExceeded { n, bound }.into());
    }
    let pattern: Permutation = tau.permutation();
    for sigma in enumerate_avoiders(n).filter(|s| count_consecutive(s.values(), &pattern) == 0) {
        writeln!(out, "{sigma}")?;
    }
    Ok(())
}

fn verify(out: &mut impl Write, suite: Suite, bound: usize, limit: usize) -> Outcome {
    let results = run_suite(suite, bound, limit)?;
    let mut failed = 0usize;
    for r in &results {
        if !r.passed() {
            failed += 1;
        }
        let line = json!({
            "suite": r.suite.name(),
            "check": r.check,
            "bound": r.bound,
            "cases": r.cases,
            "failures": r.failures,
            "passed": r.passed(),
            "examples": r.examples,
        });
        writeln!(out, "{line}")?;
    }
    if failed > 0 {
        return Err(Failure::new(3, format!("{failed} of {} checks failed", results.len())));
    }
    Ok(())
}
