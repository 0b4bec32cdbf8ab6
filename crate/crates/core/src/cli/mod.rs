//! Command-line front end.
//!
//! [`run`] does all the work and returns the process exit code, so the binary
//! is a one-liner and tests can drive every subcommand in-process.
//!
//! | code | meaning                          |
//! |------|----------------------------------|
//! | 0    | success, every check passed      |
//! | 1    | a mathematical check failed      |
//! | 2    | usage error                      |
//! | 3    | I/O error                        |

pub mod format;
pub mod verify;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::bounds::{bound_report, BoundReport, TailSide};
use crate::numbers::{
    falling_poly, poly_zeros, rising_poly, stirling_ref, Mask, PolyKind, Triangle,
    DEFAULT_SUBSET_LIMIT,
};
use crate::oracle::DEFAULT_BUDGET;
use crate::real::to_f64;

pub use format::Format;
use verify::{run_checks, stirling_diff, Status, VerifyOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitCode {
    Ok = 0,
    CheckFailed = 1,
    Usage = 2,
    Io = 3,
}

#[derive(Parser, Debug)]
#[command(
    name = "seqopt",
    version,
    about = "Exact C sequential optimization numbers: triangles, identities, polynomials and bounds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print O_C(n, m) for n = 1..=N.
    Triangle(TriangleArgs),
    /// Check every identity on the computed triangle.
    Verify(VerifyArgs),
    /// Expand the rising or falling generating polynomial of row N.
    Poly(PolyArgs),
    /// Closed upper bound, tail and ratio checks for row N.
    Bounds(BoundsArgs),
    /// Compare mask 01 against the classic unsigned Stirling recurrence.
    Stirling(StirlingArgs),
}

#[derive(Args, Debug)]
struct Output {
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn positive_usize(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v),
        _ => Err(format!("expected a positive integer, got {s:?}")),
    }
}

fn positive_u64(s: &str) -> Result<u64, String> {
    match s.parse::<u64>() {
        Ok(v) if v >= 1 => Ok(v),
        _ => Err(format!("expected a positive integer, got {s:?}")),
    }
}

fn parse_mask(s: &str) -> Result<Mask, String> {
    s.parse().map_err(|e: crate::Error| e.to_string())
}

#[derive(Args, Debug)]
struct TriangleArgs {
    /// Bit string c0c1...ck, e.g. 01 for the Stirling numbers.
    #[arg(long, value_parser = parse_mask)]
    mask: Mask,
    /// Last row to compute.
    #[arg(long, default_value_t = 50, value_parser = positive_usize)]
    n: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Bit string c0c1...ck, e.g. 01 for the Stirling numbers.
    #[arg(long, value_parser = parse_mask)]
    mask: Mask,
    /// Last row to compute.
    #[arg(long, default_value_t = 10, value_parser = positive_usize)]
    n: usize,
    /// Also compare against exhaustive enumeration, row by row within the budget.
    #[arg(long)]
    oracle: bool,
    /// Maximum number of permutation tuples the oracle may enumerate per row.
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = positive_u64)]
    budget: u64,
    /// Largest n for the explicit combination-sum check.
    #[arg(long, default_value_t = DEFAULT_SUBSET_LIMIT, value_parser = positive_usize)]
    subset_limit: usize,
    /// Add one to cell N,M of the triangle before checking.
    #[arg(long, hide = true, value_parser = parse_cell)]
    corrupt_cell: Option<(usize, i64)>,
    #[command(flatten)]
    output: Output,
}

fn parse_cell(s: &str) -> Result<(usize, i64), String> {
    let (n, m) = s.split_once(',').ok_or("expected N,M")?;
    Ok((
        positive_usize(n)?,
        m.parse().map_err(|_| format!("bad m {m:?}"))?,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Rising,
    Falling,
}

#[derive(Args, Debug)]
struct PolyArgs {
    /// Bit string c0c1...ck, e.g. 01 for the Stirling numbers.
    #[arg(long, value_parser = parse_mask)]
    mask: Mask,
    /// Row whose polynomial is expanded.
    #[arg(long, value_parser = positive_usize)]
    n: usize,
    #[arg(long, value_enum, default_value_t = KindArg::Rising)]
    kind: KindArg,
    /// Append the exact zeros (p/q, or undef for a degenerate factor).
    #[arg(long)]
    zeros: bool,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct BoundsArgs {
    /// Bit string c0c1...ck, e.g. 01 for the Stirling numbers.
    #[arg(long, value_parser = parse_mask)]
    mask: Mask,
    /// Row to bound.
    #[arg(long, value_parser = positive_usize)]
    n: usize,
    /// Tail offsets M1, comma separated.
    #[arg(long, value_delimiter = ',', default_value = "1,2,3", value_parser = positive_u64)]
    m1: Vec<u64>,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct StirlingArgs {
    /// Last row to compute.
    #[arg(long, default_value_t = 30, value_parser = positive_usize)]
    n: usize,
    #[command(flatten)]
    output: Output,
}

/// Everything a subcommand needs, independent of how it was parsed.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub mask: Mask,
    pub max_n: usize,
    pub format: Format,
    pub budget: u64,
    pub subset_limit: usize,
    pub m1s: Vec<u64>,
    pub out: Option<PathBuf>,
    pub oracle: bool,
    pub zeros: bool,
    pub kind: PolyKind,
    pub corrupt_cell: Option<(usize, i64)>,
}

impl RunConfig {
    pub fn new(mask: Mask, max_n: usize) -> Self {
        RunConfig {
            mask,
            max_n,
            format: Format::Plain,
            budget: DEFAULT_BUDGET,
            subset_limit: DEFAULT_SUBSET_LIMIT,
            m1s: vec![1, 2, 3],
            out: None,
            oracle: false,
            zeros: false,
            kind: PolyKind::Rising,
            corrupt_cell: None,
        }
    }
}

/// A command's rendered output plus its verdict.
pub struct Report {
    pub text: String,
    pub warnings: Vec<String>,
    pub code: ExitCode,
}

impl Report {
    fn ok(text: String) -> Self {
        Report {
            text,
            warnings: Vec::new(),
            code: ExitCode::Ok,
        }
    }

    fn verdict(text: String, passed: bool) -> Self {
        Report {
            text,
            warnings: Vec::new(),
            code: if passed {
                ExitCode::Ok
            } else {
                ExitCode::CheckFailed
            },
        }
    }
}

pub fn cmd_triangle(cfg: &RunConfig) -> crate::Result<Report> {
    let tri = Triangle::new(&cfg.mask, cfg.max_n)?;
    Ok(Report::ok(format::render_triangle(&tri, cfg.format)))
}

pub fn cmd_verify(cfg: &RunConfig) -> crate::Result<Report> {
    let mut tri = Triangle::new(&cfg.mask, cfg.max_n)?;
    if let Some((n, m)) = cfg.corrupt_cell {
        let mut rows = tri.rows().to_vec();
        let u = m - cfg.mask.last() as i64;
        if let Some(cell) = rows
            .get_mut(n - 1)
            .and_then(|row| usize::try_from(u).ok().and_then(|u| row.get_mut(u)))
        {
            *cell += 1u32;
        }
        tri = Triangle::from_rows(cfg.mask.clone(), rows)?;
    }
    let opts = VerifyOptions {
        oracle: cfg.oracle,
        budget: cfg.budget,
        subset_limit: cfg.subset_limit,
    };
    let (checks, warnings) = run_checks(&tri, &opts);
    let mut text = format!(
        "mask {}  k {}  n 1..={}\n",
        cfg.mask,
        cfg.mask.k(),
        cfg.max_n
    );
    writeln!(text, "{:<14}{:<8}DETAIL", "CHECK", "STATUS").unwrap();
    for c in &checks {
        writeln!(text, "{:<14}{:<8}{}", c.name, c.status, c.detail).unwrap();
    }
    let passed = checks.iter().all(|c| c.status != Status::Fail);
    writeln!(text, "verdict: {}", if passed { "PASS" } else { "FAIL" }).unwrap();
    let mut report = Report::verdict(text, passed);
    report.warnings = warnings;
    Ok(report)
}

pub fn cmd_poly(cfg: &RunConfig) -> crate::Result<Report> {
    let poly = match cfg.kind {
        PolyKind::Rising => rising_poly(&cfg.mask, cfg.max_n)?,
        PolyKind::Falling => falling_poly(&cfg.mask, cfg.max_n)?,
    };
    let coefficients: Vec<String> = poly.coefficients().iter().map(|c| c.to_string()).collect();
    let zeros: Option<Vec<String>> = if cfg.zeros {
        Some(
            poly_zeros(&cfg.mask, cfg.max_n, cfg.kind)?
                .iter()
                .map(|r| r.to_string())
                .collect(),
        )
    } else {
        None
    };
    let text = match cfg.format {
        Format::Plain => {
            let mut t = format!("coefficients: {}\n", coefficients.join(","));
            if let Some(z) = &zeros {
                writeln!(t, "zeros: {}", z.join(",")).unwrap();
            }
            t
        }
        Format::Csv => {
            let mut t = String::from("power,coefficient\n");
            for (p, c) in coefficients.iter().enumerate() {
                writeln!(t, "{p},{c}").unwrap();
            }
            if let Some(z) = &zeros {
                t.push_str("\nindex,zero\n");
                for (i, r) in z.iter().enumerate() {
                    writeln!(t, "{},{r}", i + 1).unwrap();
                }
            }
            t
        }
        Format::Json => {
            let mut doc = json!({
                "mask": cfg.mask.to_string(),
                "n": cfg.max_n,
                "kind": cfg.kind.to_string(),
                "coefficients": coefficients,
            });
            if let Some(z) = zeros {
                doc["zeros"] = json!(z);
            }
            serde_json::to_string_pretty(&doc).unwrap() + "\n"
        }
    };
    Ok(Report::ok(text))
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn render_bounds_plain(r: &BoundReport) -> String {
    let mut t = format!("mask {}  k {}  n {}\n", r.mask, r.mask.k(), r.n);
    writeln!(t, "m,value,ocmax,dominance").unwrap();
    for (m, v) in &r.values {
        writeln!(t, "{m},{v},{},{}", r.upper_bounds[m], pass(r.dominance(*m))).unwrap();
    }
    writeln!(t, "lambda = {} ({:.12})", r.lambda, to_f64(&r.lambda)).unwrap();
    writeln!(
        t,
        "lambda' = {} ({:.12})",
        r.lambda_prime,
        to_f64(&r.lambda_prime)
    )
    .unwrap();
    writeln!(
        t,
        "ratio = {} ({:.12}) <= e^lambda = {:.15e}: {}",
        r.ratio,
        to_f64(&r.ratio),
        r.exp_lambda.midpoint_f64(),
        pass(r.ratio_within_exp_lambda)
    )
    .unwrap();
    writeln!(
        t,
        "ratio' = {} ({:.12}) <= e^lambda' = {:.15e}: {}",
        r.ratio_prime,
        to_f64(&r.ratio_prime),
        r.exp_lambda_prime.midpoint_f64(),
        pass(r.ratio_prime_within_exp_lambda_prime)
    )
    .unwrap();
    if let Some(ok) = r.ratio_within_e_gamma {
        writeln!(t, "ratio <= 1.7811: {}", pass(ok)).unwrap();
    }
    for tail in &r.tails {
        let event = match tail.side {
            TailSide::Upper => format!("m > {}", tail.boundary),
            TailSide::Lower => format!("m < {}", tail.boundary),
        };
        writeln!(
            t,
            "tail M1={}: M={}, Pr[{event}] = {} ({:.12}) <= e^-{} = {:.15e}: {}",
            tail.m1,
            tail.threshold,
            tail.probability,
            to_f64(&tail.probability),
            tail.m1,
            tail.bound.midpoint_f64(),
            pass(tail.holds)
        )
        .unwrap();
    }
    writeln!(t, "verdict: {}", pass(r.all_hold())).unwrap();
    t
}

fn render_bounds_json(r: &BoundReport) -> String {
    let rows: Vec<_> = r
        .values
        .iter()
        .map(|(m, v)| {
            json!({
                "m": m,
                "value": v.to_string(),
                "ocmax": r.upper_bounds[m].to_string(),
                "dominance": r.dominance(*m),
            })
        })
        .collect();
    let tails: Vec<_> = r
        .tails
        .iter()
        .map(|tail| {
            json!({
                "m1": tail.m1,
                "threshold": tail.threshold,
                "side": match tail.side { TailSide::Upper => "upper", TailSide::Lower => "lower" },
                "boundary": tail.boundary,
                "probability": tail.probability.to_string(),
                "bound": tail.bound.midpoint_f64(),
                "holds": tail.holds,
            })
        })
        .collect();
    let doc = json!({
        "mask": r.mask.to_string(),
        "k": r.mask.k(),
        "n": r.n,
        "rows": rows,
        "lambda": r.lambda.to_string(),
        "lambda_prime": r.lambda_prime.to_string(),
        "ratio": r.ratio.to_string(),
        "ratio_prime": r.ratio_prime.to_string(),
        "exp_lambda": r.exp_lambda.midpoint_f64(),
        "exp_lambda_prime": r.exp_lambda_prime.midpoint_f64(),
        "ratio_within_exp_lambda": r.ratio_within_exp_lambda,
        "ratio_prime_within_exp_lambda_prime": r.ratio_prime_within_exp_lambda_prime,
        "ratio_within_e_gamma": r.ratio_within_e_gamma,
        "tails": tails,
        "verdict": r.all_hold(),
    });
    serde_json::to_string_pretty(&doc).unwrap() + "\n"
}

pub fn cmd_bounds(cfg: &RunConfig) -> crate::Result<Report> {
    let report = bound_report(&cfg.mask, cfg.max_n, &cfg.m1s)?;
    let text = match cfg.format {
        Format::Json => render_bounds_json(&report),
        Format::Plain | Format::Csv => render_bounds_plain(&report),
    };
    Ok(Report::verdict(text, report.all_hold()))
}

pub fn cmd_stirling(cfg: &RunConfig) -> crate::Result<Report> {
    let tri = Triangle::new(&Mask::stirling(), cfg.max_n)?;
    let diffs = stirling_diff(&tri, &stirling_ref(cfg.max_n));
    let mut text = String::new();
    for d in &diffs {
        writeln!(text, "{d}").unwrap();
    }
    if diffs.is_empty() {
        writeln!(text, "OK: {} rows identical", cfg.max_n).unwrap();
    } else {
        writeln!(text, "FAIL: {} cells differ", diffs.len()).unwrap();
    }
    Ok(Report::verdict(text, diffs.is_empty()))
}

fn config_from(command: Command) -> (RunConfig, fn(&RunConfig) -> crate::Result<Report>) {
    match command {
        Command::Triangle(a) => {
            let mut cfg = RunConfig::new(a.mask, a.n);
            cfg.format = a.format;
            cfg.out = a.output.out;
            (cfg, cmd_triangle)
        }
        Command::Verify(a) => {
            let mut cfg = RunConfig::new(a.mask, a.n);
            cfg.oracle = a.oracle;
            cfg.budget = a.budget;
            cfg.subset_limit = a.subset_limit;
            cfg.corrupt_cell = a.corrupt_cell;
            cfg.out = a.output.out;
            (cfg, cmd_verify)
        }
        Command::Poly(a) => {
            let mut cfg = RunConfig::new(a.mask, a.n);
            cfg.kind = match a.kind {
                KindArg::Rising => PolyKind::Rising,
                KindArg::Falling => PolyKind::Falling,
            };
            cfg.zeros = a.zeros;
            cfg.format = a.format;
            cfg.out = a.output.out;
            (cfg, cmd_poly)
        }
        Command::Bounds(a) => {
            let mut cfg = RunConfig::new(a.mask, a.n);
            cfg.m1s = a.m1;
            cfg.format = a.format;
            cfg.out = a.output.out;
            (cfg, cmd_bounds)
        }
        Command::Stirling(a) => {
            let mut cfg = RunConfig::new(Mask::stirling(), a.n);
            cfg.out = a.output.out;
            (cfg, cmd_stirling)
        }
    }
}

/// Parses `args` (program name first), runs the subcommand and returns the
/// exit code. Never panics on valid input.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
                ExitCode::Usage as i32
            } else {
                let _ = write!(stdout, "{rendered}");
                ExitCode::Ok as i32
            };
        }
    };
    let (cfg, command) = config_from(cli.command);
    let report = match command(&cfg) {
        Ok(report) => report,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return ExitCode::Usage as i32;
        }
    };
    for w in &report.warnings {
        let _ = writeln!(stderr, "warning: {w}");
    }
    let written = match &cfg.out {
        Some(path) => std::fs::write(path, &report.text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => stdout
            .write_all(report.text.as_bytes())
            .and_then(|_| stdout.flush())
            .map_err(|e| format!("cannot write to standard output: {e}")),
    };
    if let Err(msg) = written {
        let _ = writeln!(stderr, "error: {msg}");
        return ExitCode::Io as i32;
    }
    report.code as i32
}
