//! Command implementations behind the `permroot` binary.
//!
//! Each command returns its rendered output together with the process exit
//! status: 0 on success, 1 when `verify` finds a counterexample, 2 for
//! usage and guard errors.

use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use permroot::sequences::{format_bfile, identity_root_counts, SequenceSpec};
use permroot::series::{build_signed_difference_series, build_total_root_series};
use permroot::{count_roots, has_kth_root, CycleType, Parity};
use serde_json::json;

pub const MAX_SERIES_WEIGHT: u32 = 64;
pub const MAX_VERIFY_N: u32 = 10;
pub const WORKERS_ENV: &str = "PERMROOT_WORKERS";

#[derive(Debug, Parser)]
#[command(
    name = "permroot",
    version,
    about = "Count even, odd and total k-th roots of permutations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Root counts for one cycle type, e.g. `--type "1^2,3^1"`
    Roots(RootsArgs),
    /// Dump the root-count generating function up to a weight bound
    Series(SeriesArgs),
    /// Emit an OEIS-style b-file for roots of the identity
    Oeis(OeisArgs),
    /// Compare brute force, closed form and series on every small cycle type
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct RootsArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,
    /// Cycle type: comma-separated `length^multiplicity` terms
    #[arg(long = "type", allow_hyphen_values = true)]
    pub type_text: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub k: u32,
    #[arg(long = "max-weight")]
    pub max_weight: u32,
    /// Dump the (even − odd) series instead of the total
    #[arg(long)]
    pub signed: bool,
}

#[derive(Debug, Args)]
pub struct OeisArgs {
    /// Sequence id such as A000704; omit to use --k and --parity
    pub id: Option<String>,
    #[arg(long, default_value_t = 10)]
    pub terms: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..), conflicts_with = "id", requires = "parity")]
    pub k: Option<u32>,
    #[arg(long, value_parser = parse_parity, conflicts_with = "id", requires = "k")]
    pub parity: Option<Parity>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "max-n")]
    pub max_n: u32,
    /// Comma-separated root degrees
    #[arg(long = "k", value_delimiter = ',', required = true, value_parser = clap::value_parser!(u32).range(1..))]
    pub ks: Vec<u32>,
    /// Worker threads; defaults to $PERMROOT_WORKERS, then the CPU count
    #[arg(long, env = WORKERS_ENV, value_parser = clap::value_parser!(u32).range(1..))]
    pub workers: Option<u32>,
}

fn parse_parity(s: &str) -> Result<Parity, String> {
    s.parse()
        .map_err(|e: permroot::SequenceError| e.to_string())
}

/// What a command printed and how the process should exit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn usage(message: impl Into<String>) -> Outcome {
        Outcome {
            stdout: String::new(),
            stderr: message.into() + "\n",
            code: 2,
        }
    }
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Roots(a) => cmd_roots(a.k, &a.type_text, a.format),
        Command::Series(a) => cmd_series(a.k, a.max_weight, a.signed),
        Command::Oeis(a) => cmd_oeis(&a),
        Command::Verify(a) => {
            let workers = a
                .workers
                .map(|w| w as usize)
                .unwrap_or_else(default_workers);
            cmd_verify(a.max_n, &a.ks, workers)
        }
    }
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

pub fn cmd_roots(k: u32, type_text: &str, format: Format) -> Outcome {
    let c: CycleType = match type_text.parse() {
        Ok(c) => c,
        Err(e) => return Outcome::usage(format!("error: invalid cycle type '{type_text}': {e}")),
    };
    let counts = count_roots(k, &c);
    let has_root = has_kth_root(k, &c);
    let out = match format {
        Format::Json => {
            let v = json!({
                "n": c.size(),
                "k": k,
                "total": counts.total.to_string(),
                "even": counts.even.to_string(),
                "odd": counts.odd.to_string(),
                "has_root": has_root,
            });
            format!("{v}\n")
        }
        Format::Text => format!(
            "type     {c}\nn        {}\nk        {k}\ntotal    {}\neven     {}\nodd      {}\nhas_root {has_root}\n",
            c.size(),
            counts.total,
            counts.even,
            counts.odd,
        ),
    };
    Outcome::ok(out)
}

pub fn cmd_series(k: u32, max_weight: u32, signed: bool) -> Outcome {
    if max_weight > MAX_SERIES_WEIGHT {
        return Outcome::usage(format!(
            "error: --max-weight {max_weight} exceeds the limit of {MAX_SERIES_WEIGHT}"
        ));
    }
    let s = if signed {
        build_signed_difference_series(k, max_weight)
    } else {
        build_total_root_series(k, max_weight)
    };
    Outcome::ok(s.to_text())
}

pub fn cmd_oeis(args: &OeisArgs) -> Outcome {
    let (k, parity, offset) = match (&args.id, args.k, args.parity) {
        (Some(id), _, _) => match SequenceSpec::lookup(id) {
            Ok(spec) => (spec.k, spec.parity, spec.offset),
            Err(e) => return Outcome::usage(format!("error: {e}")),
        },
        (None, Some(k), Some(parity)) => (k, parity, 0),
        _ => return Outcome::usage("error: give a sequence id, or both --k and --parity"),
    };
    match identity_root_counts(k, parity, args.terms) {
        Ok(values) => Outcome::ok(format_bfile(offset, &values)),
        Err(e) => Outcome::usage(format!("error: {e}")),
    }
}

pub fn cmd_verify(max_n: u32, ks: &[u32], workers: usize) -> Outcome {
    if max_n > MAX_VERIFY_N {
        return Outcome::usage(format!(
            "error: --max-n {max_n} exceeds the limit of {MAX_VERIFY_N}"
        ));
    }
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
    {
        Ok(p) => p,
        Err(e) => return Outcome::usage(format!("error: cannot start workers: {e}")),
    };
    let start = Instant::now();
    let report = match pool.install(|| permroot::verify::verify(max_n, ks)) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(format!("error: {e}")),
    };
    let mut stdout = report.render();
    stdout.push_str(&format!("elapsed {:.3}s\n", start.elapsed().as_secs_f64()));
    let code = if report.passed() { 0 } else { 1 };
    Outcome {
        stdout,
        stderr: String::new(),
        code,
    }
}
