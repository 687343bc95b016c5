//! Command-line front end for the setwise certificate library: exact
//! character values and tables, derangement-class listings, spectrum
//! reports, certificate construction (direct, hybrid, and search-based),
//! and brute-force oracle checks on explicit small groups.
//!
//! Exit codes: 0 on success (certificates verified), 1 on usage or input
//! errors, 2 on certification or verification failure. All output is
//! deterministic: identical invocations produce byte-identical reports.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use output::Format;

/// Environment variable capping the worker pool used for parallel spectrum
/// evaluation; unset or 0 means one worker per core. Ignored in builds
/// without the `parallel` feature.
const THREADS_ENV: &str = "SETWISE_THREADS";

#[derive(Parser)]
#[command(
    name = "setwise",
    version,
    about = "Exact spectral certificates bounding 3-setwise intersecting permutation families",
    max_term_width = 100
)]
struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an irreducible character value exactly, or print the
    /// certificate character tables instantiated at n.
    Char(CharArgs),
    /// List the t-derangement conjugacy classes of Sym(n) with class sizes.
    Classes(ClassesArgs),
    /// Construct and verify a certificate for alpha(Gamma_{n,3}) <= 6(n-3)!.
    Certify(CertifyArgs),
    /// Compute the exact spectrum of the certificate weighting at a point.
    Spectrum(SpectrumArgs),
    /// Scan candidate weightings for small n and certify the first success.
    Search(SearchArgs),
    /// Brute-force cross-checks on explicitly constructed groups (small n).
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Args)]
struct CharArgs {
    /// Symmetric group degree n.
    n: u32,
    /// Partition of n, e.g. "[25,2]"; exponent shorthand "[2^3,1]" accepted.
    #[arg(value_name = "LAMBDA", required_unless_present = "table")]
    lambda: Option<String>,
    /// Cycle type of n, e.g. "(25,1,1)"; same syntax as LAMBDA.
    #[arg(value_name = "RHO", required_unless_present = "table")]
    rho: Option<String>,
    /// Print the constituent and small-degree character tables at n instead
    /// of a single value (csv format emits the small-degree table).
    #[arg(long, conflicts_with_all = ["lambda", "rho"])]
    table: bool,
}

#[derive(Args)]
struct ClassesArgs {
    /// Symmetric group degree n.
    n: u32,
    /// Intersection parameter t (a class is listed when no sub-multiset of
    /// its cycle lengths sums to t).
    #[arg(long, default_value_t = 3)]
    t: u32,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum CertifyMode {
    /// Route by n: closed-form point for odd n >= 27 / even n >= 20,
    /// search for smaller n (from 11).
    Auto,
    /// Full exact spectrum at the chosen point (n >= 12).
    Exact,
    /// Exact below the degree threshold, magnitude tail bound above.
    Hybrid,
}

#[derive(Args)]
struct CertifyArgs {
    /// Symmetric group degree n.
    n: u32,
    /// Weight parameters "t,s"; each coordinate an integer or "p/q".
    /// Defaults to the parity case's canonical feasible point.
    #[arg(long)]
    point: Option<String>,
    /// Certification pipeline.
    #[arg(long, value_enum, default_value_t = CertifyMode::Auto)]
    mode: CertifyMode,
    /// Candidate budget when auto mode routes to the search pipeline.
    #[arg(long, default_value_t = 2000)]
    budget: usize,
    /// Also write the certificate JSON to this file.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum SpectrumMode {
    /// Every partition of n, exactly.
    Exact,
    /// Exact rows below the degree threshold plus a tail magnitude bound.
    Hybrid,
}

#[derive(Args)]
struct SpectrumArgs {
    /// Symmetric group degree n (odd n >= 11, even n >= 12).
    n: u32,
    /// Weight parameters "t,s"; defaults to the canonical feasible point.
    #[arg(long)]
    point: Option<String>,
    /// Evaluation mode.
    #[arg(long, value_enum, default_value_t = SpectrumMode::Exact)]
    mode: SpectrumMode,
    /// Degree threshold for hybrid mode (defaults to the case threshold,
    /// 5*C(n,3) odd / 3*C(n,3) even).
    #[arg(long)]
    threshold: Option<String>,
    /// Also write the report JSON to this file.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    /// Symmetric group degree n (n >= 11).
    n: u32,
    /// Number of candidate points to scan before giving up.
    #[arg(long, default_value_t = 2000)]
    budget: usize,
    /// Also write the certificate JSON to this file.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
enum OracleModeArg {
    /// Dense f64 eigensolve matched within 1e-9.
    Float,
    /// Integer annihilator and moment verification; no floating point.
    Exact,
}

#[derive(Args)]
struct OracleSpectrumArgs {
    /// Symmetric group degree n (float mode: n <= 6; exact mode: n <= 5).
    n: u32,
    /// Cycle types of the weighting, separated by ';' (default: all
    /// 3-derangement classes of Sym(n)).
    #[arg(long)]
    classes: Option<String>,
    /// Class weights, separated by ';' (default: class sizes, i.e. unit
    /// weight on every element).
    #[arg(long)]
    omegas: Option<String>,
    /// Verification mode.
    #[arg(long, value_enum, default_value_t = OracleModeArg::Float)]
    mode: OracleModeArg,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Build the dense n! x n! Cayley matrix and verify its eigenvalue
    /// multiset against the character predictions.
    Spectrum(OracleSpectrumArgs),
    /// Verify both orthogonality relations of the full character table.
    Orthogonality {
        /// Symmetric group degree n (n <= 9).
        n: u32,
    },
    /// Exact maximum coclique of Gamma_{n,3} by branch and bound.
    Mis {
        /// Symmetric group degree n.
        n: u32,
        /// Largest n the search will accept (hard ceiling 6).
        #[arg(long, default_value_t = 5)]
        cap: u32,
    },
    /// Emit the canonical coclique, the setwise stabilizer of {1,2,3}.
    Canonical {
        /// Symmetric group degree n (4 <= n <= 10).
        n: u32,
    },
}

/// Restore the default SIGPIPE disposition so that piping report output into
/// `head` or a pager ends the process quietly instead of panicking on a
/// closed stdout.
#[cfg(unix)]
fn reset_sigpipe() {
    // SAFETY: installing SIG_DFL before any other thread exists cannot race,
    // and the default disposition simply terminates the process on SIGPIPE.
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

#[cfg(not(unix))]
fn reset_sigpipe() {}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    init_thread_pool();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    match &cli.command {
        Command::Char(args) => commands::cmd_char(args, cli.format),
        Command::Classes(args) => commands::cmd_classes(args, cli.format),
        Command::Certify(args) => commands::cmd_certify(args, cli.format),
        Command::Spectrum(args) => commands::cmd_spectrum(args, cli.format),
        Command::Search(args) => commands::cmd_search(args, cli.format),
        Command::Oracle(command) => commands::cmd_oracle(command, cli.format),
    }
}

/// Certification failures exit 2; every other failure is a usage or input
/// problem and exits 1.
fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<setwise::Error>() {
        Some(setwise::Error::Certification { .. }) => 2,
        _ => 1,
    }
}

#[cfg(feature = "parallel")]
fn init_thread_pool() {
    if let Ok(value) = std::env::var(THREADS_ENV) {
        match value.parse::<usize>() {
            Ok(threads) if threads > 0 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
            Ok(_) => {}
            Err(_) => eprintln!("warning: ignoring non-numeric {THREADS_ENV}={value:?}"),
        }
    }
}

#[cfg(not(feature = "parallel"))]
fn init_thread_pool() {
    // Sequential build: the variable is documented as ignored here.
    let _ = std::env::var(THREADS_ENV);
}
