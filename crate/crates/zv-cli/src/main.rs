//! `zv` — finite multiple zeta values mod p: inspect individual values and
//! verify the relations among them over ranges of primes.
//!
//! Exit codes: 0 all checks pass, 1 at least one counterexample, 2 usage or
//! configuration error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use zv_cli::config::{parse_kinds, parse_prime_range, SweepConfig};
use zv_cli::report::{emit_report, OutputFormat};
use zv_cli::sweep::run_verify;
use zv_core::{mhs, n_coefficient, z_value, Index, Rational};

#[derive(Parser)]
#[command(
    name = "zv",
    version,
    about = "Finite multiple zeta values mod p: harmonic sums, Hoffman duality, \
             Bernoulli-side values, and relation verification sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Hoffman dual of an index ("k1,k2,...,kr").
    Dual {
        /// Index in the "k1,k2,...,kr" text form.
        index: String,
    },
    /// Evaluate a multiple harmonic sum mod p.
    Mhs {
        /// Index in the "k1,k2,...,kr" text form.
        index: String,
        /// Odd prime modulus.
        #[arg(short, long)]
        prime: u64,
        /// Use weakly decreasing chains (the star variant).
        #[arg(long)]
        star: bool,
    },
    /// Print Z(k) = B_{p-k}/k mod p.
    Zvalue {
        k: u32,
        /// Prime modulus, at least k + 2.
        #[arg(short, long)]
        prime: u64,
    },
    /// Print the restricted-sum coefficient N and N/2 for (k, r, i, j).
    Coeff { k: u32, r: u32, i: u32, j: u32 },
    /// Verify relation families over a range of primes.
    Verify(VerifyArgs),
    /// Scan even weights for nonzero restricted sums (non-asserting).
    ExploreEven {
        #[arg(long, default_value_t = 8)]
        max_weight: u32,
        /// Inclusive prime range LO..HI.
        #[arg(long, default_value = "5..199")]
        primes: String,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Relation kinds to check (comma-separated names, or "all").
    #[arg(long, value_delimiter = ',', default_value = "all")]
    kinds: Vec<String>,
    #[arg(long, default_value_t = 9)]
    max_weight: u32,
    /// Depth cap for index-valued parameters (permutation sums grow as r!).
    #[arg(long, default_value_t = 5)]
    max_depth: u32,
    /// Largest Ohno-type shift m.
    #[arg(long, default_value_t = 4)]
    max_shift: u32,
    /// Inclusive prime range LO..HI.
    #[arg(long, default_value = "5..199")]
    primes: String,
    /// Worker count (default: ZV_JOBS, then the number of CPUs).
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Zero all elapsed fields so equal runs emit identical bytes.
    #[arg(long)]
    stable: bool,
    /// Also evaluate Z-free identities at primes below their assertion
    /// threshold and report the outcomes without failing the run.
    #[arg(long)]
    boundary_scan: bool,
    /// Attach the even-weight restricted-sum scan to the report.
    #[arg(long)]
    even_explore: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
            Format::Text => OutputFormat::Text,
        }
    }
}

fn resolve_jobs(flag: Option<usize>) -> usize {
    flag.or_else(|| std::env::var("ZV_JOBS").ok().and_then(|v| v.parse().ok()))
        .unwrap_or_else(|| {
            std::thread::available_parallelism()
                .map(|n| n.get())
                .unwrap_or(1)
        })
        .max(1)
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Dual { index } => {
            let index = Index::from_str(&index)?;
            println!("{}", index.hoffman_dual()?);
            Ok(0)
        }
        Command::Mhs { index, prime, star } => {
            let index = Index::from_str(&index)?;
            println!("{}", mhs(&index, prime, star)?);
            Ok(0)
        }
        Command::Zvalue { k, prime } => {
            println!("{}", z_value(k, prime)?);
            Ok(0)
        }
        Command::Coeff { k, r, i, j } => {
            let n = n_coefficient(k, r, i, j)?;
            println!("N = {n}");
            println!("N/2 = {}", Rational::half(n));
            Ok(0)
        }
        Command::Verify(args) => {
            let (prime_lo, prime_hi) = parse_prime_range(&args.primes)?;
            let config = SweepConfig {
                kinds: parse_kinds(&args.kinds)?,
                weight_max: args.max_weight,
                depth_max: args.max_depth,
                shift_max: args.max_shift,
                prime_lo,
                prime_hi,
                jobs: resolve_jobs(args.jobs),
                stable: args.stable,
                boundary_scan: args.boundary_scan,
                even_explore: args.even_explore,
            };
            let report = run_verify(&config)?;
            let rendered = emit_report(&report, args.format.into())?;
            match &args.out {
                Some(path) => fs::write(path, rendered)
                    .with_context(|| format!("cannot write {}", path.display()))?,
                None => print!("{rendered}"),
            }
            Ok(report.exit_code())
        }
        Command::ExploreEven { max_weight, primes } => {
            let (lo, hi) = parse_prime_range(&primes)?;
            let primes = zv_cli::primes_in_range(lo, hi)?;
            let scan = zv_core::explore_even(max_weight, &primes)?;
            println!(
                "scanned {} (k,r,i,j,p) tuples with even k <= {max_weight}, primes {lo}..{hi}",
                scan.scanned
            );
            println!("Z(k) vanished at every scanned pair: {}", scan.z_all_zero);
            println!("nonzero restricted sums: {}", scan.samples.len());
            for s in scan.samples.iter().take(30) {
                println!(
                    "  S(k={},r={},i={},j={}) = {} (mod {})",
                    s.k, s.r, s.i, s.j, s.value, s.prime
                );
            }
            if scan.samples.len() > 30 {
                println!("  ... {} more", scan.samples.len() - 30);
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    // Die silently on closed pipes (`zv ... | head`) instead of panicking.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
