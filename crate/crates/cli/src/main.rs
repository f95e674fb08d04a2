//! `fermatp` — classify the solutions of x^n + y^n = z^n over Z_p from the
//! command line.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing check, 2 on
//! usage or input errors.

use std::io::{self, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod analyze;
mod bench;
mod generators;
mod tables;
mod verify;

#[derive(Parser)]
#[command(name = "fermatp", version, about = "Solutions of x^n + y^n = z^n in Z_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Report both solution types for every exponent 1 <= n <= p-1.
    Analyze {
        /// The prime modulus.
        p: u64,
        /// Use this generator of Z_p* instead of the least primitive root.
        #[arg(long)]
        generator: Option<u64>,
        /// Enumerate shift pairs the long way instead of the fast criterion.
        #[arg(long)]
        faithful: bool,
        /// Largest prime the faithful solver accepts.
        #[arg(long, default_value_t = fermatp::analysis::DEFAULT_FAITHFUL_BOUND)]
        faithful_bound: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write here instead of stdout; an existing directory gets the
        /// cache-named JSON file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record a timestamp in the provenance block (bare flag: seconds
        /// since the Unix epoch). Off by default so reruns emit identical
        /// bytes.
        #[arg(long, num_args = 0..=1)]
        timestamp: Option<Option<String>>,
    },
    /// Print the basic solutions as equation tables, exponents paired n with p-1-n.
    Tables {
        /// The prime modulus.
        p: u64,
        /// Use this generator of Z_p* instead of the least primitive root.
        #[arg(long)]
        generator: Option<u64>,
        /// Render type-1 rows in the unit-sum form u^n + v^n = 1 (text only).
        #[arg(long)]
        unit_sum: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every structural check against the brute-force oracle.
    Verify {
        /// Check every odd prime up to this bound.
        #[arg(long, default_value_t = 100)]
        pmax: u64,
        /// Largest prime the oracle-backed checks accept.
        #[arg(long, default_value_t = fermatp::oracle::DEFAULT_ORACLE_BOUND)]
        oracle_bound: u64,
        /// Skip the oracle and faithful-solver comparisons.
        #[arg(long)]
        lemmas_only: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Time the four type-1 solvers over all exponents of each prime (CSV).
    Bench {
        /// Primes to benchmark.
        #[arg(required = true)]
        primes: Vec<u64>,
        /// Samples per (solver, prime); the median is reported.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
        runs: u32,
        /// Largest prime the oracle column accepts.
        #[arg(long, default_value_t = fermatp::oracle::DEFAULT_ORACLE_BOUND)]
        oracle_bound: u64,
        /// Largest prime the faithful column accepts.
        #[arg(long, default_value_t = fermatp::analysis::DEFAULT_FAITHFUL_BOUND)]
        faithful_bound: u64,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List odd primes whose least primitive root exceeds 6.
    CheckSmallGenerators {
        /// Scan every odd prime up to this bound.
        #[arg(long, default_value_t = 1000)]
        pmax: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze { p, generator, faithful, faithful_bound, format, out, timestamp } => {
            analyze::run(p, generator, faithful, faithful_bound, format, out, timestamp)
        }
        Command::Tables { p, generator, unit_sum, format, out } => {
            tables::run(p, generator, unit_sum, format, out)
        }
        Command::Verify { pmax, oracle_bound, lemmas_only, format } => {
            verify::run(pmax, oracle_bound, lemmas_only, format)
        }
        Command::Bench { primes, runs, oracle_bound, faithful_bound, out } => {
            bench::run(&primes, runs, oracle_bound, faithful_bound, out)
        }
        Command::CheckSmallGenerators { pmax } => generators::run(pmax),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

/// Stdout by default, a buffered file when `--out` names one.
fn open_sink(out: Option<&PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    match out {
        None => Ok(Box::new(io::BufWriter::new(io::stdout()))),
        Some(path) => {
            let file = std::fs::File::create(path)
                .map_err(|e| anyhow::anyhow!("cannot write {}: {e}", path.display()))?;
            Ok(Box::new(io::BufWriter::with_capacity(1 << 20, file)))
        }
    }
}

/// Wrap `text` in an ANSI color code when stdout is an unsuppressed terminal.
fn paint(text: &str, code: &str) -> String {
    let colored = std::env::var_os("NO_COLOR").is_none() && io::stdout().is_terminal();
    if colored {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}
