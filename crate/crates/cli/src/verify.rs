//! `fermatp verify` — run the structural check battery and report per-check
//! pass/fail with counterexamples.

use std::io::Write;
use std::process::ExitCode;

use fermatp::verify::{full_sweep, SweepReport};
use serde::Serialize;

use crate::{paint, Format};

/// How many counterexamples a failing check prints in text mode.
const SHOWN_FAILURES: usize = 5;

pub fn run(
    pmax: u64,
    oracle_bound: u64,
    lemmas_only: bool,
    format: Format,
) -> anyhow::Result<ExitCode> {
    let checks = full_sweep(pmax, oracle_bound, lemmas_only);
    let all_passed = checks.iter().all(SweepReport::passed);
    match format {
        Format::Json => print_json(pmax, oracle_bound, lemmas_only, &checks, all_passed)?,
        // The battery has no natural CSV shape; fall back to text.
        Format::Text | Format::Csv => print_text(&checks)?,
    }
    Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn print_text(checks: &[SweepReport]) -> anyhow::Result<()> {
    let mut sink = std::io::BufWriter::new(std::io::stdout());
    for check in checks {
        if check.passed() {
            writeln!(sink, "{} {} ({} cases)", paint("PASS", "32"), check.name, check.cases)?;
        } else {
            writeln!(
                sink,
                "{} {} ({} cases, {} failures)",
                paint("FAIL", "31"),
                check.name,
                check.cases,
                check.failures.len()
            )?;
            for failure in check.failures.iter().take(SHOWN_FAILURES) {
                match failure.n {
                    Some(n) => writeln!(sink, "    p={} n={}: {}", failure.p, n, failure.detail)?,
                    None => writeln!(sink, "    p={}: {}", failure.p, failure.detail)?,
                }
            }
            if check.failures.len() > SHOWN_FAILURES {
                writeln!(sink, "    ... {} more", check.failures.len() - SHOWN_FAILURES)?;
            }
        }
    }
    let passed = checks.iter().filter(|c| c.passed()).count();
    writeln!(sink, "{passed}/{} checks passed", checks.len())?;
    sink.flush()?;
    Ok(())
}

fn print_json(
    pmax: u64,
    oracle_bound: u64,
    lemmas_only: bool,
    checks: &[SweepReport],
    passed: bool,
) -> anyhow::Result<()> {
    #[derive(Serialize)]
    struct Document<'a> {
        pmax: u64,
        oracle_bound: u64,
        lemmas_only: bool,
        passed: bool,
        checks: &'a [SweepReport],
    }
    let doc = Document { pmax, oracle_bound, lemmas_only, passed, checks };
    let mut sink = std::io::BufWriter::new(std::io::stdout());
    serde_json::to_writer(&mut sink, &doc)?;
    writeln!(sink)?;
    sink.flush()?;
    Ok(())
}
