//! `fermatp bench` — wall-clock medians for the four type-1 solvers.
//!
//! Each column times one solver producing the type-1 basic report for every
//! exponent 1 <= n <= p-1. Solvers whose bound excludes a prime leave an
//! empty cell (noted on stderr).

use std::hint::black_box;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use fermatp::oracle::brute_force_with_bound;
use fermatp::type1::{exponent_mirror, next_in_line, subgroup_scan};
use fermatp::{DlogTable, Prime, SolveMode};

pub fn run(
    primes: &[u64],
    runs: u32,
    oracle_bound: u64,
    faithful_bound: u64,
    out: Option<PathBuf>,
) -> anyhow::Result<ExitCode> {
    let mut validated: Vec<Prime> = primes
        .iter()
        .map(|&p| Prime::new(p).map_err(anyhow::Error::from))
        .collect::<anyhow::Result<_>>()?;
    validated.sort();
    validated.dedup();

    let mut sink = crate::open_sink(out.as_ref())?;
    writeln!(sink, "p,fast_ms,subgroup_ms,oracle_ms,faithful_ms")?;
    for &p in &validated {
        let order = p.group_order();
        let fast = median_ms(runs, || {
            let table = DlogTable::for_prime(p);
            let lower = next_in_line(&table, SolveMode::Fast);
            for (&n, report) in &lower {
                black_box(report);
                if n < order / 2 {
                    black_box(exponent_mirror(&table, report));
                }
            }
        });
        let subgroup = median_ms(runs, || {
            for n in 1..=order {
                black_box(subgroup_scan(p, n));
            }
        });
        let oracle = if p.get() <= oracle_bound {
            Some(median_ms(runs, || {
                for n in 1..=order {
                    let report = brute_force_with_bound(p, n, oracle_bound)
                        .expect("prime is within the oracle bound");
                    black_box(report);
                }
            }))
        } else {
            eprintln!("note: oracle skipped at p = {} (bound {oracle_bound})", p.get());
            None
        };
        let faithful = if p.get() <= faithful_bound {
            Some(median_ms(runs, || {
                let table = DlogTable::for_prime(p);
                let lower = next_in_line(&table, SolveMode::Faithful);
                for (&n, report) in &lower {
                    black_box(report);
                    if n < order / 2 {
                        black_box(exponent_mirror(&table, report));
                    }
                }
            }))
        } else {
            eprintln!("note: faithful solver skipped at p = {} (bound {faithful_bound})", p.get());
            None
        };
        writeln!(
            sink,
            "{},{:.3},{:.3},{},{}",
            p.get(),
            fast,
            subgroup,
            cell(oracle),
            cell(faithful)
        )?;
    }
    sink.flush()?;
    if let Some(path) = &out {
        eprintln!("wrote {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn cell(value: Option<f64>) -> String {
    value.map(|ms| format!("{ms:.3}")).unwrap_or_default()
}

/// Median wall-clock milliseconds over `runs` samples of `work`.
fn median_ms(runs: u32, mut work: impl FnMut()) -> f64 {
    let mut samples: Vec<f64> = (0..runs)
        .map(|_| {
            let start = Instant::now();
            work();
            start.elapsed().as_secs_f64() * 1e3
        })
        .collect();
    samples.sort_by(f64::total_cmp);
    samples[samples.len() / 2]
}
