//! `fermatp tables` — the basic solutions as equation rows, exponents paired
//! (n, p-1-n) the way the published tables lay them out.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use fermatp::type1::{unit_sum_form, Type1Basic};
use fermatp::{AnalysisOptions, Prime, PrimeAnalyzer};
use serde::Serialize;

use crate::Format;

#[derive(Serialize)]
struct Row {
    n: u64,
    class: &'static str,
    x: u64,
    y: u64,
    z: u64,
}

pub fn run(
    p: u64,
    generator: Option<u64>,
    unit_sum: bool,
    format: Format,
    out: Option<PathBuf>,
) -> anyhow::Result<ExitCode> {
    let options = AnalysisOptions { generator, ..AnalysisOptions::default() };
    let analyzer = PrimeAnalyzer::new(p, &options)?;
    let prime = analyzer.prime();
    let mut sink = crate::open_sink(out.as_ref())?;

    match format {
        Format::Text => {
            writeln!(
                sink,
                "p = {}, generator = {}",
                prime.get(),
                analyzer.generator().element().value()
            )?;
            for n in paired_exponents(prime) {
                let report = analyzer.exponent_report(n);
                writeln!(sink)?;
                writeln!(sink, "n = {n}  (gcd {}{})", report.gcd, pairing_note(prime, n))?;
                if report.type0.solutions.is_empty() {
                    writeln!(sink, "  type-0: none")?;
                } else {
                    writeln!(sink, "  type-0:")?;
                    for &x in &report.type0.solutions {
                        verify_type0_row(prime, n, x);
                        writeln!(sink, "    {x}^{n} + 1 = 0")?;
                    }
                }
                if report.type1.solutions.is_empty() {
                    writeln!(sink, "  type-1: none")?;
                } else {
                    writeln!(sink, "  type-1:")?;
                    for &(x, z) in &report.type1.solutions {
                        verify_type1_row(prime, n, x, z);
                        if unit_sum {
                            let basic = Type1Basic::new(prime, n, x, z);
                            let (u, v) = unit_sum_form(prime, n, basic);
                            writeln!(sink, "    {u}^{n} + {v}^{n} = 1")?;
                        } else {
                            writeln!(sink, "    {x}^{n} + 1 = {z}^{n}")?;
                        }
                    }
                }
            }
        }
        Format::Csv => {
            writeln!(sink, "p,n,class,x,y,z")?;
            for row in all_rows(&analyzer) {
                writeln!(sink, "{p},{},{},{},{},{}", row.n, row.class, row.x, row.y, row.z)?;
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Document {
                p: u64,
                generator: u64,
                rows: Vec<Row>,
            }
            let doc = Document {
                p: prime.get(),
                generator: analyzer.generator().element().value(),
                rows: all_rows(&analyzer),
            };
            serde_json::to_writer(&mut sink, &doc)?;
            writeln!(sink)?;
        }
    }
    sink.flush()?;
    if let Some(path) = &out {
        eprintln!("wrote {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

/// Block order of the published layout: each n in the lower half followed by
/// its mirror p-1-n, the self-paired midpoint once, then the terminal p-1.
fn paired_exponents(p: Prime) -> Vec<u64> {
    let order = p.group_order();
    let mut out = Vec::with_capacity(order as usize);
    for n in 1..=order / 2 {
        out.push(n);
        if order - n != n {
            out.push(order - n);
        }
    }
    out.push(order);
    out
}

fn pairing_note(p: Prime, n: u64) -> String {
    let order = p.group_order();
    if n == order {
        ", terminal".to_string()
    } else if n == order - n {
        ", self-paired".to_string()
    } else {
        format!(", paired with n = {}", order - n)
    }
}

fn all_rows(analyzer: &PrimeAnalyzer) -> Vec<Row> {
    let prime = analyzer.prime();
    let mut rows = Vec::new();
    for n in paired_exponents(prime) {
        let report = analyzer.exponent_report(n);
        for &x in &report.type0.solutions {
            verify_type0_row(prime, n, x);
            rows.push(Row { n, class: "type0", x, y: 1, z: 0 });
        }
        for &(x, z) in &report.type1.solutions {
            verify_type1_row(prime, n, x, z);
            rows.push(Row { n, class: "type1", x, y: 1, z });
        }
    }
    rows
}

// Every row re-verifies arithmetically before it is printed.

fn verify_type0_row(p: Prime, n: u64, x: u64) {
    let lhs = p.element(x).pow(n) + p.element(1);
    assert!(lhs == p.element(0), "table row {x}^{n} + 1 = 0 fails in Z_{}", p.get());
}

fn verify_type1_row(p: Prime, n: u64, x: u64, z: u64) {
    let lhs = p.element(x).pow(n) + p.element(1);
    let rhs = p.element(z).pow(n);
    assert!(lhs == rhs, "table row {x}^{n} + 1 = {z}^{n} fails in Z_{}", p.get());
}
