//! `fermatp analyze` — the full per-prime report, streamed in any format.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use fermatp::analysis::write_json_streaming;
use fermatp::{AnalysisOptions, PrimeAnalyzer, SolveMode};

use crate::Format;

pub fn run(
    p: u64,
    generator: Option<u64>,
    faithful: bool,
    faithful_bound: u64,
    format: Format,
    out: Option<PathBuf>,
    timestamp: Option<Option<String>>,
) -> anyhow::Result<ExitCode> {
    let options = AnalysisOptions {
        generator,
        mode: if faithful { SolveMode::Faithful } else { SolveMode::Fast },
        timestamp: timestamp.map(|given| given.unwrap_or_else(unix_seconds)),
        faithful_bound,
    };
    let analyzer = PrimeAnalyzer::new(p, &options)?;

    // `--out <dir>` drops the cache-named document into the directory.
    let target = out.map(|path| {
        if path.is_dir() {
            path.join(analyzer.cache_filename())
        } else {
            path
        }
    });
    let mut sink = crate::open_sink(target.as_ref())?;
    match format {
        Format::Json => {
            write_json_streaming(&analyzer, &mut sink)?;
            writeln!(sink)?;
        }
        Format::Csv => {
            writeln!(sink, "p,n,class,x,y,z")?;
            for n in 1..=analyzer.prime().group_order() {
                let report = analyzer.exponent_report(n);
                for &x in &report.type0.solutions {
                    writeln!(sink, "{p},{n},type0,{x},1,0")?;
                }
                for &(x, z) in &report.type1.solutions {
                    writeln!(sink, "{p},{n},type1,{x},1,{z}")?;
                }
            }
        }
        Format::Text => {
            writeln!(
                sink,
                "p = {}, generator = {}",
                analyzer.prime().get(),
                analyzer.generator().element().value()
            )?;
            writeln!(sink, "{:>5} {:>5} {:>7} {:>7}", "n", "gcd", "type-0", "type-1")?;
            for n in 1..=analyzer.prime().group_order() {
                let report = analyzer.exponent_report(n);
                writeln!(
                    sink,
                    "{:>5} {:>5} {:>7} {:>7}",
                    report.n,
                    report.gcd,
                    report.type0.solutions.len(),
                    report.type1.solutions.len()
                )?;
            }
        }
    }
    sink.flush()?;
    if let Some(path) = &target {
        eprintln!("wrote {}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}

fn unix_seconds() -> String {
    let since_epoch = SystemTime::now().duration_since(UNIX_EPOCH).expect("clock before 1970");
    since_epoch.as_secs().to_string()
}
