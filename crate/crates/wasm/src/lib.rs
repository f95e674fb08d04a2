//! Browser bindings: thin JSON-over-string wrappers around the solver, sized
//! for interactive use. Every function returns a JSON document; failures come
//! back as `{"error": "..."}` rather than exceptions so the page can render
//! them inline.

use fermatp::modfield::Prime;
use fermatp::verify::{
    check_dlog_laws, check_existence_predicates, check_faithful_fast_equivalence,
    check_negated_generator_dichotomy, check_power_structure, check_solver_oracle_equivalence,
    check_symmetry_involutions, check_terminal_exponent, SweepReport, FAITHFUL_SWEEP_CAP,
};
use fermatp::{AnalysisOptions, PrimeAnalyzer};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest prime the grid and detail views accept; keeps a cold click under a
/// couple of seconds of single-threaded work.
const ANALYZE_CAP: u32 = 5000;
/// Largest prime the in-browser verification accepts; the brute-force oracle
/// is O(p^3) per prime.
const VERIFY_CAP: u32 = 500;

#[derive(Serialize)]
struct GridRow {
    n: u64,
    gcd: u64,
    type0: usize,
    type1: usize,
}

#[derive(Serialize)]
struct Grid {
    p: u64,
    generator: u64,
    rows: Vec<GridRow>,
}

#[derive(Serialize)]
struct Detail {
    p: u64,
    generator: u64,
    n: u64,
    gcd: u64,
    paired_with: u64,
    type0: Vec<u64>,
    type1: Vec<(u64, u64)>,
}

#[derive(Serialize)]
struct CheckLine {
    name: &'static str,
    cases: u64,
    passed: bool,
}

#[derive(Serialize)]
struct Verification {
    p: u64,
    passed: bool,
    checks: Vec<CheckLine>,
}

fn error_json(message: String) -> String {
    serde_json::json!({ "error": message }).to_string()
}

fn render<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report serializes")
}

fn analyzer_for(p: u32, cap: u32) -> Result<PrimeAnalyzer, String> {
    if p > cap {
        return Err(format!("this demo handles p up to {cap}; {p} is too large"));
    }
    PrimeAnalyzer::new(u64::from(p), &AnalysisOptions::default()).map_err(|e| e.to_string())
}

/// Solution counts for every exponent `1 <= n <= p-1` of an odd prime.
#[wasm_bindgen]
pub fn analyze_grid(p: u32) -> String {
    let analyzer = match analyzer_for(p, ANALYZE_CAP) {
        Ok(analyzer) => analyzer,
        Err(message) => return error_json(message),
    };
    let order = analyzer.prime().group_order();
    let rows = (1..=order)
        .map(|n| {
            let report = analyzer.exponent_report(n);
            GridRow {
                n,
                gcd: report.gcd,
                type0: report.type0.solutions.len(),
                type1: report.type1.solutions.len(),
            }
        })
        .collect();
    render(&Grid { p: analyzer.prime().get(), generator: analyzer.generator().element().value(), rows })
}

/// Full basic-solution lists for one exponent.
#[wasm_bindgen]
pub fn exponent_detail(p: u32, n: u32) -> String {
    let analyzer = match analyzer_for(p, ANALYZE_CAP) {
        Ok(analyzer) => analyzer,
        Err(message) => return error_json(message),
    };
    let order = analyzer.prime().group_order();
    let n = u64::from(n);
    if n < 1 || n > order {
        return error_json(format!("n must lie in 1..={order}"));
    }
    let report = analyzer.exponent_report(n);
    render(&Detail {
        p: analyzer.prime().get(),
        generator: analyzer.generator().element().value(),
        n,
        gcd: report.gcd,
        paired_with: order - n,
        type0: report.type0.solutions,
        type1: report.type1.solutions,
    })
}

/// Run the structural checks and the brute-force oracle comparison for one
/// prime; every lemma the library relies on is re-proved for that p.
#[wasm_bindgen]
pub fn verify_prime(p: u32) -> String {
    if p > VERIFY_CAP {
        return error_json(format!("in-browser verification handles p up to {VERIFY_CAP}"));
    }
    if p == 2 {
        return error_json("verification sweeps need an odd prime".to_string());
    }
    let prime = match Prime::new(u64::from(p)) {
        Ok(prime) => prime,
        Err(e) => return error_json(e.to_string()),
    };
    let primes = [prime];
    let mut reports: Vec<SweepReport> = vec![
        check_existence_predicates(&primes),
        check_solver_oracle_equivalence(&primes, u64::from(VERIFY_CAP)),
        check_dlog_laws(&primes),
        check_power_structure(&primes),
        check_negated_generator_dichotomy(&primes),
        check_symmetry_involutions(&primes),
        check_terminal_exponent(&primes),
    ];
    if u64::from(p) <= FAITHFUL_SWEEP_CAP {
        reports.push(check_faithful_fast_equivalence(&primes));
    }
    let checks: Vec<CheckLine> = reports
        .iter()
        .map(|report| CheckLine {
            name: report.name,
            cases: report.cases,
            passed: report.passed(),
        })
        .collect();
    let passed = checks.iter().all(|line| line.passed);
    render(&Verification { p: prime.get(), passed, checks })
}
