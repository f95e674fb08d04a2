//! Whole-prime analyses: every exponent classified, serializable, cacheable.
//!
//! [`PrimeAnalyzer`] owns the log table and hands out per-exponent reports;
//! [`PrimeAnalysis`] is the assembled, serde-friendly document. For large primes the
//! document gets big (the solution lists grow like p per exponent), so
//! [`write_json_streaming`] emits the identical bytes exponent by exponent without ever
//! materializing the whole thing.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::dlog::DlogTable;
use crate::modfield::{smallest_primitive_root, Generator, Prime};
use crate::powerstructure::canonical_exponent;
use crate::type1::{self, SolveMode};
use crate::{type0, Error};

/// Bumped when the emitted format or the solution conventions change.
pub const FORMAT_VERSION: &str = "1";

/// The faithful solver is cubic-ish; refuse to run it above this prime by default.
pub const DEFAULT_FAITHFUL_BOUND: u64 = 500;

/// How this analysis was produced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    /// Format/algorithm version, part of the cache filename.
    pub version: String,
    /// Whether the shift-enumerating solver produced the type-1 reports.
    pub faithful: bool,
    /// Optional wall-clock stamp; omitted by default so identical runs emit identical
    /// bytes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<String>,
}

/// An existence flag plus the full sorted solution list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionList<T> {
    pub exists: bool,
    pub solutions: Vec<T>,
}

impl<T> SolutionList<T> {
    fn new(solutions: Vec<T>) -> SolutionList<T> {
        SolutionList { exists: !solutions.is_empty(), solutions }
    }
}

/// Everything known about one exponent: its power class and both solution sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExponentReport {
    pub n: u64,
    /// `gcd(n, p-1)`, the canonical exponent of n's power class.
    pub gcd: u64,
    /// Roots of `x^n = -1`.
    pub type0: SolutionList<u64>,
    /// Pairs `(x, z)` with `x^n + 1 = z^n`.
    pub type1: SolutionList<(u64, u64)>,
}

/// The full per-prime document, one entry per exponent `1 <= n <= p-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeAnalysis {
    pub p: u64,
    pub generator: u64,
    pub provenance: Provenance,
    pub exponents: Vec<ExponentReport>,
}

impl PrimeAnalysis {
    /// Analyze `p` in one call. For big primes prefer [`write_json_streaming`].
    pub fn compute(p: u64, options: &AnalysisOptions) -> Result<PrimeAnalysis, Error> {
        Ok(PrimeAnalyzer::new(p, options)?.analysis())
    }

    /// Compact, deterministic JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<PrimeAnalysis, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// Cache name: prime, generator, and format version pin the content.
    pub fn cache_filename(&self) -> String {
        cache_name(self.p, self.generator, &self.provenance.version)
    }
}

/// Knobs for an analysis run.
#[derive(Debug, Clone)]
pub struct AnalysisOptions {
    /// Use this generator instead of the least primitive root (validated).
    pub generator: Option<u64>,
    pub mode: SolveMode,
    /// Recorded in provenance verbatim when given.
    pub timestamp: Option<String>,
    /// Largest prime the faithful mode will accept.
    pub faithful_bound: u64,
}

impl Default for AnalysisOptions {
    fn default() -> AnalysisOptions {
        AnalysisOptions {
            generator: None,
            mode: SolveMode::Fast,
            timestamp: None,
            faithful_bound: DEFAULT_FAITHFUL_BOUND,
        }
    }
}

/// A validated prime + generator + log table, ready to report on any exponent.
pub struct PrimeAnalyzer {
    table: DlogTable,
    provenance: Provenance,
    /// Faithful mode computes all lower-half reports in one enumeration pass.
    faithful_lower: Option<std::collections::BTreeMap<u64, type1::Type1Report>>,
}

impl PrimeAnalyzer {
    pub fn new(p: u64, options: &AnalysisOptions) -> Result<PrimeAnalyzer, Error> {
        let prime = Prime::new(p)?;
        let generator = match options.generator {
            Some(a) => Generator::new(prime.element(a))?,
            None if prime.is_odd() => smallest_primitive_root(prime),
            None => Generator::new(prime.element(1))?, // Z_2*: the empty group's generator
        };
        let table = DlogTable::build(generator);
        let faithful_lower = if options.mode == SolveMode::Faithful && prime.is_odd() {
            if p > options.faithful_bound {
                return Err(Error::FaithfulBoundExceeded { p, bound: options.faithful_bound });
            }
            Some(type1::next_in_line(&table, SolveMode::Faithful))
        } else {
            None
        };
        let provenance = Provenance {
            version: FORMAT_VERSION.to_string(),
            faithful: options.mode == SolveMode::Faithful,
            timestamp: options.timestamp.clone(),
        };
        Ok(PrimeAnalyzer { table, provenance, faithful_lower })
    }

    pub fn prime(&self) -> Prime {
        self.table.prime()
    }

    pub fn generator(&self) -> Generator {
        self.table.generator()
    }

    pub fn table(&self) -> &DlogTable {
        &self.table
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// The report for one exponent `1 <= n <= p-1`.
    pub fn exponent_report(&self, n: u64) -> ExponentReport {
        let prime = self.prime();
        let order = prime.group_order();
        assert!(n >= 1 && n <= order, "exponent out of range");
        if !prime.is_odd() {
            // Z_2: x = 1 solves x + 1 = 0; no type-1 (1 + 1 = 0 is not 1).
            return ExponentReport {
                n: 1,
                gcd: 1,
                type0: SolutionList::new(vec![1]),
                type1: SolutionList::new(Vec::new()),
            };
        }
        let type0 = type0::basic_solutions(&self.table, n);
        let type1 = match &self.faithful_lower {
            None => type1::report_for_exponent(&self.table, n),
            Some(lower) => {
                if n == order {
                    type1::Type1Report::empty(prime, n)
                } else if n <= order / 2 {
                    lower[&n].clone()
                } else {
                    type1::exponent_mirror(&self.table, &lower[&(order - n)])
                }
            }
        };
        ExponentReport {
            n,
            gcd: canonical_exponent(prime, n).canonical(),
            type0: SolutionList::new(type0.solutions().to_vec()),
            type1: SolutionList::new(type1.pairs()),
        }
    }

    /// Cache name for the document this analyzer emits; see
    /// [`PrimeAnalysis::cache_filename`].
    pub fn cache_filename(&self) -> String {
        cache_name(
            self.prime().get(),
            self.generator().element().value(),
            &self.provenance.version,
        )
    }

    /// All exponent reports, assembled in memory.
    pub fn analysis(&self) -> PrimeAnalysis {
        let exponents =
            (1..=self.prime().group_order()).map(|n| self.exponent_report(n)).collect();
        PrimeAnalysis {
            p: self.prime().get(),
            generator: self.generator().element().value(),
            provenance: self.provenance.clone(),
            exponents,
        }
    }
}

fn cache_name(p: u64, generator: u64, version: &str) -> String {
    format!("p{p}-g{generator}-v{version}.json")
}

/// Emit exactly the bytes of [`PrimeAnalysis::to_json`], one exponent at a time.
pub fn write_json_streaming<W: Write>(analyzer: &PrimeAnalyzer, mut out: W) -> io::Result<()> {
    write!(
        out,
        "{{\"p\":{},\"generator\":{},\"provenance\":",
        analyzer.prime().get(),
        analyzer.generator().element().value()
    )?;
    serde_json::to_writer(&mut out, analyzer.provenance()).map_err(io::Error::other)?;
    write!(out, ",\"exponents\":[")?;
    for n in 1..=analyzer.prime().group_order() {
        if n > 1 {
            out.write_all(b",")?;
        }
        serde_json::to_writer(&mut out, &analyzer.exponent_report(n)).map_err(io::Error::other)?;
    }
    write!(out, "]}}")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pinned_small_analyses() {
        let a17 = PrimeAnalysis::compute(17, &AnalysisOptions::default()).unwrap();
        assert_eq!(a17.generator, 3);
        assert_eq!(a17.exponents.len(), 16);
        let type1_ns: Vec<u64> =
            a17.exponents.iter().filter(|e| e.type1.exists).map(|e| e.n).collect();
        assert_eq!(type1_ns, vec![1, 2, 3, 5, 6, 7, 9, 10, 11, 13, 14, 15]);

        let a23 = PrimeAnalysis::compute(23, &AnalysisOptions::default()).unwrap();
        assert_eq!(a23.generator, 5);
        for e in &a23.exponents {
            assert_eq!(e.type0.exists, e.n % 2 == 1, "odd exponents only, n={}", e.n);
        }

        let a3 = PrimeAnalysis::compute(3, &AnalysisOptions::default()).unwrap();
        assert_eq!(a3.exponents[0].type0.solutions, vec![2]);
        assert_eq!(a3.exponents[0].type1.solutions, vec![(1, 2)]);
        assert!(!a3.exponents[1].type0.exists && !a3.exponents[1].type1.exists);
    }

    #[test]
    fn z2_has_its_one_degenerate_row() {
        let a2 = PrimeAnalysis::compute(2, &AnalysisOptions::default()).unwrap();
        assert_eq!(a2.generator, 1);
        assert_eq!(a2.exponents.len(), 1);
        assert_eq!(a2.exponents[0].type0.solutions, vec![1]);
        assert!(!a2.exponents[0].type1.exists);
    }

    #[test]
    fn invalid_inputs_error_out() {
        assert_eq!(
            PrimeAnalysis::compute(15, &AnalysisOptions::default()),
            Err(Error::NotPrime(15))
        );
        let bad_gen = AnalysisOptions { generator: Some(2), ..Default::default() };
        assert_eq!(
            PrimeAnalysis::compute(17, &bad_gen),
            Err(Error::NotGenerator { value: 2, modulus: 17 })
        );
        let faithful = AnalysisOptions { mode: SolveMode::Faithful, ..Default::default() };
        assert_eq!(
            PrimeAnalysis::compute(521, &faithful),
            Err(Error::FaithfulBoundExceeded { p: 521, bound: DEFAULT_FAITHFUL_BOUND })
        );
    }

    #[test]
    fn generator_override_changes_table_not_solutions() {
        let default = PrimeAnalysis::compute(17, &AnalysisOptions::default()).unwrap();
        let override_gen =
            AnalysisOptions { generator: Some(5), ..Default::default() };
        let alt = PrimeAnalysis::compute(17, &override_gen).unwrap();
        assert_eq!(alt.generator, 5);
        for (a, b) in default.exponents.iter().zip(&alt.exponents) {
            assert_eq!(a, b, "solution sets are generator-independent");
        }
    }

    #[test]
    fn json_round_trips_and_streams_identically() {
        for p in [3, 17, 23, 101] {
            let options = AnalysisOptions::default();
            let analyzer = PrimeAnalyzer::new(p, &options).unwrap();
            let doc = analyzer.analysis();
            let json = doc.to_json();
            assert_eq!(PrimeAnalysis::from_json(&json).unwrap(), doc, "round trip p={p}");
            let mut streamed = Vec::new();
            write_json_streaming(&analyzer, &mut streamed).unwrap();
            assert_eq!(String::from_utf8(streamed).unwrap(), json, "stream = memory, p={p}");
        }
    }

    #[test]
    fn timestamp_is_opt_in() {
        let without = PrimeAnalysis::compute(17, &AnalysisOptions::default()).unwrap();
        assert!(!without.to_json().contains("timestamp"));
        let with = PrimeAnalysis::compute(
            17,
            &AnalysisOptions { timestamp: Some("2026-01-01T00:00:00Z".into()), ..Default::default() },
        )
        .unwrap();
        assert!(with.to_json().contains("\"timestamp\":\"2026-01-01T00:00:00Z\""));
        assert_eq!(without.cache_filename(), "p17-g3-v1.json");
    }

    #[test]
    fn faithful_mode_matches_fast_mode() {
        for p in [3, 5, 17, 23] {
            let fast = PrimeAnalysis::compute(p, &AnalysisOptions::default()).unwrap();
            let faithful = PrimeAnalysis::compute(
                p,
                &AnalysisOptions { mode: SolveMode::Faithful, ..Default::default() },
            )
            .unwrap();
            assert!(faithful.provenance.faithful && !fast.provenance.faithful);
            assert_eq!(fast.exponents, faithful.exponents, "p={p}");
        }
    }
}
