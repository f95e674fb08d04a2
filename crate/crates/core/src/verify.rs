//! Invariant sweeps over ranges of primes, packaged for the CLI, the acceptance suite,
//! and the browser demo.
//!
//! Each check walks its prime list, counts the cases it proves, and collects concrete
//! counterexamples instead of panicking — `verify` wants to report, not crash. An empty
//! failure list is the pass condition.

use serde::Serialize;

use crate::dlog::DlogTable;
use crate::modfield::{odd_primes_up_to, Generator, Prime};
use crate::powerstructure::{canonical_exponent, nth_power_subgroup, power_sets_equal};
use crate::type1::{self, SolveMode};
use crate::{oracle, type0};

/// One concrete counterexample.
#[derive(Debug, Clone, Serialize)]
pub struct CheckFailure {
    pub p: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    pub detail: String,
}

/// The outcome of one named check over a prime list.
#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub name: &'static str,
    /// Individual facts verified (one per (p, n) or per pair, depending on the check).
    pub cases: u64,
    pub failures: Vec<CheckFailure>,
}

impl SweepReport {
    fn new(name: &'static str) -> SweepReport {
        SweepReport { name, cases: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, p: Prime, n: Option<u64>, detail: String) {
        self.failures.push(CheckFailure { p: p.get(), n, detail });
    }
}

/// The three type-0 existence predicates agree on every exponent.
pub fn check_existence_predicates(primes: &[Prime]) -> SweepReport {
    let mut report = SweepReport::new("type0-existence-agreement");
    for &p in primes {
        let table = DlogTable::for_prime(p);
        for n in 1..=p.group_order() {
            report.cases += 1;
            let by_congruence = type0::exists_by_congruence(p, n);
            let by_order = type0::exists_by_group_order(p, n);
            let by_subgroup = type0::exists_by_subgroup(&table, n);
            if by_congruence != by_order || by_order != by_subgroup {
                report.fail(
                    p,
                    Some(n),
                    format!("congruence={by_congruence} order={by_order} subgroup={by_subgroup}"),
                );
            }
        }
    }
    report
}

/// The algorithmic path (type-0 solver, fast next-in-line + mirror) equals brute force.
pub fn check_solver_oracle_equivalence(primes: &[Prime], oracle_bound: u64) -> SweepReport {
    let mut report = SweepReport::new("solver-oracle-equivalence");
    for &p in primes {
        if p.get() > oracle_bound {
            let refusal = crate::Error::OracleBoundExceeded { p: p.get(), bound: oracle_bound };
            report.fail(p, None, refusal.to_string());
            continue;
        }
        let table = DlogTable::for_prime(p);
        for n in 1..=p.group_order() {
            report.cases += 1;
            let expected = oracle::brute_force_with_bound(p, n, oracle_bound)
                .expect("bound already checked");
            let got0 = type0::basic_solutions(&table, n);
            if got0.solutions() != expected.type0_basic() {
                report.fail(
                    p,
                    Some(n),
                    format!(
                        "type0 solver {:?} != oracle {:?}",
                        got0.solutions(),
                        expected.type0_basic()
                    ),
                );
            }
            let got1 = type1::report_for_exponent(&table, n);
            if got1.pairs() != expected.type1_basic() {
                report.fail(
                    p,
                    Some(n),
                    format!("type1 solver and oracle differ: {} vs {} solutions",
                        got1.len(), expected.type1_basic().len()),
                );
            }
            let scanned = type1::subgroup_scan(p, n);
            if scanned.pairs() != expected.type1_basic() {
                report.fail(p, Some(n), "subgroup scan disagrees with oracle".to_string());
            }
        }
    }
    report
}

/// The literal shift enumeration produces exactly the fast criterion's reports.
pub fn check_faithful_fast_equivalence(primes: &[Prime]) -> SweepReport {
    let mut report = SweepReport::new("faithful-fast-equivalence");
    for &p in primes {
        let table = DlogTable::for_prime(p);
        let faithful = type1::next_in_line(&table, SolveMode::Faithful);
        let fast = type1::next_in_line(&table, SolveMode::Fast);
        for (n, fast_report) in &fast {
            report.cases += 1;
            match faithful.get(n) {
                Some(f) if f == fast_report => {}
                Some(f) => report.fail(
                    p,
                    Some(*n),
                    format!("faithful {} vs fast {} solutions", f.len(), fast_report.len()),
                ),
                None => report.fail(p, Some(*n), "missing from faithful map".to_string()),
            }
        }
    }
    report
}

/// Log tables round-trip, respect products, and honor the -1 and identity conventions.
pub fn check_dlog_laws(primes: &[Prime]) -> SweepReport {
    let mut report = SweepReport::new("dlog-laws");
    for &p in primes {
        let table = DlogTable::for_prime(p);
        let m = p.group_order();
        for v in p.units() {
            report.cases += 1;
            let e = table.log(v).expect("units have logs");
            if e < 1 || e > m || table.exp(e) != v {
                report.fail(p, None, format!("round trip broke at v={v}"));
            }
        }
        for u in p.units() {
            let log_u = table.log(u).unwrap();
            for v in p.units() {
                report.cases += 1;
                let sum = (log_u + table.log(v).unwrap()) % m;
                if table.log(u * v).unwrap() % m != sum {
                    report.fail(p, None, format!("log({u}*{v}) != log {u} + log {v}"));
                }
            }
        }
        report.cases += 2;
        if table.log(p.element(1)).unwrap() != m {
            report.fail(p, None, "log(1) must be p-1".to_string());
        }
        if table.log(p.element(p.get() - 1)).unwrap() != m / 2 {
            report.fail(p, None, "log(-1) must be (p-1)/2".to_string());
        }
    }
    report
}

/// Power sets: subgroup walk equals brute force, and set equality is gcd equality,
/// across every exponent pair up to 2(p-1).
pub fn check_power_structure(primes: &[Prime]) -> SweepReport {
    let mut report = SweepReport::new("power-structure");
    for &p in primes {
        let table = DlogTable::for_prime(p);
        let top = 2 * p.group_order();
        let mut brute: Vec<Vec<u64>> = Vec::with_capacity(top as usize);
        for n in 1..=top {
            let mut set: Vec<u64> = p.units().map(|x| x.pow(n).value()).collect();
            set.sort_unstable();
            set.dedup();
            report.cases += 1;
            let walked = nth_power_subgroup(&table, canonical_exponent(p, n));
            if walked.elements() != set {
                report.fail(p, Some(n), "subgroup walk disagrees with brute powers".to_string());
            }
            brute.push(set);
        }
        for n1 in 1..=top {
            for n2 in 1..=top {
                report.cases += 1;
                let claimed = power_sets_equal(p, n1, n2);
                let actual = brute[(n1 - 1) as usize] == brute[(n2 - 1) as usize];
                if claimed != actual {
                    report.fail(
                        p,
                        Some(n1),
                        format!("sets_equal({n1},{n2}) claims {claimed}, brute says {actual}"),
                    );
                }
            }
        }
    }
    report
}

/// For every generator `a`: `-a` generates iff `p = 1 (mod 4)`, else has half order.
pub fn check_negated_generator_dichotomy(primes: &[Prime]) -> SweepReport {
    let mut report = SweepReport::new("negated-generator-dichotomy");
    for &p in primes {
        let table = DlogTable::for_prime(p);
        let m = p.group_order();
        let expected = if p.get() % 4 == 1 { m } else { m / 2 };
        for j in (1..=m).filter(|j| crate::arith::gcd(*j, m) == 1) {
            report.cases += 1;
            let a = Generator::new(table.exp(j)).expect("coprime powers generate");
            let got = a.negated_order();
            if got != expected {
                report.fail(
                    p,
                    None,
                    format!("order(-{}) = {got}, expected {expected}", a.element()),
                );
            }
        }
    }
    report
}

/// Parity symmetry closes each report and squares to the identity; the exponent mirror
/// squares to the identity and fixes the midpoint.
pub fn check_symmetry_involutions(primes: &[Prime]) -> SweepReport {
    let mut report = SweepReport::new("symmetry-involutions");
    for &p in primes {
        let table = DlogTable::for_prime(p);
        let m = p.group_order();
        for n in 1..m {
            let rep = type1::report_for_exponent(&table, n);
            for &sol in rep.solutions() {
                report.cases += 1;
                let image = type1::parity_symmetry(p, n, sol);
                if !rep.contains(image.x(), image.z())
                    || type1::parity_symmetry(p, n, image) != sol
                {
                    report.fail(p, Some(n), format!("parity broke at {:?}", sol.pair()));
                }
            }
            report.cases += 1;
            let mirrored = type1::exponent_mirror(&table, &rep);
            if mirrored.exponent() != m - n
                || type1::exponent_mirror(&table, &mirrored) != rep
                || mirrored.len() != rep.len()
            {
                report.fail(p, Some(n), "mirror is not an involutive bijection".to_string());
            }
            if n == m / 2 && mirrored != rep {
                report.fail(p, Some(n), "midpoint must be a mirror fixed point".to_string());
            }
        }
    }
    report
}

/// `n = p-1` admits no solutions of either type, and the predicates say so.
pub fn check_terminal_exponent(primes: &[Prime]) -> SweepReport {
    let mut report = SweepReport::new("terminal-exponent-empty");
    for &p in primes {
        report.cases += 1;
        let table = DlogTable::for_prime(p);
        let n = p.group_order();
        let t0 = type0::basic_solutions(&table, n);
        let t1 = type1::report_for_exponent(&table, n);
        if t0.exists()
            || t1.exists()
            || type0::exists_by_congruence(p, n)
            || type0::exists_by_group_order(p, n)
            || type0::exists_by_subgroup(&table, n)
        {
            report.fail(p, Some(n), "something claims solutions at n = p-1".to_string());
        }
    }
    report
}

/// The faithful cross-check stays cheap only for quite small primes.
pub const FAITHFUL_SWEEP_CAP: u64 = 61;

/// The whole battery, as the `verify` command runs it.
///
/// `lemmas_only` skips the brute-force-backed and faithful-mode checks, leaving the
/// structural sweeps, which stay fast out to `pmax = 500` and beyond.
pub fn full_sweep(pmax: u64, oracle_bound: u64, lemmas_only: bool) -> Vec<SweepReport> {
    let primes = odd_primes_up_to(pmax);
    let mut reports = vec![
        check_existence_predicates(&primes),
        check_dlog_laws(&primes),
        check_power_structure(&primes),
        check_negated_generator_dichotomy(&primes),
        check_symmetry_involutions(&primes),
        check_terminal_exponent(&primes),
    ];
    if !lemmas_only {
        reports.push(check_solver_oracle_equivalence(&primes, oracle_bound));
        reports.push(check_faithful_fast_equivalence(&odd_primes_up_to(
            pmax.min(FAITHFUL_SWEEP_CAP),
        )));
    }
    reports
}
