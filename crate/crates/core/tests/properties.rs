//! Randomized algebraic laws over pools of small primes. The unit tests pin exact
//! values; these hammer the relationships between operations.

use fermatp::analysis::{write_json_streaming, AnalysisOptions, PrimeAnalyzer};
use fermatp::oracle::classify_triple;
use fermatp::powerstructure::{canonical_exponent, nth_power_subgroup, power_sets_equal};
use fermatp::type0;
use fermatp::type1::{self, Type1Basic};
use fermatp::{DlogTable, Prime, PrimeAnalysis};
use proptest::prelude::*;

const PRIMES: &[u64] = &[
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
    101, 103, 107, 109, 113, 127, 131, 137, 139, 149,
];

fn arb_prime() -> impl Strategy<Value = Prime> {
    prop::sample::select(PRIMES.to_vec()).prop_map(|p| Prime::new(p).unwrap())
}

/// A prime together with an exponent reaching past p-1 (the algebra must not care).
fn prime_and_exponent() -> impl Strategy<Value = (Prime, u64)> {
    arb_prime().prop_flat_map(|p| (Just(p), 1..=2 * p.group_order()))
}

fn prime_and_unit() -> impl Strategy<Value = (Prime, u64)> {
    arb_prime().prop_flat_map(|p| (Just(p), 1..p.get()))
}

/// `(p, n, x, z)` with the exponent in the report domain and both values units.
fn prime_exponent_units() -> impl Strategy<Value = (Prime, u64, u64, u64)> {
    arb_prime().prop_flat_map(|p| (Just(p), 1..=p.group_order(), 1..p.get(), 1..p.get()))
}

/// `(p, n, x, y, z, u)` — an arbitrary triple plus a nonzero scaler, all reduced.
fn prime_and_triple() -> impl Strategy<Value = (Prime, u64, u64, u64, u64, u64)> {
    arb_prime().prop_flat_map(|p| {
        (Just(p), 1..p.get(), 0..p.get(), 0..p.get(), 0..p.get(), 1..p.get())
    })
}

proptest! {
    #[test]
    fn pow_splits_over_added_exponents((p, v) in prime_and_unit(), a in 0u64..10_000, b in 0u64..10_000) {
        let x = p.element(v);
        prop_assert_eq!(x.pow(a + b), x.pow(a) * x.pow(b));
    }

    #[test]
    fn pow_nests_modulo_group_order((p, v) in prime_and_unit(), a in 0u64..10_000, b in 0u64..10_000) {
        let x = p.element(v);
        prop_assert_eq!(x.pow(a).pow(b), x.pow(a * b % p.group_order()));
    }

    #[test]
    fn inverses_cancel_and_double_back((p, v) in prime_and_unit()) {
        let x = p.element(v);
        let inv = x.inv().unwrap();
        prop_assert_eq!((x * inv).value(), 1);
        prop_assert_eq!(inv.inv().unwrap(), x);
    }

    #[test]
    fn orders_divide_the_group_order((p, v) in prime_and_unit()) {
        let x = p.element(v);
        let k = x.order().unwrap();
        prop_assert_eq!(p.group_order() % k, 0);
        prop_assert_eq!(x.pow(p.group_order()).value(), 1);
    }

    #[test]
    fn dlog_round_trips_and_respects_products((p, u) in prime_and_unit(), v in 1u64..1000) {
        let t = DlogTable::for_prime(p);
        let a = p.element(u);
        let b = p.element(v % (p.get() - 1) + 1);
        prop_assert_eq!(t.exp(t.log(a).unwrap()), a);
        let m = p.group_order();
        prop_assert_eq!(
            t.log(a * b).unwrap() % m,
            (t.log(a).unwrap() + t.log(b).unwrap()) % m
        );
    }

    #[test]
    fn power_sets_cycle_with_the_group_order((p, n) in prime_and_exponent()) {
        prop_assert!(power_sets_equal(p, n, n + p.group_order()));
        let t = DlogTable::for_prime(p);
        let sub = nth_power_subgroup(&t, canonical_exponent(p, n));
        for v in p.units().step_by(3) {
            prop_assert!(sub.contains(v.pow(n).value()));
        }
    }

    #[test]
    fn type0_membership_is_exactly_the_equation((p, n, v, _z) in prime_exponent_units()) {
        let t = DlogTable::for_prime(p);
        let report = type0::basic_solutions(&t, n);
        let is_root = p.element(v).pow(n).value() == p.get() - 1;
        prop_assert_eq!(report.contains(v), is_root);
        prop_assert_eq!(report.exists(), type0::exists_by_group_order(p, n));
    }

    #[test]
    fn type1_membership_is_exactly_the_equation((p, n, x, z) in prime_exponent_units()) {
        let t = DlogTable::for_prime(p);
        let report = type1::report_for_exponent(&t, n);
        let solves = (p.element(x).pow(n) + p.element(1)) == p.element(z).pow(n);
        prop_assert_eq!(report.contains(x, z), solves);
    }

    #[test]
    fn classification_survives_scaling((p, n, x, y, z, u) in prime_and_triple()) {
        if let Ok(triple) = classify_triple(p, n, x, y, z) {
            let s = |v: u64| (p.element(v) * p.element(u)).value();
            let scaled = classify_triple(p, n, s(x), s(y), s(z)).unwrap();
            prop_assert_eq!(scaled.class(), triple.class());
        }
    }

    #[test]
    fn lifted_solutions_verify_as_type1((p, n, u, _z) in prime_exponent_units(), pick in any::<prop::sample::Index>()) {
        let t = DlogTable::for_prime(p);
        let report = type1::report_for_exponent(&t, n);
        prop_assume!(report.exists());
        let sol = report.solutions()[pick.index(report.len())];
        let lifted = type1::lift_basic(p, n, sol, p.element(u)).unwrap();
        prop_assert_eq!(lifted.y(), u);
        prop_assert_eq!(lifted.class(), fermatp::SolutionClass::Type1);
    }

    #[test]
    fn symmetries_are_involutions((p, n) in prime_and_exponent(), pick in any::<prop::sample::Index>()) {
        prop_assume!(n < p.group_order());
        let t = DlogTable::for_prime(p);
        let report = type1::report_for_exponent(&t, n);
        let mirrored_twice = type1::exponent_mirror(&t, &type1::exponent_mirror(&t, &report));
        prop_assert_eq!(&mirrored_twice, &report);
        if report.exists() {
            let sol = report.solutions()[pick.index(report.len())];
            let back = type1::parity_symmetry(p, n, type1::parity_symmetry(p, n, sol));
            prop_assert_eq!(back, sol);
        }
    }

    #[test]
    fn unit_sum_form_lands_on_one((p, n, _x, _z) in prime_exponent_units(), pick in any::<prop::sample::Index>()) {
        let t = DlogTable::for_prime(p);
        let report = type1::report_for_exponent(&t, n);
        prop_assume!(report.exists());
        let sol = report.solutions()[pick.index(report.len())];
        let (u, v) = type1::unit_sum_form(p, n, sol);
        prop_assert_eq!((p.element(u).pow(n) + p.element(v).pow(n)).value(), 1);
    }
}

proptest! {
    // Whole-document properties are slower per case; fewer cases suffice.
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn analyses_round_trip_and_stream_identically(p in prop::sample::select(&PRIMES[..10])) {
        let options = AnalysisOptions::default();
        let analyzer = PrimeAnalyzer::new(p, &options).unwrap();
        let doc = analyzer.analysis();
        let json = doc.to_json();
        prop_assert_eq!(&PrimeAnalysis::from_json(&json).unwrap(), &doc);
        let mut streamed = Vec::new();
        write_json_streaming(&analyzer, &mut streamed).unwrap();
        prop_assert_eq!(String::from_utf8(streamed).unwrap(), json);
    }

    #[test]
    fn every_report_row_reconstructs_its_block(p in prop::sample::select(&PRIMES[5..14])) {
        // Basic solutions generate the full type-1 class under unit scaling with no
        // duplicates: |full| = (p-1) * |basic|.
        let prime = Prime::new(p).unwrap();
        let t = DlogTable::for_prime(prime);
        for n in [1, 2, prime.group_order() / 2, prime.group_order() - 1] {
            let report = type1::report_for_exponent(&t, n);
            let mut full = std::collections::BTreeSet::new();
            for &sol in report.solutions() {
                for u in prime.units() {
                    let lifted = type1::lift_basic(prime, n, sol, u).unwrap();
                    full.insert((lifted.x(), lifted.y(), lifted.z()));
                }
            }
            prop_assert_eq!(full.len(), (prime.get() - 1) as usize * report.len());
        }
    }
}

/// Reference lists used by `prop::sample::select` must stay genuinely prime.
#[test]
fn the_prime_pool_is_prime() {
    for &p in PRIMES {
        assert!(Prime::new(p).is_ok(), "{p}");
    }
    let sol = Type1Basic::new(Prime::new(17).unwrap(), 2, 1, 6);
    assert_eq!(sol.pair(), (1, 6));
}
