//! Type-0 solutions: roots of `x^n = -1` in `Z_p`.
//!
//! A type-0 solution of `x^n + y^n = z^n` has `z = 0` and `x, y` nonzero; normalizing
//! `y = 1` reduces it to `x^n = -1`. Three equivalent ways to decide existence are
//! implemented side by side — a congruence case split on `p`, a parity condition on the
//! power subgroup's order, and a literal coset-membership walk — and the solver then
//! enumerates every root through one linear congruence on discrete logs.

use crate::arith;
use crate::dlog::DlogTable;
use crate::modfield::Prime;
use crate::powerstructure::{canonical_exponent, nth_power_subgroup};

/// All roots of `x^n = -1` for one `(p, n)`, sorted ascending. Empty means none exist.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Type0Report {
    prime: Prime,
    exponent: u64,
    solutions: Vec<u64>,
}

impl Type0Report {
    /// Builds a report, re-verifying `x^n = -1` for every claimed root.
    pub fn new(prime: Prime, exponent: u64, mut solutions: Vec<u64>) -> Type0Report {
        solutions.sort_unstable();
        solutions.dedup();
        for &x in &solutions {
            assert_eq!(
                prime.element(x).pow(exponent).value(),
                prime.get() - 1,
                "{x}^{exponent} != -1 (mod {prime})"
            );
        }
        Type0Report { prime, exponent, solutions }
    }

    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn exists(&self) -> bool {
        !self.solutions.is_empty()
    }

    /// The roots, ascending.
    pub fn solutions(&self) -> &[u64] {
        &self.solutions
    }

    pub fn contains(&self, x: u64) -> bool {
        self.solutions.binary_search(&x).is_ok()
    }
}

/// Existence by congruence case split: write `n = 2^k * t` with `t` odd; roots of
/// `x^n = -1` exist iff `k = 0` or `p = 1 (mod 2^(k+1))`.
///
/// For odd `n`, `(-1)^n = -1` is its own witness. For even `n` the obstruction is
/// 2-adic: `-1` must be an `n`-th power, which pushes `2^(k+1)` into `p - 1`.
pub fn exists_by_congruence(p: Prime, n: u64) -> bool {
    assert!(p.is_odd() && n >= 1);
    let k = n.trailing_zeros();
    // 2^(k+1) as u128: k can be up to 63 for pathological n, and 1 << 64 must not wrap.
    k == 0 || (p.get() as u128) % (1u128 << (k + 1)) == 1
}

/// Existence by subgroup order: roots exist iff `(p-1)/gcd(n, p-1)` is even.
///
/// The n-th powers form the subgroup of that order, and a cyclic group contains `-1`
/// (the unique element of order 2) iff its order is even.
pub fn exists_by_group_order(p: Prime, n: u64) -> bool {
    assert!(p.is_odd() && n >= 1);
    canonical_exponent(p, n).subgroup_order().is_multiple_of(2)
}

/// Existence by literal coset membership: materialize the n-th power subgroup `H` and
/// test whether the shifted coset `H + 1` contains zero, i.e. whether `-1` is in `H`.
pub fn exists_by_subgroup(table: &DlogTable, n: u64) -> bool {
    let p = table.prime();
    assert!(p.is_odd() && n >= 1);
    let h = nth_power_subgroup(table, canonical_exponent(p, n));
    h.elements().iter().any(|&v| (v + 1) % p.get() == 0)
}

/// Every root of `x^n = -1`, by solving `m*n = (p-1)/2 (mod p-1)` over discrete logs.
///
/// Writing `x = a^m` turns the equation into that linear congruence (`-1 = a^((p-1)/2)`),
/// which has solutions iff `gcd(n, p-1)` divides `(p-1)/2` — and then exactly
/// `gcd(n, p-1)` of them, spaced `(p-1)/gcd` apart.
pub fn basic_solutions(table: &DlogTable, n: u64) -> Type0Report {
    let p = table.prime();
    assert!(p.is_odd() && n >= 1);
    let order = p.group_order();
    let solutions = match arith::solve_linear_congruence(n, order / 2, order) {
        None => Vec::new(),
        Some(ms) => ms.iter().map(|m| table.pow_u(m)).collect(),
    };
    Type0Report::new(p, n, solutions)
}
