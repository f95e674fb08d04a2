//! The subgroup structure of n-th powers in `Z_p*`.
//!
//! The n-th powers of the units form the unique subgroup of order `(p-1)/gcd(n, p-1)`:
//! writing units as powers of a generator `a`, the n-th powers are exactly
//! `{a^(g*i)}` for `g = gcd(n, p-1)`. So the *set* of n-th powers depends on `n` only
//! through that gcd — raising to the 10th is the same as squaring mod 17 — and `g` is
//! the canonical representative of the exponent's power class.

use crate::arith;
use crate::dlog::DlogTable;
use crate::modfield::Prime;

/// An exponent reduced to its power class: everything the set of n-th powers depends on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PowerClass {
    prime: Prime,
    exponent: u64,
    canonical: u64,
}

impl PowerClass {
    pub fn prime(self) -> Prime {
        self.prime
    }

    /// The exponent as given.
    pub fn exponent(self) -> u64 {
        self.exponent
    }

    /// `gcd(n, p-1)`, the canonical exponent of the class.
    pub fn canonical(self) -> u64 {
        self.canonical
    }

    /// `(p-1)/gcd(n, p-1)`, the size of the n-th power subgroup.
    pub fn subgroup_order(self) -> u64 {
        self.prime.group_order() / self.canonical
    }
}

/// Reduce `n >= 1` to its power class over `p`.
pub fn canonical_exponent(p: Prime, n: u64) -> PowerClass {
    assert!(n >= 1, "exponent 0 has no power class here");
    PowerClass { prime: p, exponent: n, canonical: arith::gcd(n, p.group_order()) }
}

/// The set of n-th powers of units, materialized and sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSubgroup {
    class: PowerClass,
    elements: Vec<u64>,
}

impl PowerSubgroup {
    pub fn class(&self) -> PowerClass {
        self.class
    }

    /// The elements, ascending.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // a subgroup always contains the identity
    }

    pub fn contains(&self, v: u64) -> bool {
        self.elements.binary_search(&v).is_ok()
    }
}

/// Walk the subgroup `{a^(g*i) : 1 <= i <= (p-1)/g}` off the log table.
pub fn nth_power_subgroup(table: &DlogTable, class: PowerClass) -> PowerSubgroup {
    assert_eq!(table.prime(), class.prime(), "table and class over different primes");
    let g = class.canonical();
    let mut elements: Vec<u64> =
        (1..=class.subgroup_order()).map(|i| table.pow_u(g * i)).collect();
    elements.sort_unstable();
    debug_assert!(elements.windows(2).all(|w| w[0] < w[1]), "a subgroup walk never repeats");
    PowerSubgroup { class, elements }
}

/// Do `n1`-th powers and `n2`-th powers cover the same set? True iff the gcds agree.
pub fn power_sets_equal(p: Prime, n1: u64, n2: u64) -> bool {
    canonical_exponent(p, n1).canonical() == canonical_exponent(p, n2).canonical()
}
