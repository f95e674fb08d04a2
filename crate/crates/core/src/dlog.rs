//! Discrete-logarithm tables over a fixed generator.
//!
//! Exponents use the representative range `[1, p-1]`: the identity is written `a^(p-1)`
//! rather than `a^0`, so `log(1) = p - 1`. All exponent arithmetic is mod `p - 1`, with
//! residue 0 mapped back to `p - 1` where a representative is needed. This keeps "the
//! largest exponent is the identity, the middle one is -1" layouts literal: sorted, the
//! exponents of `1, 2, ..., p-1` end at `p - 1` and put `(p-1)/2` on `-1`.

use crate::modfield::{FieldElement, Generator, Prime};
use crate::{smallest_primitive_root, Error};

/// Mutually inverse power/log lookup tables for one generator. O(p) memory, O(1) lookups.
#[derive(Debug, Clone)]
pub struct DlogTable {
    generator: Generator,
    /// `powers[i] = a^i` for `0 <= i <= p-1`; both ends hold the identity.
    powers: Vec<u64>,
    /// `logs[v]` for `1 <= v <= p-1`, in `[1, p-1]`; `logs[0]` is an unused sentinel.
    logs: Vec<u64>,
}

impl DlogTable {
    /// Tabulates all powers of `a` in one multiplicative sweep.
    pub fn build(generator: Generator) -> DlogTable {
        let p = generator.prime();
        let order = p.group_order();
        let mut powers = vec![0u64; p.get() as usize];
        let mut logs = vec![0u64; p.get() as usize];
        let a = generator.element();
        let mut acc = p.element(1);
        powers[0] = 1;
        for i in 1..=order {
            acc = acc * a;
            powers[i as usize] = acc.value();
            logs[acc.value() as usize] = i;
        }
        debug_assert_eq!(powers[order as usize], 1, "a^(p-1) = 1");
        DlogTable { generator, powers, logs }
    }

    /// Table over the least primitive root of `p`.
    pub fn for_prime(p: Prime) -> DlogTable {
        DlogTable::build(smallest_primitive_root(p))
    }

    pub fn generator(&self) -> Generator {
        self.generator
    }

    pub fn prime(&self) -> Prime {
        self.generator.prime()
    }

    /// `p - 1`, the modulus of all exponent arithmetic.
    pub fn group_order(&self) -> u64 {
        self.prime().group_order()
    }

    /// The discrete log of `v` in `[1, p-1]`; fails on zero, which is not a power.
    pub fn log(&self, v: FieldElement) -> Result<u64, Error> {
        assert_eq!(v.prime(), self.prime(), "element from a different field");
        if v.is_zero() {
            return Err(Error::ZeroLog);
        }
        Ok(self.logs[v.value() as usize])
    }

    /// `a^e` for any `e >= 0` (reduced mod `p - 1`).
    pub fn exp(&self, e: u64) -> FieldElement {
        let r = e % self.group_order();
        self.prime().element(self.powers[r as usize])
    }

    /// Raw-value log for `v` in `[1, p-1]`. Crate-internal hot path.
    pub(crate) fn log_u(&self, v: u64) -> u64 {
        debug_assert!(v >= 1 && v < self.prime().get());
        self.logs[v as usize]
    }

    /// Raw-value power for an exponent residue in `[0, p-1]`. Crate-internal hot path.
    pub(crate) fn pow_u(&self, e: u64) -> u64 {
        self.powers[e as usize]
    }

    /// Raw-value inverse via `a^(p-1-log v)`. Crate-internal hot path.
    pub(crate) fn inv_u(&self, v: u64) -> u64 {
        self.powers[(self.group_order() - self.log_u(v)) as usize]
    }
}
