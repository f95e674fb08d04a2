//! Exhaustive brute force: the ground truth everything else is measured against.
//!
//! Nothing here touches discrete logs, subgroups, or the solvers — only modular
//! exponentiation and full scans. That independence is the point: when a report from
//! [`crate::type1`] matches the oracle, they can only both be right.
//!
//! Solutions of `x^n + y^n = z^n` split into three classes. *Trivial* ones have `x = 0`
//! or `y = 0` — one side of the sum degenerates, and every such triple is a unit multiple
//! of `(0, 0, 0)`, `(1, 0, 1)`, `(0, 1, 1)` or a same-power variant thereof. *Type-0*
//! solutions have `x, y` nonzero and `z = 0`; normalized by `y` they are roots of
//! `x^n = -1`. *Type-1* solutions have all three nonzero; normalized, `x^n + 1 = z^n`.
//! The classes partition every solution, and each is closed under unit scaling.

use crate::modfield::Prime;
use crate::Error;

/// Refuse `brute_force` above this prime unless the caller insists with a higher bound.
pub const DEFAULT_ORACLE_BOUND: u64 = 1000;

/// Refuse the O(p^3) census above this prime unless the caller insists.
pub const DEFAULT_CENSUS_BOUND: u64 = 50;

/// Which of the three solution classes a triple falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolutionClass {
    Trivial,
    Type0,
    Type1,
}

impl std::fmt::Display for SolutionClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SolutionClass::Trivial => "trivial",
            SolutionClass::Type0 => "type0",
            SolutionClass::Type1 => "type1",
        })
    }
}

/// A verified, classified solution triple of `x^n + y^n = z^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SolutionTriple {
    prime: Prime,
    exponent: u64,
    x: u64,
    y: u64,
    z: u64,
    class: SolutionClass,
}

impl SolutionTriple {
    pub fn prime(self) -> Prime {
        self.prime
    }

    pub fn exponent(self) -> u64 {
        self.exponent
    }

    pub fn x(self) -> u64 {
        self.x
    }

    pub fn y(self) -> u64 {
        self.y
    }

    pub fn z(self) -> u64 {
        self.z
    }

    pub fn class(self) -> SolutionClass {
        self.class
    }
}

/// Verify the equation and classify, or report why the triple is no solution at all.
pub fn classify_triple(
    prime: Prime,
    exponent: u64,
    x: u64,
    y: u64,
    z: u64,
) -> Result<SolutionTriple, Error> {
    let p = prime.get();
    assert!(x < p && y < p && z < p, "components must be reduced mod {p}");
    let lhs = prime.element(x).pow(exponent) + prime.element(y).pow(exponent);
    let rhs = prime.element(z).pow(exponent);
    if lhs != rhs {
        return Err(Error::NotASolution { x, y, z, exponent, modulus: p });
    }
    let class = if x == 0 || y == 0 {
        SolutionClass::Trivial
    } else if z == 0 {
        SolutionClass::Type0
    } else {
        SolutionClass::Type1
    };
    Ok(SolutionTriple { prime, exponent, x, y, z, class })
}

/// Brute-forced basic solution sets for one `(p, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    prime: Prime,
    exponent: u64,
    type0_basic: Vec<u64>,
    type1_basic: Vec<(u64, u64)>,
}

impl OracleReport {
    pub fn prime(&self) -> Prime {
        self.prime
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// All `x` with `x^n = -1`, ascending.
    pub fn type0_basic(&self) -> &[u64] {
        &self.type0_basic
    }

    /// All `(x, z)` with `x^n + 1 = z^n` and `x, z` nonzero, sorted.
    pub fn type1_basic(&self) -> &[(u64, u64)] {
        &self.type1_basic
    }
}

/// Exhaustive scan with the default size guard.
pub fn brute_force(prime: Prime, exponent: u64) -> Result<OracleReport, Error> {
    brute_force_with_bound(prime, exponent, DEFAULT_ORACLE_BOUND)
}

/// Exhaustive scan: O(p) over `x` for type-0 basics, O(p^2) over `(x, z)` for type-1.
///
/// Deliberately naive — modular exponentiation and comparison, nothing else.
pub fn brute_force_with_bound(
    prime: Prime,
    exponent: u64,
    bound: u64,
) -> Result<OracleReport, Error> {
    let p = prime.get();
    if p > bound {
        return Err(Error::OracleBoundExceeded { p, bound });
    }
    assert!(exponent >= 1 && exponent <= prime.group_order());
    let one = prime.element(1);
    let type0_basic: Vec<u64> =
        prime.units().filter(|x| x.pow(exponent).value() == p - 1).map(|x| x.value()).collect();
    // Precomputing the n-th powers keeps the pair scan honest but not pointlessly slow.
    let pow = |v: u64| prime.element(v).pow(exponent);
    let powers: Vec<u64> = (0..p).map(|v| pow(v).value()).collect();
    let mut type1_basic = Vec::new();
    for x in 1..p {
        let lhs = (prime.element(powers[x as usize]) + one).value();
        for z in 1..p {
            if powers[z as usize] == lhs {
                type1_basic.push((x, z));
            }
        }
    }
    Ok(OracleReport { prime, exponent, type0_basic, type1_basic })
}

/// Counts from the full O(p^3) triple census.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Census {
    pub trivial: u64,
    pub type0: u64,
    pub type1: u64,
    /// Triples satisfying the equation, counted directly while scanning.
    pub solutions: u64,
}

impl Census {
    /// The partition check: classified counts must re-add to the direct count.
    pub fn classified_total(self) -> u64 {
        self.trivial + self.type0 + self.type1
    }
}

/// Walk all `p^3` triples, classify every solution, and count per class.
pub fn full_census(prime: Prime, exponent: u64, bound: u64) -> Result<Census, Error> {
    let p = prime.get();
    if p > bound {
        return Err(Error::OracleBoundExceeded { p, bound });
    }
    assert!(exponent >= 1 && exponent <= prime.group_order());
    let powers: Vec<u64> = (0..p).map(|v| prime.element(v).pow(exponent).value()).collect();
    let mut census = Census::default();
    for x in 0..p {
        for y in 0..p {
            let lhs = (prime.element(powers[x as usize]) + prime.element(powers[y as usize])).value();
            for z in 0..p {
                if powers[z as usize] != lhs {
                    continue;
                }
                census.solutions += 1;
                match classify_triple(prime, exponent, x, y, z)
                    .expect("the census only classifies verified solutions")
                    .class()
                {
                    SolutionClass::Trivial => census.trivial += 1,
                    SolutionClass::Type0 => census.type0 += 1,
                    SolutionClass::Type1 => census.type1 += 1,
                }
            }
        }
    }
    Ok(census)
}
