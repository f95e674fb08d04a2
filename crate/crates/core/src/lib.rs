//! Solutions of `x^n + y^n = z^n` over the prime fields `Z_p`.
//!
//! For an odd prime `p` and any exponent `1 <= n <= p-1` this crate decides whether the
//! equation has nontrivial solutions, enumerates the *basic* ones (from which every
//! solution arises as a unit multiple), and cross-checks everything three ways:
//!
//! * [`type0`] / [`type1`] — the discrete-logarithm solvers. Type-0 solutions satisfy
//!   `x^n = -1` (so `x^n + y^n = 0` with `y = x`-scaled partners); type-1 solutions
//!   satisfy `x^n + 1 = z^n` with everything nonzero.
//! * [`type1::subgroup_scan`] — an independent solver that buckets `w -> w^n` by modular
//!   exponentiation and never touches a log table.
//! * [`oracle`] — exhaustive brute force over the whole field, the final arbiter.
//!
//! [`analysis`] assembles per-prime reports (the CLI and the browser demo both feed from
//! it) and [`verify`] packages the cross-checks as sweeps over ranges of primes.

pub mod analysis;
mod arith;
pub mod dlog;
pub mod modfield;
pub mod oracle;
pub mod powerstructure;
pub mod type0;
pub mod type1;
pub mod verify;

pub use analysis::{AnalysisOptions, ExponentReport, PrimeAnalysis, PrimeAnalyzer};
pub use dlog::DlogTable;
pub use modfield::{smallest_primitive_root, FieldElement, Generator, Prime};
pub use oracle::{SolutionClass, SolutionTriple};
pub use type1::SolveMode;

/// Everything that can go wrong short of a programming error (those panic).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The given modulus is not prime.
    NotPrime(u64),
    /// Zero has no multiplicative inverse.
    ZeroInverse,
    /// Zero has no multiplicative order.
    ZeroOrder,
    /// Zero has no discrete logarithm.
    ZeroLog,
    /// The claimed generator does not generate the full multiplicative group.
    NotGenerator { value: u64, modulus: u64 },
    /// Basic solutions may only be scaled by nonzero units.
    ZeroUnit,
    /// The triple does not satisfy `x^n + y^n = z^n` for this prime and exponent.
    NotASolution { x: u64, y: u64, z: u64, exponent: u64, modulus: u64 },
    /// Brute force over `p^2` pairs was refused; raise the bound explicitly to insist.
    OracleBoundExceeded { p: u64, bound: u64 },
    /// The shift-enumerating solver was refused; raise the bound explicitly to insist.
    FaithfulBoundExceeded { p: u64, bound: u64 },
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Error::NotPrime(n) => write!(f, "{n} is not a prime"),
            Error::ZeroInverse => write!(f, "zero has no multiplicative inverse"),
            Error::ZeroOrder => write!(f, "zero has no multiplicative order"),
            Error::ZeroLog => write!(f, "zero has no discrete logarithm"),
            Error::NotGenerator { value, modulus } => {
                write!(f, "{value} does not generate the multiplicative group mod {modulus}")
            }
            Error::ZeroUnit => write!(f, "basic solutions scale by nonzero units only"),
            Error::NotASolution { x, y, z, exponent, modulus } => write!(
                f,
                "{x}^{exponent} + {y}^{exponent} != {z}^{exponent} (mod {modulus})"
            ),
            Error::OracleBoundExceeded { p, bound } => {
                write!(f, "oracle refuses p = {p} > {bound}; pass a larger bound to insist")
            }
            Error::FaithfulBoundExceeded { p, bound } => write!(
                f,
                "shift-enumerating solver refuses p = {p} > {bound}; pass a larger bound to insist"
            ),
        }
    }
}

impl std::error::Error for Error {}
