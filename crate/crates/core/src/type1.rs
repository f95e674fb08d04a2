//! Type-1 solutions: `x^n + 1 = z^n` with `x, z` nonzero.
//!
//! The workhorse looks at *consecutive* elements: if `X = a^alpha` and `X + 1 = a^beta`
//! are both n-th powers, every pair of an n-th root of `X` with an n-th root of `X + 1`
//! is a basic solution for exponent `n` — and all basic solutions arise this way.
//!
//! Two implementations of that idea live here. [`SolveMode::Faithful`] enumerates shifted
//! log pairs `alpha + k(p-1), beta + l(p-1)` up to `(p-1)^2/2`, takes gcds, and lifts
//! divisors — cubic-ish in `p` but a literal transcription of the derivation, kept as a
//! cross-check. [`SolveMode::Fast`] is the closed form the enumeration converges to:
//! a solution for exponent `n` exists at `alpha` iff `g = gcd(n, p-1)` divides both
//! `alpha` and `beta`, and the roots come from one inverse mod `(p-1)/g`. The test suite
//! proves the two agree; [`subgroup_scan`] re-derives the same reports with no discrete
//! logs at all, and the oracle module re-derives them with nothing but exhaustion.

use std::collections::BTreeMap;

use crate::arith;
use crate::dlog::DlogTable;
use crate::modfield::{FieldElement, Prime};
use crate::oracle::{self, SolutionTriple};
use crate::Error;

/// Which next-in-line implementation to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMode {
    /// Divisibility criterion on discrete logs; the default.
    Fast,
    /// Literal shift-pair gcd enumeration with divisor lifting. O(p^3 log p); for
    /// cross-checking at small p.
    Faithful,
}

/// One basic type-1 solution `(x, z)`: `x^n + 1 = z^n`, both nonzero.
///
/// Construction verifies the equation against the `(p, n)` it is built for, so an
/// invalid pair cannot exist; reports only contain pairs they verified themselves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Type1Basic {
    x: u64,
    z: u64,
}

impl Type1Basic {
    /// Verifies `x^n + 1 = z^n (mod p)` and that both sides live in `Z_p*`.
    pub fn new(prime: Prime, exponent: u64, x: u64, z: u64) -> Type1Basic {
        assert!(x >= 1 && x < prime.get() && z >= 1 && z < prime.get(), "x, z must be units");
        let lhs = prime.element(x).pow(exponent) + prime.element(1);
        let rhs = prime.element(z).pow(exponent);
        assert_eq!(lhs, rhs, "{x}^{exponent} + 1 != {z}^{exponent} (mod {prime})");
        Type1Basic { x, z }
    }

    /// Table-backed twin of [`Type1Basic::new`]: verifies the same equation through
    /// power/log lookups (`v^n = a^(n log v)`) instead of square-and-multiply, so
    /// the solvers can afford the check on every emitted pair.
    pub(crate) fn checked(table: &DlogTable, exponent: u64, x: u64, z: u64) -> Type1Basic {
        let p = table.prime().get();
        assert!(x >= 1 && x < p && z >= 1 && z < p, "x, z must be units");
        let m = table.group_order();
        let xn = table.pow_u(arith::mul_mod(table.log_u(x), exponent, m));
        let zn = table.pow_u(arith::mul_mod(table.log_u(z), exponent, m));
        assert!((xn + 1) % p == zn, "{x}^{exponent} + 1 != {z}^{exponent} (mod {p})");
        Type1Basic { x, z }
    }

    pub fn x(self) -> u64 {
        self.x
    }

    pub fn z(self) -> u64 {
        self.z
    }

    pub fn pair(self) -> (u64, u64) {
        (self.x, self.z)
    }
}

/// All basic type-1 solutions for one `(p, n)`, sorted by `(x, z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Type1Report {
    prime: Prime,
    exponent: u64,
    solutions: Vec<Type1Basic>,
}

impl Type1Report {
    /// Builds a report from raw pairs, verifying every one of them.
    pub fn from_pairs(prime: Prime, exponent: u64, mut pairs: Vec<(u64, u64)>) -> Type1Report {
        pairs.sort_unstable();
        pairs.dedup();
        let solutions =
            pairs.into_iter().map(|(x, z)| Type1Basic::new(prime, exponent, x, z)).collect();
        Type1Report { prime, exponent, solutions }
    }

    /// Wraps solutions a solver already construction-verified and emitted in order.
    pub(crate) fn from_sorted(
        prime: Prime,
        exponent: u64,
        solutions: Vec<Type1Basic>,
    ) -> Type1Report {
        debug_assert!(
            solutions.windows(2).all(|w| w[0].pair() < w[1].pair()),
            "solver emitted out of order"
        );
        Type1Report { prime, exponent, solutions }
    }

    pub fn empty(prime: Prime, exponent: u64) -> Type1Report {
        Type1Report { prime, exponent, solutions: Vec::new() }
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

    /// The solutions, sorted by `(x, z)`.
    pub fn solutions(&self) -> &[Type1Basic] {
        &self.solutions
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn contains(&self, x: u64, z: u64) -> bool {
        self.solutions.binary_search_by_key(&(x, z), |s| s.pair()).is_ok()
    }

    /// The solutions as plain pairs (serialization view).
    pub fn pairs(&self) -> Vec<(u64, u64)> {
        self.solutions.iter().map(|s| s.pair()).collect()
    }
}

/// Fast criterion for one exponent `n` in `[1, (p-1)/2]`.
///
/// For each unit `x` in ascending order, `x^n + 1` is a nonzero n-th power exactly
/// when `g` divides `beta = log(x^n + 1)` (g = gcd(n, p-1)); its `g` n-th roots come
/// from the congruence `nu * n = beta (mod p-1)`: dividing by `g`,
/// `nu = (beta/g) * (n/g)^-1 (mod (p-1)/g)`, plus the `g` lifts of that residue.
/// Emits sorted by `(x, z)`; every pair is verified on construction.
fn fast_solutions(table: &DlogTable, n: u64) -> Vec<Type1Basic> {
    let p = table.prime().get();
    let m = table.group_order();
    debug_assert!(n >= 1 && n <= m / 2);
    let g = arith::gcd(n, m);
    let h = m / g; // subgroup order; >= 2 since n <= m/2
    let w = arith::mod_inverse(n / g % h, h).expect("n/g is a unit mod (p-1)/g");
    let mut solutions = Vec::new();
    let mut roots = Vec::with_capacity(g as usize);
    for x in 1..p {
        let xn = table.pow_u(arith::mul_mod(table.log_u(x), n, m));
        if xn == p - 1 {
            continue; // x^n + 1 = 0: that root pattern is type-0, not type-1
        }
        let beta = table.log_u(xn + 1);
        if !beta.is_multiple_of(g) {
            continue; // x^n + 1 is not an n-th power
        }
        let nu0 = arith::mul_mod(beta / g % h, w, h);
        roots.clear();
        roots.extend((0..g).map(|l| table.pow_u(nu0 + l * h)));
        roots.sort_unstable();
        solutions.extend(roots.iter().map(|&z| Type1Basic::checked(table, n, x, z)));
    }
    solutions
}

/// The shift enumeration for one starting exponent, with its full audit trail.
#[derive(Debug, Clone)]
pub struct NextInLineTrace {
    /// Starting exponent: `X = a^alpha`.
    pub alpha: u64,
    /// `log(X + 1)`.
    pub beta: u64,
    /// Every shift pair tried: `gcd = gcd(alpha + k(p-1), beta + l(p-1))`.
    pub shifts: Vec<ShiftStep>,
    /// Every `(exponent, solution)` the divisor lifting emitted.
    pub emitted: Vec<(u64, Type1Basic)>,
}

/// One gcd taken during the shift enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShiftStep {
    pub k: u64,
    pub l: u64,
    pub gcd: u64,
}

/// Run the literal derivation for the consecutive pair at `a^alpha`, `alpha` in
/// `[1, p-1]`; `None` when `a^alpha = -1` (no successor to pair with).
///
/// Both logs are shifted by all multiples of `p - 1` keeping them at most `(p-1)^2 / 2`;
/// each shifted pair contributes `d = gcd(alpha', beta')`, and every divisor `e <= (p-1)/2`
/// of `d` yields the solution `(a^(alpha'/e), a^(beta'/e))` for exponent `e` — raising it
/// to the `e`-th power lands back on `(X, X + 1)`.
pub fn trace_consecutive_pair(table: &DlogTable, alpha: u64) -> Option<NextInLineTrace> {
    let p = table.prime();
    let m = table.group_order();
    assert!(alpha >= 1 && alpha <= m, "alpha must be an exponent representative");
    let x_val = table.pow_u(alpha);
    if x_val == p.get() - 1 {
        return None;
    }
    let beta = table.log_u(x_val + 1);
    let bound = m * m / 2;
    let mut shifts = Vec::new();
    let mut emitted = Vec::new();
    let mut shifted_alpha = alpha;
    let mut k = 0u64;
    while shifted_alpha <= bound {
        let mut shifted_beta = beta;
        let mut l = 0u64;
        while shifted_beta <= bound {
            let d = arith::gcd(shifted_alpha, shifted_beta);
            shifts.push(ShiftStep { k, l, gcd: d });
            for e in arith::divisors(d) {
                if e > m / 2 {
                    break; // divisors come ascending; the rest are out of range too
                }
                let x_root = table.pow_u(shifted_alpha / e % m);
                let z_root = table.pow_u(shifted_beta / e % m);
                emitted.push((e, Type1Basic::new(p, e, x_root, z_root)));
            }
            shifted_beta += m;
            l += 1;
        }
        shifted_alpha += m;
        k += 1;
    }
    Some(NextInLineTrace { alpha, beta, shifts, emitted })
}

/// Basic type-1 solutions for every exponent `n` in `[1, (p-1)/2]`.
///
/// The upper half of the exponent range follows by [`exponent_mirror`]; `n = p-1` is
/// always empty (every unit's `(p-1)`-th power is 1, and 1 + 1 is not 1 for p > 2).
pub fn next_in_line(table: &DlogTable, mode: SolveMode) -> BTreeMap<u64, Type1Report> {
    let p = table.prime();
    assert!(p.is_odd(), "Z_2 has no exponent range to speak of");
    let m = table.group_order();
    let half = m / 2;
    match mode {
        SolveMode::Fast => (1..=half)
            .map(|n| (n, Type1Report::from_sorted(p, n, fast_solutions(table, n))))
            .collect(),
        SolveMode::Faithful => {
            let mut buckets: BTreeMap<u64, Vec<(u64, u64)>> =
                (1..=half).map(|n| (n, Vec::new())).collect();
            for alpha in 1..=m {
                if let Some(trace) = trace_consecutive_pair(table, alpha) {
                    for (e, sol) in trace.emitted {
                        buckets.get_mut(&e).expect("e <= (p-1)/2 by the lifting cutoff")
                            .push(sol.pair());
                    }
                }
            }
            buckets
                .into_iter()
                .map(|(n, pairs)| (n, Type1Report::from_pairs(p, n, pairs)))
                .collect()
        }
    }
}

/// The report for any exponent `n` in `[1, p-1]`: fast solve below the midpoint,
/// mirrored above it, empty at `n = p-1`.
pub fn report_for_exponent(table: &DlogTable, n: u64) -> Type1Report {
    let p = table.prime();
    assert!(p.is_odd());
    let m = table.group_order();
    assert!(n >= 1 && n <= m, "exponent out of range");
    if n == m {
        Type1Report::empty(p, n)
    } else if n <= m / 2 {
        Type1Report::from_sorted(p, n, fast_solutions(table, n))
    } else {
        exponent_mirror(table, &report_for_exponent(table, m - n))
    }
}

/// Independent solver: bucket every unit under `w -> w^n` by plain modular
/// exponentiation, then pair the roots of each `X` with the roots of `X + 1`.
///
/// No discrete logs anywhere — this is the cross-check on [`next_in_line`]'s algebra.
pub fn subgroup_scan(prime: Prime, n: u64) -> Type1Report {
    assert!(prime.is_odd() && n >= 1);
    let p = prime.get();
    let mut roots: Vec<Vec<u64>> = vec![Vec::new(); p as usize];
    for w in prime.units() {
        roots[w.pow(n).value() as usize].push(w.value());
    }
    let mut pairs = Vec::new();
    for x_pow in 1..p - 1 {
        // z^n = x_pow + 1 <= p - 1; the x_pow = p - 1 successor would be 0, never a power
        let (xs, zs) = (&roots[x_pow as usize], &roots[x_pow as usize + 1]);
        for &x in xs {
            for &z in zs {
                pairs.push((x, z));
            }
        }
    }
    Type1Report::from_pairs(prime, n, pairs)
}

/// The sign symmetry: even `n` sends `(x, z)` to `(-x, -z)`, odd `n` swaps and negates,
/// `(x, z)` to `(-z, -x)`. An involution on every report.
pub fn parity_symmetry(prime: Prime, exponent: u64, sol: Type1Basic) -> Type1Basic {
    let p = prime.get();
    if exponent.is_multiple_of(2) {
        Type1Basic::new(prime, exponent, p - sol.x(), p - sol.z())
    } else {
        Type1Basic::new(prime, exponent, p - sol.z(), p - sol.x())
    }
}

/// The exponent symmetry: inverting coordinates turns the complete report for `n` into
/// the complete report for `p-1-n`. Bijective, and an involution when applied twice.
pub fn exponent_mirror(table: &DlogTable, report: &Type1Report) -> Type1Report {
    let p = table.prime();
    assert_eq!(report.prime(), p, "report from a different field");
    let m = table.group_order();
    let n = report.exponent();
    assert!(n >= 1 && n < m, "the mirror pairs n with p-1-n inside [1, p-2]");
    let mirrored: Vec<(u64, u64)> =
        report.solutions().iter().map(|s| (table.inv_u(s.x()), table.inv_u(s.z()))).collect();

    // Inversion scrambles the source order; a counting sort over x (with the tiny
    // per-x z runs sorted in place) restores it in linear time, which keeps the
    // mirrored half of a full analysis as cheap as the directly-solved half.
    let mut offsets = vec![0usize; p.get() as usize];
    for &(x, _) in &mirrored {
        offsets[x as usize] += 1;
    }
    let mut start = 0;
    for slot in offsets.iter_mut() {
        let count = *slot;
        *slot = start;
        start += count;
    }
    let mut solutions = vec![Type1Basic { x: 0, z: 0 }; mirrored.len()];
    for &(x, z) in &mirrored {
        let slot = &mut offsets[x as usize];
        solutions[*slot] = Type1Basic::checked(table, m - n, x, z);
        *slot += 1;
    }
    let mut run = 0;
    while run < solutions.len() {
        let x = solutions[run].x;
        let end = run + solutions[run..].iter().take_while(|s| s.x == x).count();
        solutions[run..end].sort_unstable_by_key(|s| s.z);
        run = end;
    }
    Type1Report::from_sorted(p, m - n, solutions)
}

/// The `z = 1` view of a basic solution: dividing `x^n + 1 = z^n` by `z^n` gives
/// `u^n + v^n = 1` with `u = x/z`, `v = 1/z`. A formatting alternative, nothing more.
pub fn unit_sum_form(prime: Prime, exponent: u64, sol: Type1Basic) -> (u64, u64) {
    let z_inv = prime.element(sol.z()).inv().expect("z is a unit");
    let u = prime.element(sol.x()) * z_inv;
    let v = z_inv;
    debug_assert_eq!(
        (u.pow(exponent) + v.pow(exponent)).value(),
        1,
        "unit-sum form must verify"
    );
    (u.value(), v.value())
}

/// Scale a basic solution by a nonzero unit `u` into the full triple `(ux, u, uz)`.
pub fn lift_basic(
    prime: Prime,
    exponent: u64,
    sol: Type1Basic,
    u: FieldElement,
) -> Result<SolutionTriple, Error> {
    assert_eq!(u.prime(), prime, "unit from a different field");
    if u.is_zero() {
        return Err(Error::ZeroUnit);
    }
    let x = prime.element(sol.x()) * u;
    let z = prime.element(sol.z()) * u;
    oracle::classify_triple(prime, exponent, x.value(), u.value(), z.value())
}
