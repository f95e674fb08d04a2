//! Crate-private integer helpers: gcd, factorization, linear congruences.
//!
//! Everything here is plain `u64` number theory with `u128` intermediates where products
//! could overflow. The public field types in [`crate::modfield`] wrap these.

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Extended Euclid: returns `(g, s, t)` with `g = gcd(a, b) = s*a + t*b`.
pub(crate) fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0, s0, t0)
}

/// Inverse of `a` modulo `m`, when `gcd(a, m) = 1`.
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

pub(crate) fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    debug_assert!(m > 0);
    let (g, s, _) = ext_gcd((a % m) as i128, m as i128);
    if g != 1 {
        return None;
    }
    Some(s.rem_euclid(m as i128) as u64)
}

/// Deterministic trial-division primality; fine for the 64-bit sizes this crate sweeps.
pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    if n.is_multiple_of(3) {
        return n == 3;
    }
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Prime factorization as `(prime, multiplicity)` pairs, ascending.
pub(crate) fn prime_factors(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, n: &mut u64| {
        let mut e = 0u32;
        while (*n).is_multiple_of(p) {
            *n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    };
    push(2, &mut n);
    push(3, &mut n);
    let mut d = 5u64;
    while d.saturating_mul(d) <= n {
        push(d, &mut n);
        push(d + 2, &mut n);
        d += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All divisors of `n`, ascending.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0, "0 has no divisor lattice");
    let mut out = vec![1u64];
    for (p, e) in prime_factors(n) {
        let base = out.clone();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            out.extend(base.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

/// Solutions of `a*x = b (mod m)`, if any: `x = first + i*step` for `0 <= i < count`,
/// with `count = gcd(a, m)` and `step = m / count`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct CongruenceSolutions {
    pub first: u64,
    pub step: u64,
    pub count: u64,
}

impl CongruenceSolutions {
    pub fn iter(self) -> impl Iterator<Item = u64> {
        (0..self.count).map(move |i| self.first + i * self.step)
    }
}

/// Solve `a*x = b (mod m)`; `None` when `gcd(a, m)` does not divide `b`.
pub(crate) fn solve_linear_congruence(a: u64, b: u64, m: u64) -> Option<CongruenceSolutions> {
    assert!(m > 0);
    let a = a % m;
    let b = b % m;
    let g = gcd(a, m); // g = m when a = 0, which handles that edge uniformly
    if !b.is_multiple_of(g) {
        return None;
    }
    let m_red = m / g;
    if m_red == 1 {
        // Everything solves `0 = 0 (mod 1)` scaled back up.
        return Some(CongruenceSolutions { first: 0, step: 1, count: m });
    }
    let inv = mod_inverse(a / g, m_red).expect("a/g and m/g are coprime after dividing by the gcd");
    let first = ((b / g) as u128 * inv as u128 % m_red as u128) as u64;
    Some(CongruenceSolutions { first, step: m_red, count: g })
}
