//! The prime field `Z_p`: validated primes, field elements, generators.
//!
//! All arithmetic widens to `u128` before reducing, so any `u64` prime is safe. Elements
//! carry their prime with them; mixing elements of different fields is a bug and panics.

use crate::arith;
use crate::Error;

/// A validated prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Prime(u64);

impl Prime {
    /// Validates primality by trial division.
    pub fn new(p: u64) -> Result<Prime, Error> {
        if arith::is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// `p - 1`, the order of the multiplicative group.
    pub fn group_order(self) -> u64 {
        self.0 - 1
    }

    pub fn is_odd(self) -> bool {
        self.0 != 2
    }

    /// The element `v mod p`.
    pub fn element(self, v: u64) -> FieldElement {
        FieldElement { value: v % self.0, prime: self }
    }

    /// The nonzero elements `1, 2, ..., p-1` in order.
    pub fn units(self) -> impl Iterator<Item = FieldElement> {
        (1..self.0).map(move |v| FieldElement { value: v, prime: self })
    }
}

impl std::fmt::Display for Prime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Every odd prime `3 <= p <= max`, ascending.
pub fn odd_primes_up_to(max: u64) -> Vec<Prime> {
    (3..=max).filter_map(|n| Prime::new(n).ok()).collect()
}

/// An element of `Z_p`, always stored reduced to `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement {
    value: u64,
    prime: Prime,
}

impl FieldElement {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn prime(self) -> Prime {
        self.prime
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// `self^e` by square-and-multiply; `x^0 = 1` for every `x` including zero.
    pub fn pow(self, mut e: u64) -> FieldElement {
        let p = self.prime.0 as u128;
        let mut base = self.value as u128;
        let mut acc = 1u128;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        FieldElement { value: acc as u64, prime: self.prime }
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(self) -> Result<FieldElement, Error> {
        if self.value == 0 {
            return Err(Error::ZeroInverse);
        }
        let v = arith::mod_inverse(self.value, self.prime.0)
            .expect("nonzero residues are invertible mod a prime");
        Ok(FieldElement { value: v, prime: self.prime })
    }

    /// Multiplicative order: the least `k >= 1` with `self^k = 1`. Fails on zero.
    ///
    /// Checks the divisors of `p - 1` in ascending order, so the first hit is the order.
    pub fn order(self) -> Result<u64, Error> {
        if self.value == 0 {
            return Err(Error::ZeroOrder);
        }
        for d in arith::divisors(self.prime.group_order()) {
            if self.pow(d).value == 1 {
                return Ok(d);
            }
        }
        unreachable!("every unit's order divides p - 1");
    }
}

impl std::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.value.fmt(f)
    }
}

fn assert_same_field(a: FieldElement, b: FieldElement) {
    assert_eq!(a.prime, b.prime, "mixed arithmetic across Z_{} and Z_{}", a.prime, b.prime);
}

impl std::ops::Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        assert_same_field(self, rhs);
        let p = self.prime.0;
        // The sum can wrap u64 when p > 2^63; `v < self.value` detects that carry, and in
        // both reduction cases subtracting p (wrapping) lands back in [0, p).
        let v = self.value.wrapping_add(rhs.value);
        let v = if v >= p || v < self.value { v.wrapping_sub(p) } else { v };
        FieldElement { value: v, prime: self.prime }
    }
}

impl std::ops::Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: FieldElement) -> FieldElement {
        assert_same_field(self, rhs);
        let v = if self.value >= rhs.value {
            self.value - rhs.value
        } else {
            self.prime.0 - (rhs.value - self.value)
        };
        FieldElement { value: v, prime: self.prime }
    }
}

impl std::ops::Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        assert_same_field(self, rhs);
        let v = (self.value as u128 * rhs.value as u128 % self.prime.0 as u128) as u64;
        FieldElement { value: v, prime: self.prime }
    }
}

impl std::ops::Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        let v = if self.value == 0 { 0 } else { self.prime.0 - self.value };
        FieldElement { value: v, prime: self.prime }
    }
}

/// A verified generator (primitive root) of the multiplicative group of `Z_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Generator(FieldElement);

impl Generator {
    /// Verifies that `a` has full order `p - 1`.
    ///
    /// It is enough to check `a^((p-1)/q) != 1` for every prime `q` dividing `p - 1`;
    /// any proper divisor of the order divides one of those quotients.
    pub fn new(a: FieldElement) -> Result<Generator, Error> {
        let p = a.prime();
        let order = p.group_order();
        let full = !a.is_zero()
            && arith::prime_factors(order).iter().all(|&(q, _)| a.pow(order / q).value() != 1);
        if full {
            Ok(Generator(a))
        } else {
            Err(Error::NotGenerator { value: a.value(), modulus: p.get() })
        }
    }

    pub fn element(self) -> FieldElement {
        self.0
    }

    pub fn prime(self) -> Prime {
        self.0.prime()
    }

    /// The multiplicative order of `-a`, computed literally from the definition.
    ///
    /// Since `-1 = a^((p-1)/2)`, we get `-a = a^(1 + (p-1)/2)`: for `p = 1 (mod 4)` that
    /// exponent is odd and coprime to `p - 1`, so `-a` is again a generator; for
    /// `p = 3 (mod 4)` it shares a factor 2 and `-a` has order `(p-1)/2`. This method
    /// just measures; callers wanting the dichotomy compare against those.
    pub fn negated_order(self) -> u64 {
        (-self.0).order().expect("-a is a unit")
    }
}

impl std::fmt::Display for Generator {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// The least primitive root of `Z_p`, found by ascending search from 2.
///
/// `p` must be odd; `Z_2` has the empty product as its only unit structure and no
/// candidate below 2.
pub fn smallest_primitive_root(p: Prime) -> Generator {
    assert!(p.is_odd(), "smallest_primitive_root expects an odd prime");
    for a in 2..p.get() {
        if let Ok(g) = Generator::new(p.element(a)) {
            return g;
        }
    }
    unreachable!("every prime field has a primitive root");
}
