//! Coefficient arithmetic: a word-sized prime field for speed and exact
//! rationals for confirmation runs.
//!
//! Everything downstream is generic over [`Field`]. The trait passes the
//! field by reference into each operation (the modular field carries its
//! modulus), mirroring how the element type stays a plain value.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};
use rand::Rng;

use crate::error::Error;

/// Default modulus: the largest 31-bit prime. Reduced residues multiply
/// without overflowing a u64.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// Field operations over a copyable-or-cheaply-clonable element type.
pub trait Field: Clone + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse; `None` exactly for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn from_i64(&self, n: i64) -> Self::Elem;

    /// Embed a decimal literal (ASCII digits only). The modular field folds
    /// the digits mod p, so literals of any length are accepted.
    fn from_decimal(&self, digits: &str) -> Self::Elem;

    /// Draw an element for genericity purposes: uniform over the modular
    /// field, a bounded integer over the rationals.
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// Canonical text form, re-parseable by the polynomial grammar.
    fn format(&self, a: &Self::Elem) -> String;

    /// One-line description for reports.
    fn describe(&self) -> String;

    /// The modulus when arithmetic is modular, `None` for exact rationals.
    fn modulus(&self) -> Option<u64>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// Arithmetic modulo an odd prime `p < 2^32`, elements stored as reduced
/// residues in a u64.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fp {
    p: u64,
}

impl Fp {
    /// Accepts odd primes below 2^32; everything else is rejected so that
    /// products of residues always fit in a u64.
    pub fn new(p: u64) -> Result<Self, Error> {
        if p <= 2 || p >= (1 << 32) || !is_prime_u64(p) {
            return Err(Error::InvalidModulus(p));
        }
        Ok(Fp { p })
    }

    pub fn default_prime() -> Self {
        Fp { p: DEFAULT_PRIME }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    fn reduce_i64(&self, n: i64) -> u64 {
        let r = n.rem_euclid(self.p as i64);
        r as u64
    }
}

impl Field for Fp {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }

    fn is_one(&self, a: &u64) -> bool {
        *a == 1
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on (a, p); p prime so gcd is 1
        let (mut r0, mut r1) = (*a as i64, self.p as i64);
        let (mut s0, mut s1) = (1i64, 0i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Some(self.reduce_i64(s0))
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i64(n)
    }

    fn from_decimal(&self, digits: &str) -> u64 {
        let mut acc = 0u64;
        for d in digits.bytes() {
            debug_assert!(d.is_ascii_digit());
            acc = (acc * 10 + (d - b'0') as u64) % self.p;
        }
        acc
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> u64 {
        rng.random_range(0..self.p)
    }

    fn format(&self, a: &u64) -> String {
        // symmetric lift keeps small negative coefficients readable
        if *a > self.p / 2 {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        }
    }

    fn describe(&self) -> String {
        format!("GF({})", self.p)
    }

    fn modulus(&self) -> Option<u64> {
        Some(self.p)
    }
}

/// Exact rational arithmetic on arbitrary-precision fractions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

/// Genericity draws over the rationals use integers in `[-SAMPLE_BOUND,
/// SAMPLE_BOUND]`; the box is large enough that accidental degeneracies
/// never survive the trial budget.
const SAMPLE_BOUND: i64 = 1 << 20;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn from_decimal(&self, digits: &str) -> BigRational {
        let n: BigInt = digits.parse().expect("caller feeds ASCII digits");
        BigRational::from_integer(n)
    }

    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.random_range(-SAMPLE_BOUND..=SAMPLE_BOUND))
    }

    fn format(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else if a.is_negative() {
            format!("-{}/{}", a.numer().magnitude(), a.denom())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn describe(&self) -> String {
        "QQ".to_string()
    }

    fn modulus(&self) -> Option<u64> {
        None
    }
}

/// Deterministic Miller-Rabin; the fixed witness set decides primality for
/// every u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}
