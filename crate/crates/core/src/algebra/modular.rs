//! Arithmetic modulo a fixed 62-bit prime, used to pre-screen exact
//! identities by evaluating `q` at random residues.
//!
//! A screen that finds a difference is conclusive (the exact values differ);
//! a screen that finds agreement only says the identity is likely, and
//! callers confirm it exactly.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::Rng;

use super::{Domain, Field, LaurentPoly, Matrix, RatFunc, Rational, Ring};

/// 2^62 - 57.
pub const PRIME: u64 = 4_611_686_018_427_387_847;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp(u64);

impl Fp {
    pub fn new(x: u64) -> Self {
        Fp(x % PRIME)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn random_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Fp(rng.gen_range(2..PRIME))
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    fn from_bigint(n: &BigInt) -> Self {
        let r = n % BigInt::from(PRIME);
        let r = r.to_i128().expect("residue fits");
        Fp(r.rem_euclid(PRIME as i128) as u64)
    }

    /// `None` when the denominator vanishes modulo the prime.
    pub fn from_rational(r: &Rational) -> Option<Self> {
        let d = Self::from_bigint(r.denom());
        Some(Self::from_bigint(r.numer()).mul(&d.inv()?))
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Ring for Fp {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn from_int(n: i64) -> Self {
        Fp((n as i128).rem_euclid(PRIME as i128) as u64)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        Fp(((self.0 as u128 + other.0 as u128) % PRIME as u128) as u64)
    }
    fn sub(&self, other: &Self) -> Self {
        Fp(((self.0 as u128 + PRIME as u128 - other.0 as u128) % PRIME as u128) as u64)
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(((self.0 as u128 * other.0 as u128) % PRIME as u128) as u64)
    }
    fn neg(&self) -> Self {
        Fp((PRIME - self.0) % PRIME)
    }
}

impl Domain for Fp {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        Some(self.mul(&divisor.inv()?))
    }
}

impl Field for Fp {
    fn inv(&self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow(PRIME - 2))
    }
}

impl LaurentPoly {
    /// Value at a nonzero residue.
    pub fn eval_mod(&self, x: Fp) -> Option<Fp> {
        let x_inv = x.inv()?;
        let mut acc = Fp(0);
        for (e, c) in self.terms() {
            let c = Fp::from_rational(c)?;
            let xe = if e >= 0 {
                x.pow(e as u64)
            } else {
                x_inv.pow(e.unsigned_abs())
            };
            acc = acc.add(&c.mul(&xe));
        }
        Some(acc)
    }
}

impl Matrix<LaurentPoly> {
    pub fn eval_mod(&self, x: Fp) -> Option<Matrix<Fp>> {
        self.try_map(|p| p.eval_mod(x).ok_or(())).ok()
    }
}

impl RatFunc {
    /// Value at a residue that is not a pole.
    pub fn eval_mod(&self, x: Fp) -> Option<Fp> {
        self.numer().eval_mod(x)?.div(&self.denom().eval_mod(x)?)
    }
}

impl Matrix<RatFunc> {
    pub fn eval_mod(&self, x: Fp) -> Option<Matrix<Fp>> {
        self.try_map(|p| p.eval_mod(x).ok_or(())).ok()
    }
}
