//! Exact coefficient arithmetic and dense matrices over it.
//!
//! Four coefficient kinds are provided: [`Rational`] (Q), [`LaurentPoly`]
//! (Q[q, q^-1]), [`RatFunc`] (Q(q)) and [`TruncSeries`] (Q[[h]] cut at a
//! fixed order). All of them implement [`Ring`]; the integral domains also
//! implement [`Domain`] (exact division) and the fields implement [`Field`].

pub mod laurent;
pub mod linsolve;
pub mod matrix;
pub mod modular;
mod poly;
pub mod ratfunc;
pub mod rational;
pub mod series;

use std::fmt;

pub use laurent::LaurentPoly;
pub use linsolve::{nullspace, solve_intertwiner_space};
pub use matrix::Matrix;
pub use ratfunc::RatFunc;
pub use rational::Rational;
pub use series::TruncSeries;

/// Commutative ring with unit, by reference.
///
/// Method names shadow the operator traits on purpose so that generic code
/// only needs this one bound.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Rough cost of computing with this value; used to choose pivots.
    fn weight(&self) -> usize {
        1
    }
}

/// Integral domain with exact division (`None` when the quotient is not in
/// the ring or the divisor is zero).
pub trait Domain: Ring {
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

pub trait Field: Domain {
    fn inv(&self) -> Option<Self>;

    fn div(&self, divisor: &Self) -> Option<Self> {
        divisor.inv().map(|d| self.mul(&d))
    }
}
