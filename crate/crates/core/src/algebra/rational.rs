//! Arbitrary precision rationals, backed by `num-rational`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Domain, Field, Ring};
use crate::error::{Error, Result};

/// Reduced fraction with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"3"`, `"-3/4"` (and tolerates surrounding whitespace).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => {
            let n: BigInt = text.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(n))
        }
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_int(n: i64) -> Self {
        int(n)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

impl Domain for Rational {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if Zero::is_zero(divisor) {
            None
        } else {
            Some(self / divisor)
        }
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

pub(crate) fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}
