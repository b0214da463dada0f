//! The field Q(q) of rational functions.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::laurent::forward_ops;
use super::poly;
use super::{Domain, Field, LaurentPoly, Rational, Ring};

/// `num / den` in canonical form.
///
/// `den` is a monic polynomial with nonzero constant term (all powers of `q`
/// live in `num`) and `gcd(num, den) = 1`, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

#[derive(Deserialize)]
struct RawRatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl<'de> Deserialize<'de> for RatFunc {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawRatFunc::deserialize(deserializer)?;
        RatFunc::new(raw.num, raw.den).ok_or_else(|| serde::de::Error::custom("zero denominator"))
    }
}

impl RatFunc {
    /// Canonicalizes `num / den`; `None` if `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let (num_shift, num_poly) = num.split_monomial();
        let (den_shift, den_poly) = den.split_monomial();
        let shift = num_shift - den_shift;
        if den_poly.len() == 1 {
            let c = den_poly[0].recip();
            let p = poly::scale(num_poly, &c);
            return Some(RatFunc {
                num: LaurentPoly::from_shifted_poly(shift, p),
                den: LaurentPoly::one(),
            });
        }
        let g = poly::gcd(num_poly, den_poly);
        let (mut n, mut d) = if g.len() > 1 {
            (
                poly::div_exact(num_poly, &g).expect("gcd divides numerator"),
                poly::div_exact(den_poly, &g).expect("gcd divides denominator"),
            )
        } else {
            (num_poly.to_vec(), den_poly.to_vec())
        };
        let lead = d.last().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            n = poly::scale(&n, &inv);
            poly::make_monic(&mut d);
        }
        Some(RatFunc {
            num: LaurentPoly::from_shifted_poly(shift, n),
            den: LaurentPoly::from_shifted_poly(0, d),
        })
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    /// `Some` exactly when the denominator is 1.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        self.den.is_one().then(|| self.num.clone())
    }

    pub fn substitute_power(&self, r: i64) -> crate::Result<Self> {
        let n = self.num.substitute_power(r)?;
        let d = self.den.substitute_power(r)?;
        Ok(Self::new(n, d).expect("substitution keeps denominators nonzero"))
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(x)? / d)
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        LaurentPoly::constant(c).into()
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        LaurentPoly::zero().into()
    }
    fn one() -> Self {
        LaurentPoly::one().into()
    }
    fn from_int(n: i64) -> Self {
        LaurentPoly::from_int(n).into()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }
    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let n = self.num.add(&other.num);
            if self.den.is_one() {
                return n.into();
            }
            return Self::new(n, self.den.clone()).unwrap();
        }
        let n = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::new(n, self.den.mul(&other.den)).unwrap()
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return self.num.mul(&other.num).into();
        }
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den)).unwrap()
    }
    fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn weight(&self) -> usize {
        self.num.weight() + self.den.weight()
    }
}

impl Domain for RatFunc {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.div(divisor)
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Self::new(self.den.clone(), self.num.clone())
    }
}

forward_ops!(RatFunc);

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn rf(n: &str, d: &str) -> RatFunc {
        RatFunc::new(lp(n), lp(d)).unwrap()
    }

    #[test]
    fn canonical_form_cancels_common_factors() {
        // (q^2 - 1) / (q - 1) = q + 1
        assert_eq!(rf("q^2 - 1", "q - 1"), RatFunc::from(lp("q + 1")));
        // q-powers move to the numerator, denominator becomes monic
        let x = rf("1", "2*q^3 + 2*q^2");
        assert_eq!(x.denom(), &lp("q + 1"));
        assert_eq!(x.numer(), &lp("1/2*q^-2"));
        assert!(RatFunc::new(lp("1"), LaurentPoly::zero()).is_none());
    }

    #[test]
    fn field_identities() {
        let a = rf("q - q^-1", "q + 3");
        let b = rf("2*q^2 + 1", "q - 5");
        let ab = a.mul(&b);
        assert_eq!(ab.div(&b).unwrap(), a);
        assert_eq!(a.add(&b).sub(&b), a);
        assert_eq!(a.mul(&a.inv().unwrap()), RatFunc::one());
        assert_eq!(RatFunc::zero().inv(), None);
    }

    #[test]
    fn evaluation() {
        let a = rf("q", "q - 2");
        assert_eq!(a.eval(&int(4)), Some(int(2)));
        assert_eq!(a.eval(&int(2)), None);
        assert_eq!(rf("1", "2*q").eval(&int(1)), Some(rat(1, 2)));
    }
}
