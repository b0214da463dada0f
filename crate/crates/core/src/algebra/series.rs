//! Power series in `h` over Q, truncated at a fixed order.

use std::fmt;

use num_bigint::BigInt;
use serde::{Serialize, Serializer};

use super::laurent::forward_ops;
use super::rational::is_negative;
use super::{Rational, Ring};
use crate::error::{Error, Result};

/// `coeffs[k]` is the coefficient of `h^k`, for `k < order`.
///
/// Constants produced by [`Ring::zero`], [`Ring::one`] and [`Ring::from_int`]
/// carry no truncation order (they are exact); combining two series keeps
/// the smaller order. Equality compares coefficients below the smaller order.
#[derive(Clone)]
pub struct TruncSeries {
    order: Option<usize>,
    // trailing zeros trimmed
    coeffs: Vec<Rational>,
}

impl TruncSeries {
    /// Series of order `coeffs.len()`.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::ZeroOrder);
        }
        let order = coeffs.len();
        Ok(Self::build(Some(order), coeffs))
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Result<Self> {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    /// `h` itself at the given order.
    pub fn h(order: usize) -> Result<Self> {
        let mut c = vec![Rational::zero(); order];
        if order > 1 {
            c[1] = Rational::one();
        }
        Self::new(c)
    }

    fn build(order: Option<usize>, mut coeffs: Vec<Rational>) -> Self {
        if let Some(n) = order {
            coeffs.truncate(n);
        }
        super::poly::trim(&mut coeffs);
        TruncSeries { order, coeffs }
    }

    /// Truncation order, `None` for an exact constant.
    pub fn order(&self) -> Option<usize> {
        self.order
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// All coefficients below the order (padded with zeros).
    pub fn coeffs(&self) -> Vec<Rational> {
        let n = self.order.unwrap_or(self.coeffs.len().max(1));
        (0..n).map(|k| self.coeff(k)).collect()
    }

    pub fn with_order(&self, order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        let n = self.order.map_or(order, |o| o.min(order));
        Ok(Self::build(Some(n), self.coeffs.clone()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::build(self.order, self.coeffs.iter().map(|x| x * c).collect())
    }

    fn join_order(&self, other: &Self) -> Option<usize> {
        match (self.order, other.order) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, None) => a,
            (None, b) => b,
        }
    }

    /// Truncated exponential; the constant term must vanish.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeff(0).is_zero() {
            return Err(Error::NonzeroConstantTerm(self.coeff(0).to_string()));
        }
        let Some(order) = self.order else {
            return if self.coeffs.is_empty() {
                Ok(Self::one())
            } else {
                Err(Error::UnboundedSeries)
            };
        };
        // x has valuation >= 1, so x^k vanishes for k >= order
        let mut out = Self::build(Some(order), vec![Rational::one()]);
        let mut power = out.clone();
        for k in 1..order {
            power = Ring::mul(&power, self).scale(&Rational::new(BigInt::from(1), BigInt::from(k as i64)));
            out = Ring::add(&out, &power);
        }
        Ok(out)
    }
}

/// Free-function form of [`TruncSeries::exp`].
pub fn series_exp(x: &TruncSeries) -> Result<TruncSeries> {
    x.exp()
}

impl PartialEq for TruncSeries {
    fn eq(&self, other: &Self) -> bool {
        let n = match self.join_order(other) {
            Some(n) => n,
            None => self.coeffs.len().max(other.coeffs.len()),
        };
        (0..n).all(|k| self.coeff(k) == other.coeff(k))
    }
}

impl Ring for TruncSeries {
    fn zero() -> Self {
        Self::build(None, Vec::new())
    }
    fn one() -> Self {
        Self::build(None, vec![Rational::one()])
    }
    fn from_int(n: i64) -> Self {
        Self::build(None, vec![Rational::from_integer(BigInt::from(n))])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Self::build(self.join_order(other), c)
    }
    fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n).map(|k| self.coeff(k) - other.coeff(k)).collect();
        Self::build(self.join_order(other), c)
    }
    fn mul(&self, other: &Self) -> Self {
        let order = self.join_order(other);
        let mut c = super::poly::mul(&self.coeffs, &other.coeffs);
        if let Some(n) = order {
            c.truncate(n);
        }
        Self::build(order, c)
    }
    fn neg(&self) -> Self {
        Self::build(self.order, self.coeffs.iter().map(|x| -x).collect())
    }
}

forward_ops!(TruncSeries);

/// `1 + 1/2*h + 1/8*h^2 + O(h^3)`.
impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = if is_negative(c) { -c } else { c.clone() };
            match (first, is_negative(c)) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match k {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    if k == 1 {
                        f.write_str("h")?;
                    } else {
                        write!(f, "h^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        if let Some(n) = self.order {
            write!(f, " + O(h^{n})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncSeries({self})")
    }
}

/// JSON form: array of rational strings for `h^0 .. h^(order-1)`.
impl Serialize for TruncSeries {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs().iter().map(|c| c.to_string()).collect();
        v.serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{int, rat};

    #[test]
    fn exp_examples() {
        let zero = TruncSeries::from_int_coeffs(&[0, 0, 0]).unwrap();
        assert_eq!(zero.exp().unwrap().coeffs(), vec![int(1), int(0), int(0)]);
        let h = TruncSeries::h(3).unwrap();
        assert_eq!(h.exp().unwrap().coeffs(), vec![int(1), int(1), rat(1, 2)]);
        // exp(h/2 + h^2/2) = 1 + h/2 + (1/8 + 1/2) h^2
        let x = TruncSeries::new(vec![int(0), rat(1, 2), rat(1, 2)]).unwrap();
        assert_eq!(x.exp().unwrap().coeffs(), vec![int(1), rat(1, 2), rat(5, 8)]);
    }

    #[test]
    fn exp_rejects_constant_term() {
        let x = TruncSeries::from_int_coeffs(&[1, 0]).unwrap();
        assert!(matches!(x.exp(), Err(Error::NonzeroConstantTerm(_))));
    }

    #[test]
    fn order_is_kept() {
        let a = TruncSeries::from_int_coeffs(&[1, 1, 1, 1]).unwrap();
        let b = TruncSeries::from_int_coeffs(&[1, 1]).unwrap();
        let p = Ring::mul(&a, &b);
        assert_eq!(p.order(), Some(2));
        assert_eq!(p.coeffs(), vec![int(1), int(2)]);
        assert_eq!(Ring::mul(&a, &TruncSeries::one()).order(), Some(4));
        assert_eq!(a.to_string(), "1 + h + h^2 + h^3 + O(h^4)");
    }
}
