//! Laurent polynomials in `q` over Q.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{self, Poly};
use super::rational::{int, parse_rational};
use super::{Domain, Rational, Ring, TruncSeries};
use crate::error::{Error, Result};

/// Element of Q[q, q^-1].
///
/// Stored densely from the lowest exponent: `coeffs[k]` is the coefficient of
/// `q^(low + k)`. The first and last stored coefficients are nonzero, and
/// zero is the empty vector (with `low == 0`), so structural equality is
/// value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    fn normalized(mut low: i64, mut coeffs: Vec<Rational>) -> Self {
        poly::trim(&mut coeffs);
        let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros == coeffs.len() {
            return Self::default();
        }
        if lead_zeros > 0 {
            coeffs.drain(..lead_zeros);
            low += lead_zeros as i64;
        }
        LaurentPoly { low, coeffs }
    }

    pub fn constant(c: Rational) -> Self {
        Self::normalized(0, vec![c])
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        Self::normalized(exp, vec![c])
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    /// Sums the given `(exponent, coefficient)` terms.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let map: BTreeMap<i64, Rational> = terms.into_iter().fold(BTreeMap::new(), |mut m, (e, c)| {
            *m.entry(e).or_insert_with(Rational::zero) += c;
            m
        });
        let Some((&low, _)) = map.iter().next() else {
            return Self::default();
        };
        let high = *map.keys().next_back().unwrap();
        let mut coeffs = vec![Rational::zero(); (high - low + 1) as usize];
        for (e, c) in map {
            coeffs[(e - low) as usize] = c;
        }
        Self::normalized(low, coeffs)
    }

    /// Convenience for integer coefficients.
    pub fn from_int_terms(terms: &[(i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, int(c))))
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        let k = exp - self.low;
        if k < 0 || k >= self.coeffs.len() as i64 {
            Rational::zero()
        } else {
            self.coeffs[k as usize].clone()
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> + '_ {
        let low = self.low;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (low + k as i64, c))
    }

    pub fn low_degree(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    pub fn high_degree(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.is_empty() || (self.low == 0 && self.coeffs.len() == 1)
    }

    /// If `self = ±q^k`, returns `(negative, k)`. These are exactly the units
    /// of the ring up to rational scalars with absolute value one.
    pub fn as_signed_monomial(&self) -> Option<(bool, i64)> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let c = &self.coeffs[0];
        if c.is_one() {
            Some((false, self.low))
        } else if (-c).is_one() {
            Some((true, self.low))
        } else {
            None
        }
    }

    /// Units of Q[q, q^-1] are `c q^k` with `c` a nonzero rational.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Image under the field morphism `q -> q^r`.
    pub fn substitute_power(&self, r: i64) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroSubstitution);
        }
        Ok(Self::from_terms(self.terms().map(|(e, c)| (e * r, c.clone()))))
    }

    /// Expansion under `q = exp(h/2)`, truncated below `h^order`.
    pub fn to_series(&self, order: usize) -> Result<TruncSeries> {
        if order == 0 {
            return Err(Error::ZeroOrder);
        }
        // exp(e h / 2) = sum_k (e/2)^k / k! h^k
        let mut out = vec![Rational::zero(); order];
        for (e, c) in self.terms() {
            let half = Rational::new(BigInt::from(e), BigInt::from(2));
            let mut term = c.clone();
            for (k, slot) in out.iter_mut().enumerate() {
                if k > 0 {
                    term = term * &half / BigInt::from(k as i64);
                }
                *slot += &term;
            }
        }
        TruncSeries::new(out)
    }

    /// Value at a nonzero rational point.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        if x.is_zero() {
            return if self.low >= 0 { Some(self.coeff(0)) } else { None };
        }
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        Some(acc * pow_rational(x, self.low))
    }

    /// Splits `self = q^shift * p` with `p` an ordinary polynomial whose
    /// constant term is nonzero.
    pub(crate) fn split_monomial(&self) -> (i64, &[Rational]) {
        (self.low, &self.coeffs)
    }

    pub(crate) fn from_shifted_poly(shift: i64, p: Poly) -> Self {
        Self::normalized(shift, p)
    }

    fn scale_shift(&self, c: &Rational, shift: i64) -> Self {
        if c.is_zero() || self.coeffs.is_empty() {
            return Self::default();
        }
        LaurentPoly {
            low: self.low + shift,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn add_signed(&self, other: &Self, negate: bool) -> Self {
        if other.coeffs.is_empty() {
            return self.clone();
        }
        if self.coeffs.is_empty() {
            return if negate { Ring::neg(other) } else { other.clone() };
        }
        let low = self.low.min(other.low);
        let high = self.high_degree().unwrap().max(other.high_degree().unwrap());
        let mut coeffs = vec![Rational::zero(); (high - low + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + k] = c.clone();
        }
        for (k, c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.low - low) as usize + k];
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        Self::normalized(low, coeffs)
    }
}

fn pow_rational(x: &Rational, e: i64) -> Rational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow::pow(base, e.unsigned_abs() as usize)
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(Rational::one())
    }
    fn from_int(n: i64) -> Self {
        Self::constant(int(n))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }
    fn add(&self, other: &Self) -> Self {
        self.add_signed(other, false)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add_signed(other, true)
    }
    fn mul(&self, other: &Self) -> Self {
        match (self.coeffs.len(), other.coeffs.len()) {
            (0, _) | (_, 0) => Self::default(),
            (1, _) => other.scale_shift(&self.coeffs[0], self.low),
            (_, 1) => self.scale_shift(&other.coeffs[0], other.low),
            _ => Self::normalized(self.low + other.low, poly::mul(&self.coeffs, &other.coeffs)),
        }
    }
    fn neg(&self) -> Self {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn weight(&self) -> usize {
        self.coeffs.len() + self.coeffs.iter().map(|c| c.numer().bits() as usize).max().unwrap_or(0)
    }
}

impl Domain for LaurentPoly {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.coeffs.is_empty() {
            return None;
        }
        if self.coeffs.is_empty() {
            return Some(Self::default());
        }
        if divisor.coeffs.len() == 1 {
            return Some(self.scale_shift(&divisor.coeffs[0].recip(), -divisor.low));
        }
        let q = poly::div_exact(&self.coeffs, &divisor.coeffs)?;
        Some(Self::normalized(self.low - divisor.low, q))
    }
}

macro_rules! forward_ops {
    ($t:ty) => {
        impl std::ops::Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                $crate::algebra::Ring::add(&self, &rhs)
            }
        }
        impl<'a> std::ops::Add<&'a $t> for &'a $t {
            type Output = $t;
            fn add(self, rhs: &'a $t) -> $t {
                $crate::algebra::Ring::add(self, rhs)
            }
        }
        impl std::ops::Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                $crate::algebra::Ring::sub(&self, &rhs)
            }
        }
        impl<'a> std::ops::Sub<&'a $t> for &'a $t {
            type Output = $t;
            fn sub(self, rhs: &'a $t) -> $t {
                $crate::algebra::Ring::sub(self, rhs)
            }
        }
        impl std::ops::Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                $crate::algebra::Ring::mul(&self, &rhs)
            }
        }
        impl<'a> std::ops::Mul<&'a $t> for &'a $t {
            type Output = $t;
            fn mul(self, rhs: &'a $t) -> $t {
                $crate::algebra::Ring::mul(self, rhs)
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                $crate::algebra::Ring::neg(&self)
            }
        }
    };
}
pub(crate) use forward_ops;

forward_ops!(LaurentPoly);

fn write_coeff_term(f: &mut fmt::Formatter<'_>, c: &Rational, e: i64, first: bool) -> fmt::Result {
    let neg = c.is_negative();
    let abs = c.abs();
    match (first, neg) {
        (true, true) => f.write_str("-")?,
        (true, false) => {}
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
    }
    if e == 0 {
        return write!(f, "{abs}");
    }
    if !abs.is_one() {
        write!(f, "{abs}*")?;
    }
    match e {
        1 => f.write_str("q"),
        _ => write!(f, "q^{e}"),
    }
}

/// Terms in decreasing exponent order, e.g. `q - q^-1` or `-3/2*q^2 + 1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<_> = self.terms().collect();
        for (k, (e, c)) in terms.iter().rev().enumerate() {
            write_coeff_term(f, c, *e, k == 0)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Accepts sums of terms `c`, `c*q^e`, `c q^e`, `q`, `q^-2`, `q^{-2}`,
    /// `q^(-2)` with rational `c`; the output of `Display` parses back.
    fn from_str(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty Laurent polynomial".into()));
        }
        let chars: Vec<char> = compact.chars().collect();
        let mut pieces = Vec::new();
        let mut start = 0;
        for i in 1..chars.len() {
            let prev = chars[i - 1];
            if (chars[i] == '+' || chars[i] == '-') && !matches!(prev, '^' | '(' | '{' | '+' | '-') {
                pieces.push(chars[start..i].iter().collect::<String>());
                start = i;
            }
        }
        pieces.push(chars[start..].iter().collect::<String>());
        let mut terms = Vec::with_capacity(pieces.len());
        for piece in pieces {
            terms.push(parse_term(&piece)?);
        }
        Ok(Self::from_terms(terms))
    }
}

fn parse_term(piece: &str) -> Result<(i64, Rational)> {
    let bad = || Error::Parse(format!("bad Laurent term {piece:?}"));
    let (negative, body) = match piece.as_bytes().first() {
        Some(b'-') => (true, &piece[1..]),
        Some(b'+') => (false, &piece[1..]),
        _ => (false, piece),
    };
    if body.is_empty() {
        return Err(bad());
    }
    let (coeff, exp) = match body.find('q') {
        None => (parse_rational(body)?, 0),
        Some(pos) => {
            let coeff_text = body[..pos].trim_end_matches('*');
            let coeff = if coeff_text.is_empty() {
                Rational::one()
            } else {
                parse_rational(coeff_text)?
            };
            let rest = &body[pos + 1..];
            let exp = if rest.is_empty() {
                1
            } else {
                let e = rest.strip_prefix('^').ok_or_else(bad)?;
                let e = e
                    .strip_prefix('(')
                    .and_then(|e| e.strip_suffix(')'))
                    .or_else(|| e.strip_prefix('{').and_then(|e| e.strip_suffix('}')))
                    .unwrap_or(e);
                e.parse::<i64>().map_err(|_| bad())?
            };
            (coeff, exp)
        }
    };
    Ok((exp, if negative { -coeff } else { coeff }))
}

/// JSON form: object from exponent strings to rational strings,
/// `{"1":"1","-1":"-1"}` for `q - q^-1`.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let terms: Vec<_> = self.terms().collect();
        let mut map = serializer.serialize_map(Some(terms.len()))?;
        for (e, c) in terms {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: BTreeMap<String, String> = BTreeMap::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            let e: i64 = e.parse().map_err(|_| D::Error::custom(format!("bad exponent {e:?}")))?;
            let c = parse_rational(&c).map_err(D::Error::custom)?;
            terms.push((e, c));
        }
        Ok(Self::from_terms(terms))
    }
}
