//! Dense univariate polynomials over Q as ascending coefficient vectors.
//! Zero is the empty vector; otherwise the last coefficient is nonzero.

use num_traits::{One, Zero};

use super::Rational;

pub(crate) type Poly = Vec<Rational>;

pub(crate) fn trim(p: &mut Poly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[Rational]) -> Option<usize> {
    p.len().checked_sub(1)
}

pub(crate) fn mul(a: &[Rational], b: &[Rational]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &[Rational], c: &Rational) -> Poly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

/// Euclidean division; panics on a zero divisor.
pub(crate) fn divrem(a: &[Rational], b: &[Rational]) -> (Poly, Poly) {
    let db = degree(b).expect("polynomial division by zero");
    let mut rem: Poly = a.to_vec();
    trim(&mut rem);
    if rem.len() <= db {
        return (Vec::new(), rem);
    }
    let lead_inv = b[db].recip();
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() > db {
        let shift = rem.len() - 1 - db;
        let c = &rem[rem.len() - 1] * &lead_inv;
        for (k, bk) in b.iter().enumerate() {
            if !bk.is_zero() {
                let t = &c * bk;
                rem[shift + k] -= t;
            }
        }
        quot[shift] = c;
        // leading term cancels exactly
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

pub(crate) fn div_exact(a: &[Rational], b: &[Rational]) -> Option<Poly> {
    if b.is_empty() {
        return None;
    }
    let (q, r) = divrem(a, b);
    r.is_empty().then_some(q)
}

pub(crate) fn make_monic(p: &mut Poly) {
    if let Some(lead) = p.last().cloned() {
        if !lead.is_one() {
            let inv = lead.recip();
            for c in p.iter_mut() {
                *c *= &inv;
            }
        }
    }
}

/// Monic gcd (zero when both inputs are zero).
pub(crate) fn gcd(a: &[Rational], b: &[Rational]) -> Poly {
    let mut x: Poly = a.to_vec();
    let mut y: Poly = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![Rational::one()];
        }
        let (_, mut r) = divrem(&x, &y);
        make_monic(&mut r);
        x = y;
        y = r;
    }
    make_monic(&mut x);
    x
}
