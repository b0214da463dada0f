//! Dense matrices over exact coefficients.

use std::fmt;
use std::ops::{Index, IndexMut};

use serde_json::Value;

use super::rational::parse_rational;
use super::{Domain, Field, LaurentPoly, RatFunc, Rational, Ring, TruncSeries};
use crate::error::{Error, Result};

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &T)> + '_ {
        let cols = self.cols;
        self.data
            .iter()
            .enumerate()
            .map(move |(k, x)| ((k / cols, k % cols), x))
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<U, E>(&self, f: impl FnMut(&T) -> std::result::Result<U, E>) -> std::result::Result<Matrix<U>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<std::result::Result<_, E>>()?,
        })
    }

    pub fn into_rows(self) -> Vec<Vec<T>> {
        let cols = self.cols.max(1);
        let mut it = self.data.into_iter();
        (0..self.rows).map(|_| it.by_ref().take(cols).collect()).collect()
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn submatrix(&self, row0: usize, col0: usize, rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |i, j| self[(row0 + i, col0 + j)].clone())
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        &mut self.data[i * self.cols + j]
    }
}

impl<T: Ring> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, T::one())
    }

    pub fn scalar(n: usize, c: T) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { c.clone() } else { T::zero() })
    }

    /// Permutation matrix sending `e_j` to `e_{perm[j]}` (0-based).
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (j, &i) in perm.iter().enumerate() {
            m[(i, j)] = T::one();
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && self
                .entries()
                .all(|((i, j), x)| if i == j { x.is_one() } else { x.is_zero() })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut out.data[i * other.cols + j];
                    *slot = slot.add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.add(b))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a.sub(b))
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul(c))
    }

    /// `self + c * Id`.
    pub fn shift_diagonal(&self, c: &T) -> Self {
        let mut out = self.clone();
        for i in 0..self.rows.min(self.cols) {
            out[(i, i)] = out[(i, i)].add(c);
        }
        out
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| acc.add(&self[(i, i)]))
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.checked_mul(other)?.checked_sub(&other.checked_mul(self)?)
    }

    /// Block-diagonal matrix with the given blocks.
    pub fn direct_sum(blocks: &[Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for ((i, j), x) in b.entries() {
                out[(r0 + i, c0 + j)] = x.clone();
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// First entry where `self` and `other` differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0));
        }
        self.entries()
            .zip(&other.data)
            .find(|((_, a), b)| a != b)
            .map(|((pos, _), _)| pos)
    }
}

impl<T: Domain> Matrix<T> {
    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<T> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(T::one());
        }
        let mut a = self.clone();
        let mut negate = false;
        let mut prev = T::one();
        for k in 0..n - 1 {
            let Some(p) = (k..n)
                .filter(|&i| !a[(i, k)].is_zero())
                .min_by_key(|&i| a[(i, k)].weight())
            else {
                return Ok(T::zero());
            };
            if p != k {
                for j in 0..n {
                    a.data.swap(p * n + j, k * n + j);
                }
                negate = !negate;
            }
            let pivot = a[(k, k)].clone();
            for i in k + 1..n {
                let lead = a[(i, k)].clone();
                for j in k + 1..n {
                    let mut x = pivot.mul(&a[(i, j)]);
                    if !lead.is_zero() && !a[(k, j)].is_zero() {
                        x = x.sub(&lead.mul(&a[(k, j)]));
                    }
                    a[(i, j)] = x.div_exact(&prev).expect("Bareiss division is exact");
                }
                a[(i, k)] = T::zero();
            }
            prev = pivot;
        }
        let det = a[(n - 1, n - 1)].clone();
        Ok(if negate { det.neg() } else { det })
    }
}

impl<T: Field> Matrix<T> {
    /// Gauss–Jordan inverse; a singular input reports its (zero) determinant.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for k in 0..n {
            let Some(p) = (k..n)
                .filter(|&i| !a[(i, k)].is_zero())
                .min_by_key(|&i| a[(i, k)].weight())
            else {
                return Err(Error::Singular(self.determinant()?.to_string()));
            };
            if p != k {
                for j in 0..n {
                    a.data.swap(p * n + j, k * n + j);
                    inv.data.swap(p * n + j, k * n + j);
                }
            }
            let pinv = a[(k, k)].inv().expect("nonzero pivot");
            for j in 0..n {
                a[(k, j)] = a[(k, j)].mul(&pinv);
                inv[(k, j)] = inv[(k, j)].mul(&pinv);
            }
            for i in 0..n {
                if i == k || a[(i, k)].is_zero() {
                    continue;
                }
                let f = a[(i, k)].clone();
                for j in 0..n {
                    if !a[(k, j)].is_zero() {
                        a[(i, j)] = a[(i, j)].sub(&f.mul(&a[(k, j)]));
                    }
                    if !inv[(k, j)].is_zero() {
                        inv[(i, j)] = inv[(i, j)].sub(&f.mul(&inv[(k, j)]));
                    }
                }
            }
        }
        Ok(inv)
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<Vec<T>> = self.clone().into_rows();
        self.cols - super::linsolve::nullspace(&rows, self.cols).len()
    }
}

impl Matrix<LaurentPoly> {
    pub fn to_ratfunc(&self) -> Matrix<RatFunc> {
        self.map(|x| RatFunc::from(x.clone()))
    }

    /// Inverse over Q(q).
    pub fn inverse_over_fractions(&self) -> Result<Matrix<RatFunc>> {
        self.to_ratfunc().inverse()
    }

    /// Inverse when it has Laurent polynomial entries (determinant a unit).
    pub fn laurent_inverse(&self) -> Result<Matrix<LaurentPoly>> {
        let inv = self.inverse_over_fractions()?;
        inv.to_laurent().ok_or_else(|| {
            Error::Singular(format!(
                "{} (not a unit of the Laurent ring)",
                self.determinant().map(|d| d.to_string()).unwrap_or_default()
            ))
        })
    }

    pub fn substitute_power(&self, r: i64) -> Result<Self> {
        self.try_map(|x| x.substitute_power(r))
    }

    pub fn eval_at(&self, x: &Rational) -> Option<Matrix<Rational>> {
        self.try_map(|p| p.eval(x).ok_or(())).ok()
    }

    pub fn to_series(&self, order: usize) -> Result<Matrix<TruncSeries>> {
        self.try_map(|p| p.to_series(order))
    }
}

impl Matrix<RatFunc> {
    pub fn to_laurent(&self) -> Option<Matrix<LaurentPoly>> {
        self.try_map(|x| x.to_laurent().ok_or(())).ok()
    }
}

impl Matrix<Rational> {
    pub fn to_laurent(&self) -> Matrix<LaurentPoly> {
        self.map(|c| LaurentPoly::constant(c.clone()))
    }

    pub fn to_ratfunc(&self) -> Matrix<RatFunc> {
        self.map(|c| RatFunc::from(c.clone()))
    }
}

impl Matrix<TruncSeries> {
    /// Matrix of `h^k` coefficients.
    pub fn coefficient(&self, k: usize) -> Matrix<Rational> {
        self.map(|s| s.coeff(k))
    }
}

impl<T: Ring> std::ops::Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.checked_mul(rhs).expect("matrix dimensions agree")
    }
}

impl<T: Ring> std::ops::Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.checked_add(rhs).expect("matrix dimensions agree")
    }
}

impl<T: Ring> std::ops::Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.checked_sub(rhs).expect("matrix dimensions agree")
    }
}

/// Aligned columns, one row per line.
impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(|x| x.to_string()).collect();
        let widths: Vec<usize> = (0..self.cols)
            .map(|j| {
                (0..self.rows)
                    .map(|i| cells[i * self.cols + j].len())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        for i in 0..self.rows {
            f.write_str("[ ")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str("  ")?;
                }
                write!(f, "{:>w$}", cells[i * self.cols + j], w = widths[j])?;
            }
            f.write_str(" ]")?;
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

/// Coefficients with a JSON encoding; matrices encode as row-major nested
/// arrays of these.
pub trait JsonCoeff: Sized {
    fn to_json(&self) -> Value;
    fn from_json(value: &Value) -> Result<Self>;
}

fn json_err(e: impl fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

impl JsonCoeff for Rational {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(value: &Value) -> Result<Self> {
        match value {
            Value::String(s) => parse_rational(s),
            Value::Number(n) => parse_rational(&n.to_string()),
            other => Err(json_err(format!("expected rational string, got {other}"))),
        }
    }
}

impl JsonCoeff for LaurentPoly {
    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("Laurent polynomials serialize")
    }
    fn from_json(value: &Value) -> Result<Self> {
        serde_json::from_value(value.clone()).map_err(json_err)
    }
}

impl JsonCoeff for RatFunc {
    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("rational functions serialize")
    }
    fn from_json(value: &Value) -> Result<Self> {
        serde_json::from_value(value.clone()).map_err(json_err)
    }
}

impl JsonCoeff for TruncSeries {
    fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("series serialize")
    }
    fn from_json(value: &Value) -> Result<Self> {
        let items = value
            .as_array()
            .ok_or_else(|| json_err("expected array of coefficients"))?;
        TruncSeries::new(items.iter().map(Rational::from_json).collect::<Result<_>>()?)
    }
}

impl<T: JsonCoeff> Matrix<T> {
    pub fn to_json(&self) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| Value::Array(self.row(i).iter().map(JsonCoeff::to_json).collect()))
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let rows = value.as_array().ok_or_else(|| json_err("expected array of rows"))?;
        let rows = rows
            .iter()
            .map(|r| {
                r.as_array()
                    .ok_or_else(|| json_err("expected row array"))?
                    .iter()
                    .map(T::from_json)
                    .collect::<Result<Vec<T>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_rows(rows)
    }
}
