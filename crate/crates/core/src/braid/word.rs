use std::fmt;

use serde::{Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};

/// A braid on `strands` strands as a word in the Artin generators.
///
/// Letter `k > 0` is `σ_k`, letter `-k` is `σ_k^{-1}`. Words are read left to
/// right and the corresponding matrices are multiplied in the same order,
/// so `eval(uv) = eval(u) eval(v)`. Words are not reduced automatically;
/// call [`BraidWord::free_reduce`] when a reduced form is needed.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::TooFewStrands { min: 1, got: 0 });
        }
        if let Some(&bad) = letters
            .iter()
            .find(|&&k| k == 0 || k.unsigned_abs() as usize >= strands)
        {
            return Err(Error::GeneratorOutOfRange { index: bad, strands });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord {
            strands: strands.max(1),
            letters: Vec::new(),
        }
    }

    /// `σ_i^{±1}`, given as a signed index.
    pub fn generator(strands: usize, letter: i64) -> Result<Self> {
        Self::new(strands, vec![letter])
    }

    /// Parses whitespace-separated signed integers, e.g. `"2 1 -3"`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad braid letter {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_same_strands(&self, other: &Self) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                expected: self.strands,
                got: other.strands,
            });
        }
        Ok(())
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Self) -> Result<Self> {
        self.check_same_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn product<'a>(strands: usize, words: impl IntoIterator<Item = &'a BraidWord>) -> Result<Self> {
        words
            .into_iter()
            .try_fold(Self::identity(strands), |acc, w| acc.concat(w))
    }

    pub fn inverse(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|k| -k).collect(),
        }
    }

    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// `x y x^{-1} y^{-1}`.
    pub fn commutator(x: &Self, y: &Self) -> Result<Self> {
        Self::product(x.strands, [x, y, &x.inverse(), &y.inverse()])
    }

    /// Removes adjacent `k, -k` pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        BraidWord {
            strands: self.strands,
            letters: free_reduce_letters(&self.letters),
        }
    }

    /// Sum of the letter signs.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|k| k.signum()).sum()
    }

    /// The permutation `π` (0-based, `perm[j] = π(j)`) obtained by composing
    /// the transpositions `s_{|k|}` in word order, `π = s_{k_1} ∘ s_{k_2} ∘ …`.
    ///
    /// With this convention the permutation matrix of `π` is the product of
    /// the letters' permutation matrices taken in word order, i.e. the `q = 1`
    /// image of the word.
    pub fn underlying_permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        // right-multiplying by s_k swaps the values at positions k-1, k
        for &k in &self.letters {
            let i = k.unsigned_abs() as usize;
            perm.swap(i - 1, i);
        }
        perm
    }

    pub fn is_pure(&self) -> bool {
        self.underlying_permutation().iter().enumerate().all(|(i, &p)| i == p)
    }
}

pub(crate) fn free_reduce_letters(letters: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = Vec::with_capacity(letters.len());
    for &k in letters {
        if out.last() == Some(&-k) {
            out.pop();
        } else {
            out.push(k);
        }
    }
    out
}

/// Serializes as the bare letter array; the strand count travels separately.
impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.letters.serialize(serializer)
    }
}

impl BraidWord {
    /// Reads a JSON integer array as a word on `strands` strands.
    pub fn from_json(strands: usize, value: &Value) -> Result<Self> {
        let letters = value
            .as_array()
            .ok_or_else(|| Error::Parse("expected an array of letters".into()))?
            .iter()
            .map(|x| {
                x.as_i64()
                    .ok_or_else(|| Error::Parse(format!("letter {x} is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }
}

/// Signed integers separated by single spaces; the empty word prints as "".
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn validation() {
        assert!(BraidWord::new(3, vec![1, -2]).is_ok());
        assert_eq!(
            BraidWord::new(3, vec![3]),
            Err(Error::GeneratorOutOfRange { index: 3, strands: 3 })
        );
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(BraidWord::parse(3, "1 x").is_err());
        assert!(BraidWord::new(0, vec![]).is_err());
    }

    #[test]
    fn permutation_examples() {
        // half twist on three strands reverses them
        assert_eq!(w(3, "1 2 1").underlying_permutation(), vec![2, 1, 0]);
        assert_eq!(w(4, "").underlying_permutation(), vec![0, 1, 2, 3]);
        assert!(w(2, "1 1").is_pure());
        assert!(!w(2, "1").is_pure());
    }

    #[test]
    fn permutation_is_multiplicative() {
        let a = w(4, "1 2 -3");
        let b = w(4, "3 1 2 2");
        let (pa, pb) = (a.underlying_permutation(), b.underlying_permutation());
        let pab = a.concat(&b).unwrap().underlying_permutation();
        // pi_{ab} = pi_a ∘ pi_b
        let composed: Vec<usize> = (0..4).map(|j| pa[pb[j]]).collect();
        assert_eq!(pab, composed);
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(w(3, "1 1 -2").exponent_sum(), 1);
        let c = BraidWord::commutator(&w(3, "1 2"), &w(3, "2 2 -1")).unwrap();
        assert_eq!(c.exponent_sum(), 0);
        assert_eq!(c.free_reduce().exponent_sum(), 0);
    }

    #[test]
    fn reduction_and_display() {
        assert_eq!(w(3, "1 2 -2 -1 2").free_reduce(), w(3, "2"));
        assert_eq!(w(3, "1 -2").to_string(), "1 -2");
        assert_eq!(BraidWord::identity(3).to_string(), "");
        assert_eq!(w(3, "1 2").inverse(), w(3, "-2 -1"));
        assert_eq!(w(3, "1 2").pow(-2), w(3, "-2 -1 -2 -1"));
        assert!(w(3, "1").concat(&w(4, "1")).is_err());
    }

    #[test]
    fn json_is_integer_array() {
        let word = w(3, "2 -1");
        let v = serde_json::to_value(&word).unwrap();
        assert_eq!(v, serde_json::json!([2, -1]));
        assert_eq!(BraidWord::from_json(3, &v).unwrap(), word);
        assert!(BraidWord::from_json(2, &v).is_err());
        assert!(BraidWord::from_json(3, &serde_json::json!([1.5])).is_err());
    }
}
