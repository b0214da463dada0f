//! Pure braids: the standard generators and linking numbers.

use std::collections::BTreeMap;

use rand::Rng;

use super::BraidWord;
use crate::error::{Error, Result};

/// Linking numbers `lk_{ab}` of a pure braid, keyed by 1-based strand pairs
/// `(a, b)` with `a < b`. Every pair is present (zeros included).
pub type LinkingNumbers = BTreeMap<(usize, usize), i64>;

/// `ξ_{ij} = (σ_{j-1} ⋯ σ_{i+1}) σ_i^2 (σ_{i+1}^{-1} ⋯ σ_{j-1}^{-1})`.
pub fn pure_braid_generator(strands: usize, i: usize, j: usize) -> Result<BraidWord> {
    if i == 0 || i >= j || j > strands {
        return Err(Error::InvalidChord { i, j, strands });
    }
    let mut letters: Vec<i64> = ((i + 1)..j).rev().map(|k| k as i64).collect();
    letters.extend([i as i64, i as i64]);
    letters.extend(((i + 1)..j).map(|k| -(k as i64)));
    BraidWord::new(strands, letters)
}

/// Half the signed number of crossings between each pair of strands.
///
/// Strands are named by their starting positions (1-based). Fails on words
/// that are not pure.
pub fn linking_numbers(word: &BraidWord) -> Result<LinkingNumbers> {
    if !word.is_pure() {
        return Err(Error::NotPure(word.underlying_permutation()));
    }
    let n = word.strands();
    let mut crossings = vec![vec![0i64; n]; n];
    let mut at: Vec<usize> = (0..n).collect();
    for &k in word.letters() {
        let p = k.unsigned_abs() as usize;
        let (a, b) = (at[p - 1], at[p]);
        let (lo, hi) = (a.min(b), a.max(b));
        crossings[lo][hi] += k.signum();
        at.swap(p - 1, p);
    }
    let mut out = LinkingNumbers::new();
    for (a, row) in crossings.iter().enumerate() {
        for (b, &c) in row.iter().enumerate().skip(a + 1) {
            // strands of a pure braid cross an even number of times
            debug_assert_eq!(c % 2, 0);
            out.insert((a + 1, b + 1), c / 2);
        }
    }
    Ok(out)
}

/// Random pure braid of length at most `max_len`: a product of conjugates
/// `u ξ_ij^{±1} u^{-1}` with random short `u`.
pub fn random_pure_word<R: Rng + ?Sized>(strands: usize, max_len: usize, rng: &mut R) -> Result<BraidWord> {
    if strands < 2 {
        return Err(Error::TooFewStrands { min: 2, got: strands });
    }
    let mut letters: Vec<i64> = Vec::new();
    // a failed fit ends the word, so lengths vary
    loop {
        let i = rng.gen_range(1..strands);
        let j = rng.gen_range(i + 1..=strands);
        let mut xi = pure_braid_generator(strands, i, j)?;
        if rng.gen_bool(0.5) {
            xi = xi.inverse();
        }
        let conj_len = rng.gen_range(0..=2usize);
        let u: Vec<i64> = (0..conj_len)
            .map(|_| {
                let k = rng.gen_range(1..strands as i64);
                if rng.gen_bool(0.5) {
                    k
                } else {
                    -k
                }
            })
            .collect();
        if letters.len() + xi.len() + 2 * u.len() > max_len {
            break;
        }
        letters.extend(&u);
        letters.extend(xi.letters());
        letters.extend(u.iter().rev().map(|x| -x));
    }
    BraidWord::new(strands, letters)
}
