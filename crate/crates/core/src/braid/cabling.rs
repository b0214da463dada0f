//! Parallel cabling `B_n -> B_{nr}`: every strand becomes `r` parallel strands.

use super::BraidWord;
use crate::error::{Error, Result};

/// Positive crossing of block `i` (strands `r(i-1)+1 ..= ri`) over block
/// `i+1`, as the `r^2`-letter word
/// `∏_{k=1..r} σ_{ri+k-1} σ_{ri+k-2} ⋯ σ_{r(i-1)+k}`.
pub fn block_crossing(i: usize, r: usize) -> Vec<i64> {
    let mut letters = Vec::with_capacity(r * r);
    for k in 1..=r {
        let top = r * i + k - 1;
        let bottom = r * (i - 1) + k;
        letters.extend((bottom..=top).rev().map(|x| x as i64));
    }
    letters
}

/// Letterwise image of `word` in `B_{nr}`. `σ_i^{-1}` maps to the inverse
/// word of the block crossing.
pub fn cable_word(word: &BraidWord, r: i64) -> Result<BraidWord> {
    if r < 1 {
        return Err(Error::InvalidCablingParameter(r));
    }
    let r = r as usize;
    let mut letters = Vec::with_capacity(word.len() * r * r);
    for &k in word.letters() {
        let block = block_crossing(k.unsigned_abs() as usize, r);
        if k > 0 {
            letters.extend(block);
        } else {
            letters.extend(block.iter().rev().map(|x| -x));
        }
    }
    BraidWord::new(word.strands() * r, letters)
}
