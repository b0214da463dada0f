//! Artin's faithful action of `B_n` on the free group `F_n`.
//!
//! `σ_i` acts by `x_i ↦ x_i x_{i+1} x_i^{-1}`, `x_{i+1} ↦ x_i`, fixing the
//! other generators. Because the action is faithful, a braid word is trivial
//! exactly when it fixes every generator.

use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::word::free_reduce_letters;
use super::BraidWord;
use crate::algebra::modular::Fp;
use crate::algebra::{Field, Ring};

/// Freely reduced word in `x_1, …, x_rank`; letter `-j` is `x_j^{-1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FreeGroupWord {
    rank: usize,
    letters: Vec<i64>,
}

impl FreeGroupWord {
    pub fn new(rank: usize, letters: &[i64]) -> Self {
        debug_assert!(letters.iter().all(|&x| x != 0 && x.unsigned_abs() as usize <= rank));
        FreeGroupWord {
            rank,
            letters: free_reduce_letters(letters),
        }
    }

    pub fn generator(rank: usize, j: usize) -> Self {
        FreeGroupWord {
            rank,
            letters: vec![j as i64],
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
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

    pub fn inverse(&self) -> Self {
        FreeGroupWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|x| -x).collect(),
        }
    }

    /// Reduced product; both factors are reduced so cancellation only
    /// happens at the junction.
    pub fn mul(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        let mut rest = other.letters.as_slice();
        while let (Some(&a), Some(&b)) = (letters.last(), rest.first()) {
            if a != -b {
                break;
            }
            letters.pop();
            rest = &rest[1..];
        }
        letters.extend_from_slice(rest);
        FreeGroupWord {
            rank: self.rank,
            letters,
        }
    }
}

impl fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, &x) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            if x > 0 {
                write!(f, "x{x}")?;
            } else {
                write!(f, "x{}^-1", -x)?;
            }
        }
        Ok(())
    }
}

/// Images `φ_w(x_1), …, φ_w(x_n)` of the free generators, where
/// `φ_{uv} = φ_u ∘ φ_v`.
pub fn artin_action(word: &BraidWord) -> Vec<FreeGroupWord> {
    let n = word.strands();
    let mut images: Vec<FreeGroupWord> = (1..=n).map(|j| FreeGroupWord::generator(n, j)).collect();
    // φ_{w σ} = φ_w ∘ σ, so only the images of x_i, x_{i+1} change
    for &k in word.letters() {
        let i = k.unsigned_abs() as usize - 1;
        let (xi, xj) = (images[i].clone(), images[i + 1].clone());
        if k > 0 {
            images[i] = xi.mul(&xj).mul(&xi.inverse());
            images[i + 1] = xi;
        } else {
            // σ^{-1}: x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}^{-1} x_i x_{i+1}
            images[i] = xj.clone();
            images[i + 1] = xj.inverse().mul(&xi).mul(&xj);
        }
    }
    images
}

/// 2x2 matrix over F_p with determinant one, row-major.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct Sl2([Fp; 4]);

impl Sl2 {
    fn random(rng: &mut ChaCha8Rng) -> Self {
        let a = Fp::random_nonzero(rng);
        let b = Fp::random_nonzero(rng);
        let c = Fp::random_nonzero(rng);
        let d = Fp::one().add(&b.mul(&c)).mul(&a.inv().expect("a is nonzero"));
        Sl2([a, b, c, d])
    }

    fn mul(&self, o: &Self) -> Self {
        let [a, b, c, d] = self.0;
        let [e, f, g, h] = o.0;
        Sl2([
            a.mul(&e).add(&b.mul(&g)),
            a.mul(&f).add(&b.mul(&h)),
            c.mul(&e).add(&d.mul(&g)),
            c.mul(&f).add(&d.mul(&h)),
        ])
    }

    fn inverse(&self) -> Self {
        let [a, b, c, d] = self.0;
        Sl2([d, b.neg(), c.neg(), a])
    }
}

/// Pushes the action through a random homomorphism `F_n -> SL(2, F_p)`.
///
/// Tracks `ψ(φ_prefix(x_j))` with O(1) work per letter, whereas the free
/// words themselves can grow exponentially with the braid length. Returns
/// true when some generator image differs, which proves `φ_w(x_j) ≠ x_j`.
fn homomorphic_image_moves_a_generator(word: &BraidWord, rng: &mut ChaCha8Rng) -> bool {
    let start: Vec<Sl2> = (0..word.strands()).map(|_| Sl2::random(rng)).collect();
    let mut images = start.clone();
    for &k in word.letters() {
        let i = k.unsigned_abs() as usize - 1;
        let (xi, xj) = (images[i], images[i + 1]);
        if k > 0 {
            images[i] = xi.mul(&xj).mul(&xi.inverse());
            images[i + 1] = xi;
        } else {
            images[i] = xj;
            images[i + 1] = xj.inverse().mul(&xi).mul(&xj);
        }
    }
    images != start
}

const SCREEN_ROUNDS: usize = 4;
const SCREEN_SEED: u64 = 0x5eed_b2a1d;

/// True iff `word` represents the identity braid.
///
/// A `false` answer is certified by a homomorphic image of the action in
/// which some generator moves; a `true` answer by the exact free-group
/// computation.
pub fn artin_action_is_trivial(word: &BraidWord) -> bool {
    let mut rng = ChaCha8Rng::seed_from_u64(SCREEN_SEED);
    for _ in 0..SCREEN_ROUNDS {
        if homomorphic_image_moves_a_generator(word, &mut rng) {
            return false;
        }
    }
    artin_action(word)
        .iter()
        .enumerate()
        .all(|(j, img)| img.letters() == [j as i64 + 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn trivial_words() {
        assert!(artin_action_is_trivial(&w(2, "1 -1")));
        assert!(artin_action_is_trivial(&w(3, "1 2 1 -2 -1 -2")));
        assert!(artin_action_is_trivial(&w(4, "1 3 -1 -3")));
        assert!(artin_action_is_trivial(&w(3, "")));
    }

    #[test]
    fn nontrivial_words() {
        assert!(!artin_action_is_trivial(&w(2, "1")));
        assert!(!artin_action_is_trivial(&w(3, "1 2 -1 -2")));
        // full twist is central but not trivial
        assert!(!artin_action_is_trivial(&w(3, "1 2 1 2 1 2")));
    }

    #[test]
    fn generator_action() {
        let imgs = artin_action(&w(2, "1"));
        assert_eq!(imgs[0].letters(), &[1, 2, -1]);
        assert_eq!(imgs[1].letters(), &[1]);
        let imgs = artin_action(&w(2, "-1"));
        assert_eq!(imgs[0].letters(), &[2]);
        assert_eq!(imgs[1].letters(), &[-2, 1, 2]);
        assert_eq!(imgs[1].to_string(), "x2^-1 x1 x2");
    }

    #[test]
    fn screen_agrees_with_exact_action() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for text in ["1 2 -1 -2", "1 1", "2 1 2 -1 -2 -1"] {
            let word = w(3, text);
            let exact_trivial = artin_action(&word)
                .iter()
                .enumerate()
                .all(|(j, img)| img.letters() == [j as i64 + 1]);
            assert_eq!(
                homomorphic_image_moves_a_generator(&word, &mut rng),
                !exact_trivial,
                "{text}"
            );
        }
    }

    #[test]
    fn free_group_product_cancels() {
        let a = FreeGroupWord::new(3, &[1, 2, -3]);
        let b = FreeGroupWord::new(3, &[3, -2, 1]);
        assert_eq!(a.mul(&b).letters(), &[1, 1]);
        assert!(a.mul(&a.inverse()).is_empty());
    }
}
