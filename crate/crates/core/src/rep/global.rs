//! Representations of `B_n` given by Laurent polynomial matrices.

use std::fmt;

use crate::algebra::modular::Fp;
use crate::algebra::{LaurentPoly, Matrix, Rational, Ring};
use crate::braid::{cable_word, BraidWord};
use crate::error::{Error, Result};

/// Images of the Artin generators `σ_1, …, σ_{n-1}` (with cached inverses).
///
/// Construction checks that every image is invertible over the Laurent ring
/// and that the braid relations hold exactly.
#[derive(Clone, PartialEq, Eq)]
pub struct GeneratorRep {
    strands: usize,
    dim: usize,
    images: Vec<Matrix<LaurentPoly>>,
    inverses: Vec<Matrix<LaurentPoly>>,
    label: String,
}

impl GeneratorRep {
    pub fn new(strands: usize, images: Vec<Matrix<LaurentPoly>>, label: impl Into<String>) -> Result<Self> {
        let rep = Self::new_unchecked(strands, images, label)?;
        if let Some((i, j)) = rep.braid_relation_failure() {
            return Err(Error::DimensionMismatch(format!(
                "images of σ_{i} and σ_{j} violate the braid relations"
            )));
        }
        Ok(rep)
    }

    /// Like [`GeneratorRep::new`] without the braid relation check (used for
    /// constructions that preserve the relations by design).
    fn new_unchecked(strands: usize, images: Vec<Matrix<LaurentPoly>>, label: impl Into<String>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands { min: 2, got: strands });
        }
        if images.len() != strands - 1 {
            return Err(Error::DimensionMismatch(format!(
                "{} generator images for {strands} strands",
                images.len()
            )));
        }
        let dim = images[0].rows();
        if images.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch(
                "generator images must be square of equal size".into(),
            ));
        }
        let inverses = images.iter().map(Matrix::laurent_inverse).collect::<Result<Vec<_>>>()?;
        Ok(GeneratorRep {
            strands,
            dim,
            images,
            inverses,
            label: label.into(),
        })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Image of `σ_i` (1-based).
    pub fn image(&self, i: usize) -> &Matrix<LaurentPoly> {
        &self.images[i - 1]
    }

    pub fn images(&self) -> &[Matrix<LaurentPoly>] {
        &self.images
    }

    /// Image of `σ_{|k|}^{sign k}`.
    pub fn letter_image(&self, k: i64) -> &Matrix<LaurentPoly> {
        let i = k.unsigned_abs() as usize - 1;
        if k > 0 {
            &self.images[i]
        } else {
            &self.inverses[i]
        }
    }

    /// First pair `(i, j)` of generators whose images violate a braid
    /// relation.
    pub fn braid_relation_failure(&self) -> Option<(usize, usize)> {
        for i in 1..self.strands {
            for j in i + 1..self.strands {
                let (a, b) = (self.image(i), self.image(j));
                let holds = if j == i + 1 {
                    (&(a * b) * a) == (&(b * a) * b)
                } else {
                    a * b == b * a
                };
                if !holds {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Image of a braid word, multiplying letter images in word order.
    pub fn eval_word(&self, word: &BraidWord) -> Result<Matrix<LaurentPoly>> {
        if word.strands() != self.strands {
            return Err(Error::StrandMismatch {
                expected: self.strands,
                got: word.strands(),
            });
        }
        let reduced = word.free_reduce();
        let mut acc = Matrix::identity(self.dim);
        for &k in reduced.letters() {
            acc = acc.checked_mul(self.letter_image(k))?;
        }
        Ok(acc)
    }

    /// Image of a word with `q` evaluated at a residue modulo the screening
    /// prime; `None` if some entry cannot be reduced.
    pub fn eval_word_mod(&self, word: &BraidWord, q: Fp) -> Option<Matrix<Fp>> {
        let mut acc = Matrix::identity(self.dim);
        for &k in word.free_reduce().letters() {
            acc = acc.checked_mul(&self.letter_image(k).eval_mod(q)?).ok()?;
        }
        Some(acc)
    }

    /// Generator images at `q = 1`.
    pub fn specialize_at_one(&self) -> Vec<Matrix<Rational>> {
        let one = Rational::one();
        self.images
            .iter()
            .map(|m| m.eval_at(&one).expect("q = 1 is never a pole"))
            .collect()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }
}

impl fmt::Debug for GeneratorRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GeneratorRep {} (B_{}, dim {})", self.label, self.strands, self.dim)?;
        for (i, m) in self.images.iter().enumerate() {
            writeln!(f, "σ_{} ↦\n{m}", i + 1)?;
        }
        Ok(())
    }
}

fn check_strands(n: usize) -> Result<()> {
    if n < 2 {
        Err(Error::TooFewStrands { min: 2, got: n })
    } else {
        Ok(())
    }
}

/// `q I_{k-1} ⊕ B ⊕ q I_{n-k-1}` with the 2x2 block `B` at rows `k-1, k`
/// (0-based).
fn block_generator(n: usize, k: usize, diag: &LaurentPoly, block: [[LaurentPoly; 2]; 2]) -> Matrix<LaurentPoly> {
    let mut m = Matrix::scalar(n, diag.clone());
    for (a, row) in block.into_iter().enumerate() {
        for (b, x) in row.into_iter().enumerate() {
            m[(k - 1 + a, k - 1 + b)] = x;
        }
    }
    m
}

/// The Burau representation:
/// `σ_k ↦ q I_{k-1} ⊕ [[q - q^{-1}, q], [q^{-1}, 0]] ⊕ q I_{n-k-1}`.
pub fn burau_rep(n: usize) -> Result<GeneratorRep> {
    check_strands(n)?;
    let q = LaurentPoly::q();
    let qi = LaurentPoly::q_pow(-1);
    let images = (1..n)
        .map(|k| block_generator(n, k, &q, [[&q - &qi, q.clone()], [qi.clone(), LaurentPoly::zero()]]))
        .collect();
    GeneratorRep::new_unchecked(n, images, "R_bur")
}

/// The extended permutation representation:
/// `σ_k ↦ I_{k-1} ⊕ [[0, q], [q, 0]] ⊕ I_{n-k-1}`.
pub fn sym_rep(n: usize) -> Result<GeneratorRep> {
    check_strands(n)?;
    let q = LaurentPoly::q();
    let images = (1..n)
        .map(|k| {
            block_generator(
                n,
                k,
                &LaurentPoly::one(),
                [[LaurentPoly::zero(), q.clone()], [q.clone(), LaurentPoly::zero()]],
            )
        })
        .collect();
    GeneratorRep::new_unchecked(n, images, "R_sym")
}

/// Framing `(aR)(σ_i) = a R(σ_i)` by a unit `a = ±q^k`.
pub fn frame(rep: &GeneratorRep, a: &LaurentPoly) -> Result<GeneratorRep> {
    if a.as_signed_monomial().is_none() {
        return Err(Error::NotAUnit(a.to_string()));
    }
    let images = rep.images.iter().map(|m| m.scale(a)).collect();
    let label = if a.is_one() {
        rep.label.clone()
    } else {
        format!("({a})·{}", rep.label)
    };
    GeneratorRep::new_unchecked(rep.strands, images, label)
}

/// Twisting by the field morphism `q ↦ q^r`.
pub fn twist(rep: &GeneratorRep, r: i64) -> Result<GeneratorRep> {
    let images = rep
        .images
        .iter()
        .map(|m| m.substitute_power(r))
        .collect::<Result<Vec<_>>>()?;
    let label = if r == 1 {
        rep.label.clone()
    } else {
        format!("{}^(q^{r})", rep.label)
    };
    GeneratorRep::new_unchecked(rep.strands, images, label)
}

/// Blockwise direct sum.
pub fn direct_sum(reps: &[GeneratorRep]) -> Result<GeneratorRep> {
    let first = reps
        .first()
        .ok_or_else(|| Error::DimensionMismatch("direct sum of no representations".into()))?;
    if reps.len() == 1 {
        return Ok(first.clone());
    }
    if let Some(bad) = reps.iter().find(|r| r.strands != first.strands) {
        return Err(Error::StrandMismatch {
            expected: first.strands,
            got: bad.strands,
        });
    }
    let images = (0..first.strands - 1)
        .map(|i| Matrix::direct_sum(&reps.iter().map(|r| r.images[i].clone()).collect::<Vec<_>>()))
        .collect();
    let label = reps.iter().map(|r| r.label.as_str()).collect::<Vec<_>>().join(" ⊕ ");
    GeneratorRep::new_unchecked(first.strands, images, label)
}

/// `R ∘ Δ_{n,r}` for a representation `R` of `B_{nr}`.
pub fn cabling_pullback(rep: &GeneratorRep, n: usize, r: usize) -> Result<GeneratorRep> {
    if rep.strands != n * r {
        return Err(Error::StrandMismatch {
            expected: n * r,
            got: rep.strands,
        });
    }
    check_strands(n)?;
    let images = (1..n)
        .map(|i| rep.eval_word(&cable_word(&BraidWord::generator(n, i as i64)?, r as i64)?))
        .collect::<Result<Vec<_>>>()?;
    GeneratorRep::new_unchecked(n, images, format!("{} ∘ Δ_{{{n},{r}}}", rep.label))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn mat(rows: &[&[&str]]) -> Matrix<LaurentPoly> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| lp(s)).collect()).collect()).unwrap()
    }

    #[test]
    fn burau_examples() {
        let b2 = burau_rep(2).unwrap();
        assert_eq!(b2.image(1), &mat(&[&["q - q^-1", "q"], &["q^-1", "0"]]));
        let b3 = burau_rep(3).unwrap();
        assert_eq!(b3.image(1).determinant().unwrap(), lp("-q"));
        let at_one = b3.specialize_at_one();
        assert_eq!(at_one[0], Matrix::permutation(&[1, 0, 2]));
        assert!(burau_rep(1).is_err());
    }

    #[test]
    fn sym_examples() {
        let s2 = sym_rep(2).unwrap();
        assert_eq!(s2.image(1), &mat(&[&["0", "q"], &["q", "0"]]));
        let s3 = sym_rep(3).unwrap();
        let sq = s3.image(1).pow(2).unwrap();
        assert_eq!(sq, mat(&[&["q^2", "0", "0"], &["0", "q^2", "0"], &["0", "0", "1"]]));
        assert_eq!(s3.specialize_at_one()[1], Matrix::permutation(&[0, 2, 1]));
    }

    #[test]
    fn frame_examples() {
        let b2 = burau_rep(2).unwrap();
        assert_eq!(frame(&b2, &LaurentPoly::one()).unwrap().images(), b2.images());
        let f = frame(&sym_rep(2).unwrap(), &lp("q^2")).unwrap();
        assert_eq!(f.image(1), &mat(&[&["0", "q^3"], &["q^3", "0"]]));
        assert!(matches!(frame(&b2, &lp("q + 1")), Err(Error::NotAUnit(_))));
        assert!(matches!(frame(&b2, &lp("2*q")), Err(Error::NotAUnit(_))));
        // det(aM) = a^dim det M
        let b3 = burau_rep(3).unwrap();
        let a = lp("-q^2");
        let lhs = frame(&b3, &a).unwrap().image(1).determinant().unwrap();
        let rhs = a.mul(&a).mul(&a).mul(&b3.image(1).determinant().unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn twist_examples() {
        let t = twist(&burau_rep(2).unwrap(), 2).unwrap();
        assert_eq!(t.image(1), &mat(&[&["q^2 - q^-2", "q^2"], &["q^-2", "0"]]));
        let b4 = burau_rep(4).unwrap();
        assert_eq!(twist(&b4, 1).unwrap().images(), b4.images());
        let t = twist(&sym_rep(2).unwrap(), -1).unwrap();
        assert_eq!(t.image(1), &mat(&[&["0", "q^-1"], &["q^-1", "0"]]));
        assert_eq!(twist(&b4, 0), Err(Error::ZeroSubstitution));
    }

    #[test]
    fn direct_sum_examples() {
        let (b, s) = (burau_rep(2).unwrap(), sym_rep(2).unwrap());
        assert_eq!(direct_sum(std::slice::from_ref(&b)).unwrap(), b);
        let d = direct_sum(&[b.clone(), s.clone()]).unwrap();
        assert_eq!(d.dim(), 4);
        assert_eq!(d.image(1).submatrix(0, 0, 2, 2), *b.image(1));
        assert_eq!(d.image(1).submatrix(2, 2, 2, 2), *s.image(1));
        assert!(d.image(1).submatrix(0, 2, 2, 2).is_zero());
        let det = d.image(1).determinant().unwrap();
        assert_eq!(
            det,
            b.image(1)
                .determinant()
                .unwrap()
                .mul(&s.image(1).determinant().unwrap())
        );
        assert!(direct_sum(&[b, sym_rep(3).unwrap()]).is_err());
    }

    #[test]
    fn eval_word_examples() {
        let b3 = burau_rep(3).unwrap();
        assert!(b3.eval_word(&BraidWord::identity(3)).unwrap().is_identity());
        let twist3 = BraidWord::parse(3, "1 2 1 2 1 2").unwrap();
        assert_eq!(b3.eval_word(&twist3).unwrap().determinant().unwrap(), lp("q^6"));
        let u = BraidWord::parse(3, "1 -2 2").unwrap();
        let v = BraidWord::parse(3, "2 2 -1").unwrap();
        assert_eq!(
            b3.eval_word(&u.concat(&v).unwrap()).unwrap(),
            &b3.eval_word(&u).unwrap() * &b3.eval_word(&v).unwrap()
        );
        assert!(b3.eval_word(&BraidWord::identity(4)).is_err());
    }

    #[test]
    fn construction_rejects_broken_relations() {
        let b3 = burau_rep(3).unwrap();
        let images = vec![b3.image(1).clone(), b3.image(1).pow(2).unwrap()];
        assert!(GeneratorRep::new(3, images, "broken").is_err());
        assert!(GeneratorRep::new(3, b3.images().to_vec(), "ok").is_ok());
        assert_eq!(int(1), Rational::one());
    }

    #[test]
    fn cabled_rep_matches_cabled_words() {
        let big = burau_rep(4).unwrap();
        let pulled = cabling_pullback(&big, 2, 2).unwrap();
        let c = cable_word(&BraidWord::parse(2, "1").unwrap(), 2).unwrap();
        assert_eq!(pulled.image(1), &big.eval_word(&c).unwrap());
        assert!(pulled.braid_relation_failure().is_none());
        assert!(cabling_pullback(&big, 3, 2).is_err());
    }
}
