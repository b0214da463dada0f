//! Representations of the infinitesimal braid algebra `S_n ⋉ T_n`.
//!
//! `T_n` is generated by chords `t_ij = t_ji` subject to the four-term
//! relations `[t_jk, t_ij + t_ik] = 0` and `[t_ij, t_kl] = 0` for distinct
//! indices; `S_n` acts by `s t_ij s^{-1} = t_{s(i) s(j)}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::rational::int;
use crate::algebra::{Matrix, Rational, Ring};
use crate::braid::{block_crossing, BraidWord};
use crate::error::{Error, Result};

/// Images of the adjacent transpositions `s_1, …, s_{n-1}` and of the chords
/// `t_ij` (`i < j`, 1-based).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InfRep {
    strands: usize,
    dim: usize,
    perm_images: Vec<Matrix<Rational>>,
    chord_images: BTreeMap<(usize, usize), Matrix<Rational>>,
    label: String,
}

/// First relation found to fail, with the offending indices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RelationViolation {
    /// `s_i^2 ≠ 1`.
    Involution { i: usize },
    /// `s_i s_{i+1} s_i ≠ s_{i+1} s_i s_{i+1}`.
    BraidRelation { i: usize },
    /// `s_i s_j ≠ s_j s_i` for `|i - j| > 1`.
    FarCommutation { i: usize, j: usize },
    /// `[t_jk, t_ij + t_ik] ≠ 0`.
    FourTerm { i: usize, j: usize, k: usize },
    /// `[t_ij, t_kl] ≠ 0` with `{i, j} ∩ {k, l} = ∅`.
    DisjointChords { ij: (usize, usize), kl: (usize, usize) },
    /// `s_m t_ij s_m ≠ t_{s_m(i) s_m(j)}`.
    Equivariance { m: usize, ij: (usize, usize) },
}

fn chord_name(a: usize, b: usize) -> String {
    format!("t_{{{}{}}}", a.min(b), a.max(b))
}

impl fmt::Display for RelationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            RelationViolation::Involution { i } => write!(f, "s_{i}^2 ≠ 1"),
            RelationViolation::BraidRelation { i } => {
                write!(f, "s_{i} s_{0} s_{i} ≠ s_{0} s_{i} s_{0}", i + 1)
            }
            RelationViolation::FarCommutation { i, j } => write!(f, "[s_{i}, s_{j}] ≠ 0"),
            RelationViolation::FourTerm { i, j, k } => write!(
                f,
                "[{}, {} + {}] ≠ 0",
                chord_name(j, k),
                chord_name(i, j),
                chord_name(i, k)
            ),
            RelationViolation::DisjointChords { ij, kl } => {
                write!(f, "[{}, {}] ≠ 0", chord_name(ij.0, ij.1), chord_name(kl.0, kl.1))
            }
            RelationViolation::Equivariance { m, ij } => {
                write!(f, "s_{m} {} s_{m} ≠ t_{{s_{m}(i) s_{m}(j)}}", chord_name(ij.0, ij.1))
            }
        }
    }
}

impl std::error::Error for RelationViolation {}

fn chord_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

impl InfRep {
    /// Builds a representation from explicit images; every pair `i < j`
    /// must be present. Relations are not checked here, see
    /// [`InfRep::check_relations`].
    pub fn new(
        strands: usize,
        perm_images: Vec<Matrix<Rational>>,
        chord_images: BTreeMap<(usize, usize), Matrix<Rational>>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands { min: 2, got: strands });
        }
        if perm_images.len() != strands - 1 {
            return Err(Error::DimensionMismatch(format!(
                "{} transposition images for {strands} strands",
                perm_images.len()
            )));
        }
        let dim = perm_images[0].rows();
        for (i, j) in chord_pairs(strands) {
            if !chord_images.contains_key(&(i, j)) {
                return Err(Error::InvalidChord { i, j, strands });
            }
        }
        if let Some(&(i, j)) = chord_images.keys().find(|&&(i, j)| i == 0 || i >= j || j > strands) {
            return Err(Error::InvalidChord { i, j, strands });
        }
        if perm_images
            .iter()
            .chain(chord_images.values())
            .any(|m| m.rows() != dim || m.cols() != dim)
        {
            return Err(Error::DimensionMismatch("images must be square of equal size".into()));
        }
        Ok(InfRep {
            strands,
            dim,
            perm_images,
            chord_images,
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

    /// Image of `s_i` (1-based).
    pub fn perm(&self, i: usize) -> &Matrix<Rational> {
        &self.perm_images[i - 1]
    }

    /// Image of `t_ij`; order of `i, j` does not matter.
    pub fn chord(&self, i: usize, j: usize) -> &Matrix<Rational> {
        &self.chord_images[&(i.min(j), i.max(j))]
    }

    pub fn chords(&self) -> &BTreeMap<(usize, usize), Matrix<Rational>> {
        &self.chord_images
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Replaces the image of `t_ij` (for building counterexamples).
    pub fn with_chord(mut self, i: usize, j: usize, m: Matrix<Rational>) -> Result<Self> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::DimensionMismatch("chord image has the wrong size".into()));
        }
        match self.chord_images.get_mut(&(i.min(j), i.max(j))) {
            Some(slot) => *slot = m,
            None => {
                return Err(Error::InvalidChord {
                    i,
                    j,
                    strands: self.strands,
                })
            }
        }
        Ok(self)
    }

    /// Image of the permutation underlying a braid word: the product of
    /// `s_{|k|}` over its letters.
    pub fn eval_perm_word(&self, word: &BraidWord) -> Result<Matrix<Rational>> {
        if word.strands() != self.strands {
            return Err(Error::StrandMismatch {
                expected: self.strands,
                got: word.strands(),
            });
        }
        let mut acc = Matrix::identity(self.dim);
        for &k in word.letters() {
            acc = acc.checked_mul(self.perm(k.unsigned_abs() as usize))?;
        }
        Ok(acc)
    }

    /// Checks the defining relations of `S_n ⋉ T_n` and reports the first
    /// failure: symmetric group relations, four-term relations, commutation
    /// of disjoint chords, then equivariance.
    pub fn check_relations(&self) -> std::result::Result<(), RelationViolation> {
        let n = self.strands;
        let id = Matrix::<Rational>::identity(self.dim);
        for i in 1..n {
            let s = self.perm(i);
            if s * s != id {
                return Err(RelationViolation::Involution { i });
            }
            if i + 1 < n {
                let t = self.perm(i + 1);
                if &(s * t) * s != &(t * s) * t {
                    return Err(RelationViolation::BraidRelation { i });
                }
            }
            for j in i + 2..n {
                let t = self.perm(j);
                if s * t != t * s {
                    return Err(RelationViolation::FarCommutation { i, j });
                }
            }
        }
        for (j, k) in chord_pairs(n) {
            for i in (1..=n).filter(|&i| i != j && i != k) {
                let sum = self.chord(i, j) + self.chord(i, k);
                let c = self.chord(j, k).commutator(&sum).expect("sizes agree");
                if !c.is_zero() {
                    return Err(RelationViolation::FourTerm { i, j, k });
                }
            }
        }
        for ij in chord_pairs(n) {
            for kl in chord_pairs(n).filter(|&kl| kl > ij) {
                if ij.0 == kl.0 || ij.0 == kl.1 || ij.1 == kl.0 || ij.1 == kl.1 {
                    continue;
                }
                let c = self
                    .chord(ij.0, ij.1)
                    .commutator(self.chord(kl.0, kl.1))
                    .expect("sizes agree");
                if !c.is_zero() {
                    return Err(RelationViolation::DisjointChords { ij, kl });
                }
            }
        }
        for m in 1..n {
            let s = self.perm(m);
            let swap = |x: usize| match x {
                _ if x == m => m + 1,
                _ if x == m + 1 => m,
                _ => x,
            };
            for (i, j) in chord_pairs(n) {
                if &(s * self.chord(i, j)) * s != *self.chord(swap(i), swap(j)) {
                    return Err(RelationViolation::Equivariance { m, ij: (i, j) });
                }
            }
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

fn transposition_matrix(n: usize, a: usize, b: usize) -> Matrix<Rational> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(a - 1, b - 1);
    Matrix::permutation(&perm)
}

/// `s_i ↦ (i i+1)`, `t_ij ↦ (i j)` as permutation matrices.
pub fn inf_burau(n: usize) -> Result<InfRep> {
    check_strands(n)?;
    let perms = (1..n).map(|i| transposition_matrix(n, i, i + 1)).collect();
    let chords = chord_pairs(n)
        .map(|(i, j)| ((i, j), transposition_matrix(n, i, j)))
        .collect();
    InfRep::new(n, perms, chords, "ρ_bur")
}

/// `s_i ↦ (i i+1)`, `t_ij ↦ E_ii + E_jj`.
pub fn inf_sym(n: usize) -> Result<InfRep> {
    check_strands(n)?;
    let perms = (1..n).map(|i| transposition_matrix(n, i, i + 1)).collect();
    let chords = chord_pairs(n)
        .map(|(i, j)| {
            let mut m = Matrix::zeros(n, n);
            m[(i - 1, i - 1)] = int(1);
            m[(j - 1, j - 1)] = int(1);
            ((i, j), m)
        })
        .collect();
    InfRep::new(n, perms, chords, "ρ_sym")
}

/// `t_ij ↦ ρ(t_ij) + a·Id`; permutations unchanged.
pub fn inf_shift(rho: &InfRep, a: &Rational) -> InfRep {
    let mut out = rho.clone();
    for m in out.chord_images.values_mut() {
        *m = m.shift_diagonal(a);
    }
    if !a.is_zero() {
        out.label = format!("{} + {a}", rho.label);
    }
    out
}

/// `t_ij ↦ b·ρ(t_ij)` for nonzero `b`; permutations unchanged.
pub fn inf_scale(rho: &InfRep, b: &Rational) -> Result<InfRep> {
    if b.is_zero() {
        return Err(Error::ZeroScale);
    }
    let mut out = rho.clone();
    for m in out.chord_images.values_mut() {
        *m = m.scale(b);
    }
    if !b.is_one() {
        out.label = format!("({b})·{}", rho.label);
    }
    Ok(out)
}

/// Blockwise direct sum.
pub fn inf_direct_sum(reps: &[InfRep]) -> Result<InfRep> {
    let first = reps
        .first()
        .ok_or_else(|| Error::DimensionMismatch("direct sum of no representations".into()))?;
    if let Some(bad) = reps.iter().find(|r| r.strands != first.strands) {
        return Err(Error::StrandMismatch {
            expected: first.strands,
            got: bad.strands,
        });
    }
    let sum =
        |pick: &dyn Fn(&InfRep) -> Matrix<Rational>| Matrix::direct_sum(&reps.iter().map(pick).collect::<Vec<_>>());
    let perms = (1..first.strands).map(|i| sum(&|r| r.perm(i).clone())).collect();
    let chords = chord_pairs(first.strands)
        .map(|(i, j)| ((i, j), sum(&|r| r.chord(i, j).clone())))
        .collect();
    let label = reps.iter().map(|r| r.label.as_str()).collect::<Vec<_>>().join(" ⊕ ");
    InfRep::new(first.strands, perms, chords, label)
}

/// Pullback along the infinitesimal cabling map `S_n ⋉ T_n -> S_{nr} ⋉ T_{nr}`:
/// `t_ij ↦ Σ_{a ∈ B_i, b ∈ B_j} t_ab` with `B_i = {r(i-1)+1, …, ri}`, and
/// `s_k` mapped to the block swap of the cabled crossing.
pub fn inf_cable_pullback(rho: &InfRep, n: usize, r: usize) -> Result<InfRep> {
    check_strands(n)?;
    if r == 0 {
        return Err(Error::InvalidCablingParameter(0));
    }
    if rho.strands != n * r {
        return Err(Error::StrandMismatch {
            expected: n * r,
            got: rho.strands,
        });
    }
    let perms = (1..n)
        .map(|k| {
            let word = BraidWord::new(n * r, block_crossing(k, r))?;
            rho.eval_perm_word(&word)
        })
        .collect::<Result<Vec<_>>>()?;
    let block = |i: usize| r * (i - 1) + 1..=r * i;
    let chords = chord_pairs(n)
        .map(|(i, j)| {
            let mut acc = Matrix::zeros(rho.dim, rho.dim);
            for a in block(i) {
                for b in block(j) {
                    acc = &acc + rho.chord(a, b);
                }
            }
            ((i, j), acc)
        })
        .collect();
    InfRep::new(n, perms, chords, format!("{} ∘ ∂_{{{n},{r}}}", rho.label))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn imat(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn basic_images() {
        let b3 = inf_burau(3).unwrap();
        assert_eq!(b3.chord(1, 3), &imat(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]));
        assert_eq!(b3.chord(3, 1), b3.chord(1, 3));
        let s3 = inf_sym(3).unwrap();
        assert_eq!(s3.chord(2, 3), &imat(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(s3.perm(1), b3.perm(1));
    }

    #[test]
    fn shift_and_scale_examples() {
        let shifted = inf_shift(&inf_burau(2).unwrap(), &int(2));
        assert_eq!(shifted.chord(1, 2), &imat(&[&[2, 1], &[1, 2]]));
        let scaled = inf_scale(&inf_sym(2).unwrap(), &int(-2)).unwrap();
        assert_eq!(scaled.chord(1, 2), &imat(&[&[-2, 0], &[0, -2]]));
        assert_eq!(inf_scale(&inf_sym(2).unwrap(), &int(0)), Err(Error::ZeroScale));
    }

    #[test]
    fn standard_reps_satisfy_relations() {
        for n in 2..=5 {
            assert_eq!(inf_burau(n).unwrap().check_relations(), Ok(()));
            assert_eq!(inf_sym(n).unwrap().check_relations(), Ok(()));
            let s = inf_scale(&inf_shift(&inf_sym(n).unwrap(), &int(3)), &int(-4)).unwrap();
            assert_eq!(s.check_relations(), Ok(()));
        }
    }

    #[test]
    fn corrupted_chord_is_caught_by_four_term() {
        let mut e12 = Matrix::zeros(3, 3);
        e12[(0, 1)] = int(1);
        let bad = inf_burau(3).unwrap().with_chord(1, 2, e12).unwrap();
        let err = bad.check_relations().unwrap_err();
        assert_eq!(err, RelationViolation::FourTerm { i: 3, j: 1, k: 2 });
        assert_eq!(err.to_string(), "[t_{12}, t_{13} + t_{23}] ≠ 0");
    }

    #[test]
    fn cable_pullback_of_burau_acts_blockwise() {
        // n = 2, r = 2: basis e_1^1, e_2^1, e_1^2, e_2^2
        let pulled = inf_cable_pullback(&inf_burau(4).unwrap(), 2, 2).unwrap();
        let t = pulled.chord(1, 2);
        let e11 = imat(&[&[1], &[0], &[0], &[0]]);
        // t_12 e_1^1 = e_1^2 + e_2^2 + 2 e_1^1
        assert_eq!(t * &e11, imat(&[&[2], &[0], &[1], &[1]]));
        assert_eq!(pulled.perm(1), &Matrix::permutation(&[2, 3, 0, 1]));
        assert_eq!(pulled.check_relations(), Ok(()));

        let pulled = inf_cable_pullback(&inf_sym(4).unwrap(), 2, 2).unwrap();
        assert_eq!(pulled.chord(1, 2), &Matrix::scalar(4, int(2)));
    }

    #[test]
    fn pullbacks_satisfy_relations() {
        for (n, r) in [(2, 3), (3, 2), (3, 3)] {
            for big in [inf_burau(n * r).unwrap(), inf_sym(n * r).unwrap()] {
                assert_eq!(inf_cable_pullback(&big, n, r).unwrap().check_relations(), Ok(()));
            }
        }
    }

    #[test]
    fn direct_sum_is_blockwise() {
        let d = inf_direct_sum(&[inf_burau(3).unwrap(), inf_sym(3).unwrap()]).unwrap();
        assert_eq!(d.dim(), 6);
        assert_eq!(d.chord(1, 2).submatrix(3, 3, 3, 3), *inf_sym(3).unwrap().chord(1, 2));
        assert_eq!(d.check_relations(), Ok(()));
    }
}
