use crate::algebra::rational::int;
use crate::algebra::{Matrix, Rational, Ring};
use crate::error::{Error, Result};
use crate::rep::{inf_burau, inf_cable_pullback, inf_direct_sum, inf_scale, inf_shift, inf_sym, InfRep};

use super::report::{cabling_blocks, DecompositionReport, Intertwiner};

/// Adapted basis of `Q^{nr}` for the cabled infinitesimal Burau
/// representation. `e_s^i` (strand `s` of block `i`, both 1-based) is
/// coordinate `r(i-1) + s - 1`.
///
/// Columns are `u_1, …, u_n` with `u_i = Σ_s e_s^i`, followed for each
/// `s = 1..r-1` by `v^1_s, …, v^n_s` with `v^i_s = e_s^i - e_r^i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CabledBasis {
    n: usize,
    r: usize,
}

impl CabledBasis {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooFewStrands { min: 2, got: n });
        }
        if r < 1 {
            return Err(Error::InvalidCablingParameter(r as i64));
        }
        Ok(CabledBasis { n, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn dim(&self) -> usize {
        self.n * self.r
    }

    /// Coordinate of `e_s^i`.
    pub fn index(&self, i: usize, s: usize) -> usize {
        self.r * (i - 1) + s - 1
    }

    pub fn u_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        for s in 1..=self.r {
            v[self.index(i, s)] = int(1);
        }
        v
    }

    pub fn v_vector(&self, i: usize, s: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[self.index(i, s)] = int(1);
        v[self.index(i, self.r)] = int(-1);
        v
    }

    /// Basis vectors in column order.
    pub fn vectors(&self) -> Vec<Vec<Rational>> {
        let mut out: Vec<_> = (1..=self.n).map(|i| self.u_vector(i)).collect();
        for s in 1..self.r {
            out.extend((1..=self.n).map(|i| self.v_vector(i, s)));
        }
        out
    }

    /// Matrix whose columns are [`CabledBasis::vectors`].
    pub fn change_of_basis(&self) -> Matrix<Rational> {
        let cols = self.vectors();
        Matrix::from_fn(self.dim(), self.dim(), |a, b| cols[b][a].clone())
    }
}

/// `(r ρ_bur + r(r-1)) ⊕ (r-1) × (r² - r ρ_sym)` on `n` strands.
pub fn infinitesimal_target(n: usize, r: usize) -> Result<InfRep> {
    let (ri, r_i64) = (int(r as i64), r as i64);
    let burau_like = inf_shift(&inf_scale(&inf_burau(n)?, &ri)?, &int(r_i64 * (r_i64 - 1)));
    let sym_like = inf_shift(&inf_scale(&inf_sym(n)?, &int(-r_i64))?, &int(r_i64 * r_i64));
    let mut parts = vec![burau_like];
    parts.extend(std::iter::repeat_n(sym_like, r - 1));
    inf_direct_sum(&parts)
}

fn first_entry_difference(name: &str, got: &Matrix<Rational>, want: &Matrix<Rational>) -> Option<String> {
    got.first_difference(want).map(|(a, b)| {
        format!(
            "{name} entry ({}, {}): expected {}, got {}",
            a + 1,
            b + 1,
            want[(a, b)],
            got[(a, b)]
        )
    })
}

/// Conjugates the cabled infinitesimal Burau representation into the adapted
/// basis and compares it with the predicted direct sum, exactly.
pub fn verify_infinitesimal_decomposition(n: usize, r: usize) -> Result<DecompositionReport> {
    if r < 2 {
        return Err(Error::InvalidCablingParameter(r as i64));
    }
    let basis = CabledBasis::new(n, r)?;
    let left = inf_cable_pullback(&inf_burau(n * r)?, n, r)?;
    let right = infinitesimal_target(n, r)?;
    let p = basis.change_of_basis();
    let p_inv = p.inverse()?;
    let conj = |m: &Matrix<Rational>| -> Result<Matrix<Rational>> { p_inv.checked_mul(m)?.checked_mul(&p) };

    let mut failure = None;
    for k in 1..n {
        if let Some(msg) = first_entry_difference(&format!("s_{k}"), &conj(left.perm(k))?, right.perm(k)) {
            failure = Some(msg);
            break;
        }
    }
    if failure.is_none() {
        for (&(i, j), m) in left.chords() {
            let name = format!("t_{{{i}{j}}}");
            if let Some(msg) = first_entry_difference(&name, &conj(m)?, right.chord(i, j)) {
                failure = Some(msg);
                break;
            }
        }
    }

    let r_i = r as i64;
    Ok(DecompositionReport {
        n,
        r,
        left_label: left.label().to_string(),
        right_label: right.label().to_string(),
        verified: failure.is_none(),
        block_structure: cabling_blocks(
            n,
            r,
            format!("{r}·ρ_bur + {}", r_i * (r_i - 1)),
            format!("{} - {r}·ρ_sym", r_i * r_i),
        ),
        // the report maps left to right, so the certificate is P^{-1}
        intertwiner: Some(Intertwiner::Rational(p_inv)),
        solution_space_dim: None,
        failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_is_full_rank() {
        for (n, r) in [(2, 2), (3, 3), (4, 2)] {
            let b = CabledBasis::new(n, r).unwrap();
            assert_eq!(b.change_of_basis().rank(), n * r);
        }
        let b = CabledBasis::new(2, 2).unwrap();
        assert_eq!(b.u_vector(2), vec![int(0), int(0), int(1), int(1)]);
        assert_eq!(b.v_vector(1, 1), vec![int(1), int(-1), int(0), int(0)]);
    }

    #[test]
    fn small_cases_verify() {
        let rep = verify_infinitesimal_decomposition(2, 2).unwrap();
        assert!(rep.verified, "{rep}");
        assert_eq!(rep.block_structure.len(), 2);
        assert_eq!(
            (rep.block_structure[1].dimension, rep.block_structure[1].multiplicity),
            (2, 1)
        );

        let rep = verify_infinitesimal_decomposition(2, 3).unwrap();
        assert!(rep.verified);
        assert_eq!(rep.block_structure[1].multiplicity, 2);
        assert_eq!(rep.dimension(), 6);
    }

    #[test]
    fn preconditions() {
        assert!(verify_infinitesimal_decomposition(1, 2).is_err());
        assert!(verify_infinitesimal_decomposition(2, 1).is_err());
    }
}
