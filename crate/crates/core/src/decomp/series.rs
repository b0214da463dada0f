//! Comparison of global representations, expanded at `q = e^{h/2}`, with
//! their infinitesimal counterparts.

use crate::algebra::rational::int;
use crate::algebra::{Matrix, Rational, TruncSeries};
use crate::braid::{linking_numbers, BraidWord};
use crate::error::{Error, Result};
use crate::rep::{GeneratorRep, InfRep};

fn check_pair(w: &BraidWord, rho: &InfRep, rep: &GeneratorRep) -> Result<()> {
    if rho.dim() != rep.dim() {
        return Err(Error::DimensionMismatch(format!(
            "infinitesimal dimension {} vs global dimension {}",
            rho.dim(),
            rep.dim()
        )));
    }
    for strands in [rho.strands(), rep.strands()] {
        if strands != w.strands() {
            return Err(Error::StrandMismatch {
                expected: strands,
                got: w.strands(),
            });
        }
    }
    Ok(())
}

/// `R(w)` expanded entrywise to `O(h^order)`.
pub fn series_image(rep: &GeneratorRep, w: &BraidWord, order: usize) -> Result<Matrix<TruncSeries>> {
    rep.eval_word(w)?.to_series(order)
}

/// `Id + h Σ_{a<b} lk_ab(w) ρ(t_ab)` truncated at `O(h²)`.
pub fn linearization_target(w: &BraidWord, rho: &InfRep) -> Result<(Matrix<Rational>, Matrix<Rational>)> {
    let lk = linking_numbers(w)?;
    let mut first = Matrix::zeros(rho.dim(), rho.dim());
    for (&(a, b), &l) in &lk {
        if l != 0 {
            first = first.checked_add(&rho.chord(a, b).scale(&int(l)))?;
        }
    }
    Ok((Matrix::identity(rho.dim()), first))
}

/// For pure `w`: `R(w) ≡ Id + h Σ lk_ab(w) ρ(t_ab) (mod h²)`, comparing the
/// exact series coefficients of order 0 and 1.
pub fn check_series_linearization(w: &BraidWord, rho: &InfRep, rep: &GeneratorRep, order: usize) -> Result<bool> {
    if order < 2 {
        return Err(Error::OrderTooLow { min: 2, got: order });
    }
    check_pair(w, rho, rep)?;
    let (zeroth, first) = linearization_target(w, rho)?;
    let s = series_image(rep, w, order)?;
    Ok(s.coefficient(0) == zeroth && s.coefficient(1) == first)
}

/// For any `w`: `R(w) ≡ ρ(π(w)) (mod h)`, where `π(w)` is the underlying
/// permutation.
pub fn check_mod_h_reduction(w: &BraidWord, rho: &InfRep, rep: &GeneratorRep, order: usize) -> Result<bool> {
    if order < 1 {
        return Err(Error::ZeroOrder);
    }
    check_pair(w, rho, rep)?;
    Ok(series_image(rep, w, order)?.coefficient(0) == rho.eval_perm_word(w)?)
}
