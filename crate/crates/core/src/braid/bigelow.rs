//! Bigelow's nontrivial element of the kernel of the Burau representation
//! of `B_5`.

use super::BraidWord;

const PSI1: &[i64] = &[-3, 2, 1, 1, 2, 4, 4, 4, 3, 2];
const PSI2: &[i64] = &[-4, 3, 2, -1, -1, 2, 1, 1, 2, 2, 1, 4, 4, 4, 4, 4];
const DELTA5: &[i64] = &[4, 3, 2, 1, 1, 2, 3, 4];

fn word(letters: &[i64]) -> BraidWord {
    BraidWord::new(5, letters.to_vec()).expect("letters are valid in B_5")
}

/// `ψ_1 = σ_3^{-1} σ_2 σ_1^2 σ_2 σ_4^3 σ_3 σ_2`.
pub fn psi1() -> BraidWord {
    word(PSI1)
}

/// `ψ_2 = σ_4^{-1} σ_3 σ_2 σ_1^{-2} σ_2 σ_1^2 σ_2^2 σ_1 σ_4^5`.
pub fn psi2() -> BraidWord {
    word(PSI2)
}

/// `δ_5 = σ_4 σ_3 σ_2 σ_1^2 σ_2 σ_3 σ_4`.
pub fn delta5() -> BraidWord {
    word(DELTA5)
}

/// `β = [g, δ_5]` with `g = ψ_2 ψ_1^{-1} σ_4 ψ_1 ψ_2^{-1}` and
/// `[x, y] = x y x^{-1} y^{-1}`, freely reduced.
pub fn bigelow_element() -> BraidWord {
    let (p1, p2, d) = (psi1(), psi2(), delta5());
    let s4 = word(&[4]);
    let g = BraidWord::product(5, [&p2, &p1.inverse(), &s4, &p1, &p2.inverse()]).unwrap();
    BraidWord::commutator(&g, &d).unwrap().free_reduce()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::artin_action_is_trivial;

    #[test]
    fn beta_is_pure_balanced_and_nontrivial() {
        let beta = bigelow_element();
        assert_eq!(beta.strands(), 5);
        assert!(beta.is_pure());
        assert_eq!(beta.exponent_sum(), 0);
        assert!(!artin_action_is_trivial(&beta));
        assert_eq!(beta, beta.free_reduce());
    }

    #[test]
    fn factor_lengths() {
        assert_eq!(psi1().len(), 10);
        assert_eq!(psi2().len(), 16);
        assert_eq!(delta5().len(), 8);
        // -1 + 1 + 1 - 2 + 1 + 2 + 2 + 1 + 5
        assert_eq!(psi2().exponent_sum(), 10);
    }
}
