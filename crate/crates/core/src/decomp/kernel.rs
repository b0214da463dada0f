use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::modular::Fp;
use crate::algebra::{LaurentPoly, Matrix, Ring};
use crate::braid::{cable_word, BraidWord};
use crate::error::Result;
use crate::rep::{burau_rep, GeneratorRep};

const SCREEN_SEED: u64 = 0x6b65_726e;
const SCREEN_POINTS: usize = 2;

/// Evidence that a matrix is not the identity.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Exact entry of `R(w) - Id`.
    Exact { row: usize, col: usize, entry: String },
    /// Entry of `R(w) - Id` that is nonzero with `q` set to `point` modulo
    /// the screening prime.
    Modular {
        row: usize,
        col: usize,
        point: u64,
        value: u64,
    },
}

/// How a representation treats a word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Membership {
    pub in_kernel: bool,
    /// Present iff `in_kernel` is false.
    pub witness: Option<Witness>,
    /// Whether the exact product was computed (always when `in_kernel`).
    pub exact: bool,
}

/// Kernel membership of `w` for `R_bur` and for `R_bur ∘ Δ_{n,r}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KernelVerdict {
    pub word: BraidWord,
    pub r: usize,
    pub burau: Membership,
    pub cabled: Membership,
}

impl KernelVerdict {
    pub fn in_ker_burau(&self) -> bool {
        self.burau.in_kernel
    }

    pub fn in_ker_cabled(&self) -> bool {
        self.cabled.in_kernel
    }

    pub fn agree(&self) -> bool {
        self.burau.in_kernel == self.cabled.in_kernel
    }

    pub fn to_json(&self) -> Value {
        json!({
            "n": self.word.strands(),
            "r": self.r,
            "word_length": self.word.len(),
            "burau": self.burau.in_kernel,
            "cabled": self.cabled.in_kernel,
            "agree": self.agree(),
            "burau_witness": self.burau.witness,
            "cabled_witness": self.cabled.witness,
        })
    }
}

fn first_non_identity<T: Ring>(m: &Matrix<T>) -> Option<(usize, usize)> {
    m.first_difference(&Matrix::identity(m.rows()))
}

/// Decides `rep(w) = Id`. Unless `always_exact` is set, `q` is first set to
/// random residues and a non-identity image there settles the question;
/// otherwise the exact product decides.
pub fn kernel_membership(rep: &GeneratorRep, w: &BraidWord, always_exact: bool) -> Result<Membership> {
    let mut rng = ChaCha8Rng::seed_from_u64(SCREEN_SEED);
    if !always_exact {
        for _ in 0..SCREEN_POINTS {
            let point = Fp::random_nonzero(&mut rng);
            let Some(m) = rep.eval_word_mod(w, point) else { continue };
            if let Some((row, col)) = first_non_identity(&m) {
                let value = m[(row, col)].sub(&Matrix::<Fp>::identity(m.rows())[(row, col)]);
                return Ok(Membership {
                    in_kernel: false,
                    witness: Some(Witness::Modular {
                        row: row + 1,
                        col: col + 1,
                        point: point.value(),
                        value: value.value(),
                    }),
                    exact: false,
                });
            }
        }
    }
    let m = rep.eval_word(w)?;
    let witness = first_non_identity(&m).map(|(row, col)| {
        let id = Matrix::<LaurentPoly>::identity(m.rows());
        Witness::Exact {
            row: row + 1,
            col: col + 1,
            entry: m[(row, col)].sub(&id[(row, col)]).to_string(),
        }
    });
    Ok(Membership {
        in_kernel: witness.is_none(),
        witness,
        exact: true,
    })
}

/// Compares `w ∈ Ker R_bur` with `w ∈ Ker (R_bur ∘ Δ_{n,r})`. Identity
/// verdicts always rest on the exact product.
pub fn kernel_equivalence_check(w: &BraidWord, r: usize) -> Result<KernelVerdict> {
    let n = w.strands();
    let cabled_word = cable_word(w, r as i64)?;
    let burau = kernel_membership(&burau_rep(n)?, w, false)?;
    let cabled = kernel_membership(&burau_rep(n * r)?, &cabled_word, false)?;
    Ok(KernelVerdict {
        word: w.clone(),
        r,
        burau,
        cabled,
    })
}
