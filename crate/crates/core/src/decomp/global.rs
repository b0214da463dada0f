use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::modular::Fp;
use crate::algebra::rational::int;
use crate::algebra::{solve_intertwiner_space, LaurentPoly, Matrix, RatFunc, Ring};
use crate::error::{Error, Result};
use crate::rep::{burau_rep, cabling_pullback, direct_sum, frame, sym_rep, twist, GeneratorRep};

use super::report::{cabling_blocks, DecompositionReport, Intertwiner};

const SEARCH_SEED: u64 = 0x1_7e27_f1e2;
const RANDOM_CANDIDATES: usize = 32;
const COEFF_BOUND: i64 = 3;

/// `R_bur ∘ Δ_{n,r}`: the Burau representation of `B_{nr}` pulled back
/// along cabling.
pub fn cabled_burau(n: usize, r: usize) -> Result<GeneratorRep> {
    if r < 1 {
        return Err(Error::InvalidCablingParameter(r as i64));
    }
    cabling_pullback(&burau_rep(n * r)?, n, r)
}

/// `q^{r(r-1)} R_bur^{q^r} ⊕ (r-1) × q^{r²} R_sym^{q^{-r}}`.
pub fn build_theorem_rhs(n: usize, r: usize) -> Result<GeneratorRep> {
    if r < 1 {
        return Err(Error::InvalidCablingParameter(r as i64));
    }
    let r_i = r as i64;
    let burau_like = frame(&twist(&burau_rep(n)?, r_i)?, &LaurentPoly::q_pow(r_i * (r_i - 1)))?;
    let sym_like = frame(&twist(&sym_rep(n)?, -r_i)?, &LaurentPoly::q_pow(r_i * r_i))?;
    let mut parts = vec![burau_like];
    parts.extend(std::iter::repeat_n(sym_like, r - 1));
    direct_sum(&parts)
}

/// Dimension over `Q(q)` of the commutant of a representation.
pub fn commutant_dimension(rep: &GeneratorRep) -> Result<usize> {
    let images: Vec<_> = rep.images().iter().map(|m| m.to_ratfunc()).collect();
    Ok(solve_intertwiner_space(&images, &images, rep.dim(), rep.dim())?.len())
}

/// Exact check that `m` is invertible and conjugates `left` onto `right`.
fn certify(m: &Matrix<RatFunc>, left: &[Matrix<RatFunc>], right: &[Matrix<RatFunc>]) -> Option<Matrix<RatFunc>> {
    let inv = m.inverse().ok()?;
    for (l, r) in left.iter().zip(right) {
        let conj = m.checked_mul(l).ok()?.checked_mul(&inv).ok()?;
        if &conj != r {
            return None;
        }
    }
    Some(inv)
}

/// Nonzero determinant at a random residue proves invertibility; a zero
/// or a pole is inconclusive.
fn screen_says_invertible(m: &Matrix<RatFunc>, point: Fp) -> Option<bool> {
    let det = m.eval_mod(point)?.determinant().ok()?;
    Some(!det.is_zero())
}

fn combination(basis: &[Matrix<RatFunc>], coeffs: &[i64]) -> Matrix<RatFunc> {
    let mut acc = Matrix::zeros(basis[0].rows(), basis[0].cols());
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            acc = &acc + &b.scale(&RatFunc::from_int(c));
        }
    }
    acc
}

/// Finds an invertible intertwiner in the span of `basis`: basis elements
/// first, then seeded small-integer combinations.
fn find_invertible(
    basis: &[Matrix<RatFunc>],
    left: &[Matrix<RatFunc>],
    right: &[Matrix<RatFunc>],
) -> Option<Matrix<RatFunc>> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEARCH_SEED);
    let point = Fp::random_nonzero(&mut rng);
    let mut candidates: Vec<Vec<i64>> = (0..basis.len())
        .map(|k| (0..basis.len()).map(|j| i64::from(j == k)).collect())
        .collect();
    for _ in 0..RANDOM_CANDIDATES {
        let coeffs: Vec<i64> = (0..basis.len())
            .map(|_| rng.gen_range(-COEFF_BOUND..=COEFF_BOUND))
            .collect();
        if coeffs.iter().any(|&c| c != 0) {
            candidates.push(coeffs);
        }
    }
    for coeffs in candidates {
        let m = combination(basis, &coeffs);
        if screen_says_invertible(&m, point) == Some(false) {
            continue;
        }
        if certify(&m, left, right).is_some() {
            return Some(m);
        }
    }
    None
}

/// Constructs an explicit isomorphism over `Q(q)` between the cabled Burau
/// representation and the predicted direct sum.
pub fn verify_global_decomposition(n: usize, r: usize) -> Result<DecompositionReport> {
    if r < 2 {
        return Err(Error::InvalidCablingParameter(r as i64));
    }
    let left = cabled_burau(n, r)?;
    let right = build_theorem_rhs(n, r)?;
    let l: Vec<_> = left.images().iter().map(|m| m.to_ratfunc()).collect();
    let rr: Vec<_> = right.images().iter().map(|m| m.to_ratfunc()).collect();
    let basis = solve_intertwiner_space(&l, &rr, left.dim(), right.dim())?;
    let found = if basis.is_empty() {
        None
    } else {
        find_invertible(&basis, &l, &rr)
    };
    let failure = match (&found, basis.len()) {
        (Some(_), _) => None,
        (None, 0) => Some("no nonzero intertwiner exists".to_string()),
        (None, d) => Some(format!(
            "no invertible element found in a {d}-dimensional intertwiner space"
        )),
    };
    let r_i = r as i64;
    Ok(DecompositionReport {
        n,
        r,
        left_label: left.label().to_string(),
        right_label: right.label().to_string(),
        verified: found.is_some(),
        block_structure: cabling_blocks(
            n,
            r,
            format!("q^{}·R_bur^(q^{r})", r_i * (r_i - 1)),
            format!("q^{}·R_sym^(q^-{r})", r_i * r_i),
        ),
        intertwiner: found.map(Intertwiner::RatFunc),
        solution_space_dim: Some(basis.len()),
        failure,
    })
}

/// Per-generator determinants on both sides of the cabling isomorphism.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeterminantCheck {
    pub n: usize,
    pub r: usize,
    /// `det (R_bur ∘ Δ)(σ_i)` for each `i`.
    pub cabled: Vec<LaurentPoly>,
    /// Determinant of each generator image of [`build_theorem_rhs`].
    pub theorem: Vec<LaurentPoly>,
    /// `(-1)^{r²} q^{r²(nr-2)}`: `r²` Artin letters of determinant
    /// `-q^{nr-2}` each.
    pub predicted: LaurentPoly,
}

impl DeterminantCheck {
    pub fn consistent(&self) -> bool {
        self.cabled.iter().chain(&self.theorem).all(|d| d == &self.predicted)
    }
}

/// Determinant of a block diagonal matrix with diagonal blocks
/// `[cuts[k], cuts[k+1])`; falls back to full elimination if some entry
/// outside the blocks is nonzero.
fn blockwise_determinant(m: &Matrix<LaurentPoly>, cuts: &[usize]) -> Result<LaurentPoly> {
    let block_of = |a: usize| cuts.partition_point(|&c| c <= a);
    if m.entries()
        .any(|((a, b), x)| block_of(a) != block_of(b) && !x.is_zero())
    {
        return m.determinant();
    }
    let mut det = LaurentPoly::one();
    for w in cuts.windows(2) {
        det = det.mul(&m.submatrix(w[0], w[0], w[1] - w[0], w[1] - w[0]).determinant()?);
    }
    Ok(det)
}

pub fn determinant_check(n: usize, r: usize) -> Result<DeterminantCheck> {
    let left = cabled_burau(n, r)?;
    let right = build_theorem_rhs(n, r)?;
    let nr = n * r;
    // σ_i only moves the strands of blocks i and i+1
    let cabled = (1..n)
        .map(|i| {
            let (lo, hi) = (r * (i - 1), r * (i + 1));
            let cuts: Vec<usize> = (0..=lo).chain(hi..=nr).collect();
            blockwise_determinant(left.image(i), &cuts)
        })
        .collect::<Result<Vec<_>>>()?;
    let cuts: Vec<usize> = (0..=r).map(|k| k * n).collect();
    let theorem = right
        .images()
        .iter()
        .map(|m| blockwise_determinant(m, &cuts))
        .collect::<Result<Vec<_>>>()?;
    let rr = (r * r) as i64;
    let sign = if rr % 2 == 0 { 1 } else { -1 };
    let predicted = LaurentPoly::monomial(int(sign), rr * (nr as i64 - 2));
    Ok(DeterminantCheck {
        n,
        r,
        cabled,
        theorem,
        predicted,
    })
}

/// True iff every per-generator determinant on both sides equals
/// `(-1)^{r²} q^{r²(nr-2)}`.
pub fn determinant_consistency(n: usize, r: usize) -> Result<bool> {
    Ok(determinant_check(n, r)?.consistent())
}

/// `det R_bur(σ_1)²`, computed from the matrix, differs from `a^{-2n}` for
/// the framing `a = q^{r(r-1)}`.
pub fn framing_criterion(n: usize, r: usize) -> Result<bool> {
    let m = burau_rep(n)?.image(1).pow(2)?;
    let lhs = m.determinant()?;
    let rhs = LaurentPoly::q_pow(-2 * (r * (r - 1) * n) as i64);
    Ok(lhs != rhs)
}
