//! The full verification grid run by `braidcable selftest`.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::rational::int;
use crate::algebra::{LaurentPoly, Matrix, Ring};
use crate::braid::{
    artin_action_is_trivial, bigelow_element, cable_word, pure_braid_generator, random_pure_word, BraidWord,
};
use crate::decomp::{
    check_mod_h_reduction, check_series_linearization, commutant_dimension, determinant_check, framing_criterion,
    kernel_membership, verify_global_decomposition, verify_infinitesimal_decomposition,
};
use crate::error::Result;
use crate::rep::{burau_rep, inf_burau, inf_cable_pullback, inf_sym, sym_rep, GeneratorRep, InfRep};

pub const DEFAULT_SEED: u64 = 20_240_611;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

impl std::fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{mark}] {}. {} ({} ms): {}",
            self.id, self.name, self.millis, self.detail
        )
    }
}

fn timed(id: u8, name: &'static str, f: impl FnOnce() -> Result<(bool, String)>) -> CriterionResult {
    let start = Instant::now();
    let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
    CriterionResult {
        id,
        name,
        passed,
        detail,
        millis: start.elapsed().as_millis(),
    }
}

/// `(M - q)(M + q^{-1}) = 0` and `det M = -q^{n-2}` for `n = 2..6`.
pub fn hecke_relation() -> Result<(bool, String)> {
    let q = LaurentPoly::q();
    let qi = LaurentPoly::q_pow(-1);
    let mut checked = 0;
    for n in 2..=6 {
        let rep = burau_rep(n)?;
        let det = LaurentPoly::monomial(int(-1), n as i64 - 2);
        for m in rep.images() {
            let lhs = m.shift_diagonal(&q.neg()).checked_mul(&m.shift_diagonal(&qi))?;
            if !lhs.is_zero() || m.determinant()? != det {
                return Ok((false, format!("n = {n}: generator fails")));
            }
            checked += 1;
        }
    }
    Ok((true, format!("{checked} generator images")))
}

/// Relations of `inf_burau`, `inf_sym` and the cabled pullbacks for
/// `n ≤ 4`, `r ≤ 3`.
pub fn infinitesimal_relations() -> Result<(bool, String)> {
    let mut reps: Vec<InfRep> = Vec::new();
    for n in 2..=4 {
        reps.push(inf_burau(n)?);
        reps.push(inf_sym(n)?);
        for r in 1..=3 {
            reps.push(inf_cable_pullback(&inf_burau(n * r)?, n, r)?);
        }
    }
    for rho in &reps {
        if let Err(v) = rho.check_relations() {
            return Ok((false, format!("{}: {v}", rho.label())));
        }
    }
    Ok((true, format!("{} representations", reps.len())))
}

pub fn infinitesimal_decomposition() -> Result<(bool, String)> {
    let mut count = 0;
    for n in 2..=4 {
        for r in 2..=3 {
            let rep = verify_infinitesimal_decomposition(n, r)?;
            if !rep.verified {
                return Ok((
                    false,
                    format!("(n, r) = ({n}, {r}): {}", rep.failure.unwrap_or_default()),
                ));
            }
            count += 1;
        }
    }
    Ok((true, format!("{count} cases exact")))
}

pub const GLOBAL_CASES: [(usize, usize); 6] = [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (2, 4)];

pub fn global_decomposition() -> Result<(bool, String)> {
    let mut dims = Vec::new();
    for (n, r) in GLOBAL_CASES {
        let rep = verify_global_decomposition(n, r)?;
        if !rep.verified {
            return Ok((
                false,
                format!("(n, r) = ({n}, {r}): {}", rep.failure.unwrap_or_default()),
            ));
        }
        dims.push(format!("({n},{r}):{}", rep.solution_space_dim.unwrap_or(0)));
    }
    Ok((true, format!("intertwiner space dims {}", dims.join(" "))))
}

pub fn determinant_consistency_grid() -> Result<(bool, String)> {
    for n in 2..=5 {
        for r in 1..=4 {
            let check = determinant_check(n, r)?;
            if !check.consistent() {
                return Ok((false, format!("(n, r) = ({n}, {r}): predicted {}", check.predicted)));
            }
        }
    }
    let two_two = determinant_check(2, 2)?.predicted;
    Ok((
        two_two == LaurentPoly::q_pow(8),
        format!("all agree; (2,2) gives {two_two}"),
    ))
}

pub fn bigelow_kernel() -> Result<(bool, String)> {
    let beta = bigelow_element();
    if artin_action_is_trivial(&beta) {
        return Ok((false, "β acts trivially on the free group".into()));
    }
    let burau = kernel_membership(&burau_rep(5)?, &beta, true)?;
    let cabled = kernel_membership(&burau_rep(10)?, &cable_word(&beta, 2)?, true)?;
    Ok((
        burau.in_kernel && cabled.in_kernel,
        format!(
            "β nontrivial, R_bur(β) = Id: {}, R_bur(Δ(β)) = Id: {}",
            burau.in_kernel, cabled.in_kernel
        ),
    ))
}

pub const SERIES_ORDER: usize = 3;

pub fn series_bridge(seed: u64) -> Result<(bool, String)> {
    for n in 2..=5 {
        for (rep, rho) in [(burau_rep(n)?, inf_burau(n)?), (sym_rep(n)?, inf_sym(n)?)] {
            for i in 1..n {
                let w = BraidWord::generator(n, i as i64)?;
                if !check_mod_h_reduction(&w, &rho, &rep, SERIES_ORDER)? {
                    return Ok((false, format!("{} σ_{i} mod h", rep.label())));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut words = 0;
    for n in [3, 4] {
        let pairs: [(GeneratorRep, InfRep); 2] = [(burau_rep(n)?, inf_burau(n)?), (sym_rep(n)?, inf_sym(n)?)];
        for _ in 0..50 {
            let w = random_pure_word(n, 20, &mut rng)?;
            for (rep, rho) in &pairs {
                if !check_series_linearization(&w, rho, rep, SERIES_ORDER)? {
                    return Ok((false, format!("{} on [{w}] mod h²", rep.label())));
                }
            }
            words += 1;
        }
    }
    Ok((true, format!("{words} random pure words, both pairs")))
}

pub fn irreducibility_and_framing() -> Result<(bool, String)> {
    for n in [3, 4] {
        let d = commutant_dimension(&sym_rep(n)?)?;
        if d != 1 {
            return Ok((false, format!("commutant of R_sym({n}) has dimension {d}")));
        }
    }
    let c = BraidWord::commutator(&pure_braid_generator(3, 1, 2)?, &pure_braid_generator(3, 2, 3)?)?;
    if sym_rep(3)?.eval_word(&c)? != Matrix::identity(3) {
        return Ok((false, "R_sym([ξ_12, ξ_23]) ≠ Id".into()));
    }
    for n in 2..=6 {
        for r in 2..=4 {
            if !framing_criterion(n, r)? {
                return Ok((false, format!("framing criterion fails at (n, r) = ({n}, {r})")));
            }
        }
    }
    Ok((
        true,
        "commutants 1, commutator in kernel, framing criterion holds".into(),
    ))
}

/// Runs every criterion in order.
pub fn run_selftest(seed: u64) -> Vec<CriterionResult> {
    vec![
        timed(1, "Hecke relation", hecke_relation),
        timed(2, "infinitesimal relations", infinitesimal_relations),
        timed(3, "infinitesimal decomposition", infinitesimal_decomposition),
        timed(4, "global decomposition", global_decomposition),
        timed(5, "determinant consistency", determinant_consistency_grid),
        timed(6, "Bigelow kernel", bigelow_kernel),
        timed(7, "series bridge", || series_bridge(seed)),
        timed(8, "irreducibility and framing", irreducibility_and_framing),
    ]
}

pub fn total_time(results: &[CriterionResult]) -> Duration {
    Duration::from_millis(results.iter().map(|r| r.millis as u64).sum())
}
