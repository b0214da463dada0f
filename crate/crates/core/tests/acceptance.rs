//! The eight acceptance criteria, each checked against an independent
//! oracle where one exists, with its runtime budget.

use std::io::Write;
use std::time::{Duration, Instant};

use braidcable::algebra::rational::int;
use braidcable::algebra::{LaurentPoly, Matrix, Rational, Ring};
use braidcable::braid::{
    artin_action_is_trivial, bigelow_element, cable_word, linking_numbers, pure_braid_generator, random_pure_word,
    BraidWord,
};
use braidcable::decomp::{
    build_theorem_rhs, cabled_burau, check_mod_h_reduction, check_series_linearization, commutant_dimension,
    determinant_check, verify_global_decomposition, verify_infinitesimal_decomposition, CabledBasis,
};
use braidcable::rep::{burau_rep, inf_burau, inf_cable_pullback, inf_sym, sym_rep, GeneratorRep, InfRep};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Leibniz expansion; independent of the elimination code.
fn leibniz_det(m: &Matrix<LaurentPoly>) -> LaurentPoly {
    fn go(
        m: &Matrix<LaurentPoly>,
        row: usize,
        used: &mut Vec<bool>,
        sign: i64,
        acc: LaurentPoly,
        out: &mut LaurentPoly,
    ) {
        let n = m.rows();
        if row == n {
            *out = out.add(&acc.mul(&LaurentPoly::from_int_terms(&[(0, sign)])));
            return;
        }
        for c in 0..n {
            if used[c] || m[(row, c)].is_zero() {
                continue;
            }
            // sign flips once per used column to the right of c
            let inversions = used[c + 1..].iter().filter(|&&u| u).count() as i64;
            used[c] = true;
            let s = if inversions % 2 == 0 { sign } else { -sign };
            go(m, row + 1, used, s, acc.mul(&m[(row, c)]), out);
            used[c] = false;
        }
    }
    let mut out = LaurentPoly::zero();
    go(m, 0, &mut vec![false; m.rows()], 1, LaurentPoly::one(), &mut out);
    out
}

fn signed_q_pow(sign: i64, e: i64) -> LaurentPoly {
    LaurentPoly::from_int_terms(&[(e, sign)])
}

fn criterion_1() -> Result<String, String> {
    let q = LaurentPoly::q();
    let qi = LaurentPoly::q_pow(-1);
    let mut count = 0;
    for n in 2..=6 {
        for (k, m) in burau_rep(n).unwrap().images().iter().enumerate() {
            let prod = &m.shift_diagonal(&q.neg()) * &m.shift_diagonal(&qi);
            if !prod.is_zero() {
                return Err(format!("Hecke relation fails for σ_{} in B_{n}", k + 1));
            }
            if leibniz_det(m) != signed_q_pow(-1, n as i64 - 2) {
                return Err(format!("det σ_{} in B_{n} is {}", k + 1, leibniz_det(m)));
            }
            count += 1;
        }
    }
    Ok(format!("{count} generators, (M - q)(M + q^-1) = 0 and det = -q^(n-2)"))
}

fn criterion_2() -> Result<String, String> {
    let mut count = 0;
    for n in 2..=4 {
        let mut reps: Vec<InfRep> = vec![inf_burau(n).unwrap(), inf_sym(n).unwrap()];
        for r in 1..=3 {
            reps.push(inf_cable_pullback(&inf_burau(n * r).unwrap(), n, r).unwrap());
        }
        for rho in reps {
            rho.check_relations().map_err(|v| format!("{}: {v}", rho.label()))?;
            count += 1;
        }
    }
    Ok(format!("{count} representations satisfy all relations"))
}

/// The chord formulas on the standard basis: `t_ij e_s^i = Σ_t e_t^j +
/// r(r-1) e_s^i` and `t_ij e_s^k = r² e_s^k` for `k ∉ {i, j}`.
fn cabled_chord_formulas_hold(n: usize, r: usize) -> bool {
    let rho = inf_cable_pullback(&inf_burau(n * r).unwrap(), n, r).unwrap();
    let basis = CabledBasis::new(n, r).unwrap();
    let unit = |a: usize| Matrix::from_fn(n * r, 1, |x, _| int(i64::from(x == a)));
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            for s in 1..=r {
                let mut want = unit(basis.index(i, s)).scale(&int((r * (r - 1)) as i64));
                for t in 1..=r {
                    want = &want + &unit(basis.index(j, t));
                }
                if rho.chord(i, j) * &unit(basis.index(i, s)) != want {
                    return false;
                }
                for k in (1..=n).filter(|&k| k != i && k != j) {
                    let e = unit(basis.index(k, s));
                    if rho.chord(i, j) * &e != e.scale(&int((r * r) as i64)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn criterion_3() -> Result<String, String> {
    let mut count = 0;
    for n in 2..=4 {
        for r in 2..=3 {
            if !cabled_chord_formulas_hold(n, r) {
                return Err(format!("chord formulas fail for (n, r) = ({n}, {r})"));
            }
            let report = verify_infinitesimal_decomposition(n, r).unwrap();
            if !report.verified {
                return Err(format!("({n}, {r}): {}", report.failure.unwrap_or_default()));
            }
            let mult: Vec<_> = report
                .block_structure
                .iter()
                .map(|b| (b.dimension, b.multiplicity))
                .collect();
            if mult != vec![(n, 1), (n, r - 1)] {
                return Err(format!("({n}, {r}): blocks {mult:?}"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} cases, exact blockwise equality"))
}

fn criterion_4() -> Result<String, String> {
    let mut dims = Vec::new();
    for (n, r) in [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (2, 4)] {
        let report = verify_global_decomposition(n, r).unwrap();
        if !report.verified {
            return Err(format!("({n}, {r}): {}", report.failure.unwrap_or_default()));
        }
        // recheck the certificate here, independently of the verifier
        let Some(braidcable::decomp::Intertwiner::RatFunc(m)) = &report.intertwiner else {
            return Err(format!("({n}, {r}): missing intertwiner"));
        };
        let inv = m.inverse().map_err(|e| format!("({n}, {r}): {e}"))?;
        let left = cabled_burau(n, r).unwrap();
        let right = build_theorem_rhs(n, r).unwrap();
        for i in 1..n {
            let conj = &(m * &left.image(i).to_ratfunc()) * &inv;
            if conj != right.image(i).to_ratfunc() {
                return Err(format!("({n}, {r}): conjugation fails at σ_{i}"));
            }
        }
        dims.push(format!("{}x{}", n * r, n * r));
    }
    Ok(format!("invertible intertwiners {}", dims.join(", ")))
}

fn criterion_5() -> Result<String, String> {
    for n in 2..=5 {
        for r in 1..=4 {
            let check = determinant_check(n, r).unwrap();
            // oracle: multiplicativity over the r² letters of the cabled crossing
            let big = burau_rep(n * r).unwrap();
            for i in 1..n {
                let word = cable_word(&BraidWord::generator(n, i as i64).unwrap(), r as i64).unwrap();
                let mut by_letters = LaurentPoly::one();
                for &k in word.letters() {
                    by_letters = by_letters.mul(&big.image(k as usize).determinant().unwrap());
                }
                if check.cabled[i - 1] != by_letters {
                    return Err(format!("({n}, {r}) σ_{i}: {} vs {by_letters}", check.cabled[i - 1]));
                }
            }
            if !check.consistent() {
                return Err(format!("({n}, {r}): sides differ"));
            }
        }
    }
    let two_two = determinant_check(2, 2).unwrap();
    if two_two.cabled[0] != LaurentPoly::q_pow(8) || two_two.theorem[0] != LaurentPoly::q_pow(8) {
        return Err("(2, 2) is not q^8 on both sides".into());
    }
    Ok("n ≤ 5, r ≤ 4 agree; (2,2) gives q^8 on both sides".into())
}

fn criterion_6() -> Result<String, String> {
    let beta = bigelow_element();
    if artin_action_is_trivial(&beta) {
        return Err("β acts trivially on the free group".into());
    }
    if !burau_rep(5).unwrap().eval_word(&beta).unwrap().is_identity() {
        return Err("R_bur(β) ≠ Id".into());
    }
    let cabled = cable_word(&beta, 2).unwrap();
    if !burau_rep(10).unwrap().eval_word(&cabled).unwrap().is_identity() {
        return Err("R_bur(Δ(β)) ≠ Id".into());
    }
    Ok(format!(
        "β ({} letters) nontrivial; both images exactly Id ({} letters in B_10)",
        beta.len(),
        cabled.len()
    ))
}

/// `d/dh` at `h = 0` of `p(e^{h/2})` is `p'(1)/2`.
fn first_order_oracle(m: &Matrix<LaurentPoly>) -> Matrix<Rational> {
    m.map(|p| {
        p.terms()
            .map(|(e, c)| c * Rational::from_integer(e.into()))
            .fold(Rational::zero(), |a, b| a + b)
            / Rational::from_integer(2.into())
    })
}

fn criterion_7() -> Result<String, String> {
    for n in 2..=6 {
        for rep in [burau_rep(n).unwrap(), sym_rep(n).unwrap()] {
            for (k, m) in rep.images().iter().enumerate() {
                let series = m.to_series(2).unwrap();
                let mut perm: Vec<usize> = (0..n).collect();
                perm.swap(k, k + 1);
                if series.coefficient(0) != Matrix::permutation(&perm) {
                    return Err(format!("{} σ_{} mod h", rep.label(), k + 1));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut words = 0;
    for n in [3, 4] {
        let pairs: [(GeneratorRep, InfRep); 2] = [
            (burau_rep(n).unwrap(), inf_burau(n).unwrap()),
            (sym_rep(n).unwrap(), inf_sym(n).unwrap()),
        ];
        for _ in 0..50 {
            let w = random_pure_word(n, 20, &mut rng).unwrap();
            let lk = linking_numbers(&w).unwrap();
            for (rep, rho) in &pairs {
                if !check_series_linearization(&w, rho, rep, 3).unwrap()
                    || !check_mod_h_reduction(&w, rho, rep, 3).unwrap()
                {
                    return Err(format!("{} fails on [{w}]", rep.label()));
                }
                let mut target = Matrix::zeros(n, n);
                for (&(a, b), &l) in &lk {
                    target = &target + &rho.chord(a, b).scale(&int(l));
                }
                let exact = rep.eval_word(&w).unwrap();
                if first_order_oracle(&exact) != target {
                    return Err(format!("{} derivative oracle fails on [{w}]", rep.label()));
                }
            }
            words += 1;
        }
    }
    Ok(format!(
        "mod-h for all generators; mod-h² for {words} random pure words, both pairs"
    ))
}

fn criterion_8() -> Result<String, String> {
    for n in [3, 4] {
        let d = commutant_dimension(&sym_rep(n).unwrap()).unwrap();
        if d != 1 {
            return Err(format!("commutant of R_sym({n}) has dimension {d}"));
        }
    }
    let c = BraidWord::commutator(
        &pure_braid_generator(3, 1, 2).unwrap(),
        &pure_braid_generator(3, 2, 3).unwrap(),
    )
    .unwrap();
    if !sym_rep(3).unwrap().eval_word(&c).unwrap().is_identity() {
        return Err("R_sym([ξ_12, ξ_23]) ≠ Id".into());
    }
    for n in 2..=6usize {
        let det_sq = leibniz_det(&burau_rep(n).unwrap().image(1).pow(2).unwrap());
        if det_sq != LaurentPoly::q_pow(2 * n as i64 - 4) {
            return Err(format!("det R_bur(σ_1)² = {det_sq} for n = {n}"));
        }
        for r in 2..=4usize {
            if det_sq == LaurentPoly::q_pow(-2 * (r * (r - 1) * n) as i64) {
                return Err(format!("framing criterion fails at (n, r) = ({n}, {r})"));
            }
        }
    }
    Ok("commutants 1; [ξ_12, ξ_23] ∈ Ker R_sym; q^(2n-4) ≠ q^(-2r(r-1)n)".into())
}

type Criterion = fn() -> Result<String, String>;

#[test]
fn acceptance() {
    let criteria: [(&str, Criterion, Duration); 8] = [
        ("Hecke relation", criterion_1, Duration::from_secs(1)),
        ("infinitesimal relations", criterion_2, Duration::from_secs(10)),
        ("infinitesimal decomposition", criterion_3, Duration::from_secs(10)),
        ("global decomposition", criterion_4, Duration::from_secs(300)),
        ("determinant consistency", criterion_5, Duration::from_secs(5)),
        ("Bigelow kernel", criterion_6, Duration::from_secs(300)),
        ("series bridge", criterion_7, Duration::from_secs(30)),
        ("irreducibility and framing", criterion_8, Duration::from_secs(10)),
    ];
    let mut failures = Vec::new();
    for (k, (name, run, budget)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let (passed, detail) = match result {
            Ok(d) if elapsed <= budget => (true, d),
            Ok(d) => (false, format!("{d}; over budget {budget:?}")),
            Err(e) => (false, e),
        };
        // straight to stdout so the lines survive test output capture
        let line = format!(
            "criterion {} {name}: {} ({elapsed:.2?}) {detail}\n",
            k + 1,
            if passed { "PASS" } else { "FAIL" }
        );
        let _ = std::io::stdout().write_all(line.as_bytes());
        if !passed {
            failures.push(k + 1);
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
