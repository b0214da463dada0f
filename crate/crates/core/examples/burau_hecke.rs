//! Burau and extended permutation images, the Hecke relation, and the
//! specialization `q = 1`.

use braidcable::algebra::LaurentPoly;
use braidcable::braid::BraidWord;
use braidcable::rep::{burau_rep, sym_rep};
use braidcable::Result;

pub fn run_example() -> Result<()> {
    let burau = burau_rep(4)?;
    println!("R_bur(σ2) in B_4:\n{}", burau.image(2));

    let q = LaurentPoly::q();
    let q_inv = LaurentPoly::q_pow(-1);
    for (i, m) in burau.images().iter().enumerate() {
        let hecke = m.shift_diagonal(&-q.clone()).checked_mul(&m.shift_diagonal(&q_inv))?;
        assert!(hecke.is_zero());
        println!("σ{}: (M - q)(M + q^-1) = 0, det = {}", i + 1, m.determinant()?);
    }

    let sym = sym_rep(3)?;
    let w = BraidWord::parse(3, "1 2 1")?;
    println!("R_sym(σ1σ2σ1):\n{}", sym.eval_word(&w)?);
    println!("at q = 1:\n{}", sym.specialize_at_one()[0]);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
