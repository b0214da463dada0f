//! Expanding at `q = e^{h/2}`: a pure braid acts as
//! `Id + h Σ lk_ab ρ(t_ab)` modulo `h²`.

use braidcable::braid::{linking_numbers, random_pure_word};
use braidcable::decomp::{check_series_linearization, series_image};
use braidcable::rep::{burau_rep, inf_burau};
use braidcable::Result;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (rep, rho) = (burau_rep(3)?, inf_burau(3)?);
    let w = random_pure_word(3, 12, &mut rng)?;
    println!("w = [{w}], linking numbers {:?}", linking_numbers(&w)?);

    let s = series_image(&rep, &w, 3)?;
    println!("h^0:\n{}\nh^1:\n{}", s.coefficient(0), s.coefficient(1));
    assert!(check_series_linearization(&w, &rho, &rep, 3)?);
    println!("matches Id + h Σ lk ρ(t) to first order");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
