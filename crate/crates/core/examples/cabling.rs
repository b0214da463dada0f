//! Parallel cabling of braid words, checked against the Artin action on the
//! free group.

use braidcable::braid::{artin_action_is_trivial, cable_word, linking_numbers, pure_braid_generator, BraidWord};
use braidcable::rep::{burau_rep, cabling_pullback};
use braidcable::Result;

pub fn run_example() -> Result<()> {
    let w = BraidWord::parse(3, "1 -2")?;
    for r in 1..=3 {
        let c = cable_word(&w, r)?;
        println!("r = {r}: [{c}] in B_{}", c.strands());
    }

    // a braid relator stays trivial after cabling
    let relator = BraidWord::parse(3, "1 2 1 -2 -1 -2")?;
    let cabled = cable_word(&relator, 2)?;
    assert!(artin_action_is_trivial(&cabled));
    println!("cabled relator has {} letters and acts trivially", cabled.len());

    let xi = pure_braid_generator(3, 1, 3)?;
    let lk = linking_numbers(&cable_word(&xi, 2)?)?;
    let nonzero: Vec<_> = lk.iter().filter(|(_, &v)| v != 0).collect();
    println!("linking numbers of Δ(ξ_13): {nonzero:?}");

    let pulled = cabling_pullback(&burau_rep(6)?, 3, 2)?;
    println!("{} has dimension {}", pulled.label(), pulled.dim());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
