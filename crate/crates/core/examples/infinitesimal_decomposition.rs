//! The cabled infinitesimal Burau representation splits into a shifted,
//! rescaled infinitesimal Burau block plus `r - 1` copies of a shifted
//! infinitesimal permutation block.

use braidcable::decomp::{verify_infinitesimal_decomposition, CabledBasis};
use braidcable::rep::{inf_burau, inf_cable_pullback};
use braidcable::Result;

pub fn run_example() -> Result<()> {
    let pulled = inf_cable_pullback(&inf_burau(4)?, 2, 2)?;
    pulled.check_relations().expect("pullback satisfies the relations");
    println!("t_12 on the cabled space:\n{}", pulled.chord(1, 2));

    let basis = CabledBasis::new(2, 2)?;
    println!("change of basis:\n{}", basis.change_of_basis());

    for (n, r) in [(2, 2), (3, 2), (2, 3)] {
        let report = verify_infinitesimal_decomposition(n, r)?;
        print!("{report}");
        assert!(report.verified);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
