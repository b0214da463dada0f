//! Exact isomorphism between the cabled Burau representation and a framed,
//! twisted sum of Burau and extended permutation representations.

use braidcable::decomp::{build_theorem_rhs, determinant_check, verify_global_decomposition, Intertwiner};
use braidcable::Result;

pub fn run_example() -> Result<()> {
    let rhs = build_theorem_rhs(2, 2)?;
    println!("{}\nσ1 ↦\n{}", rhs.label(), rhs.image(1));

    let report = verify_global_decomposition(2, 2)?;
    print!("{report}");
    if let Some(Intertwiner::RatFunc(x)) = &report.intertwiner {
        println!("intertwiner:\n{x}");
    }
    assert!(report.verified);

    let report = verify_global_decomposition(3, 2)?;
    println!("(3, 2) verified: {}", report.verified);

    let det = determinant_check(2, 3)?;
    println!(
        "(2, 3) determinants agree: {} (each {})",
        det.consistent(),
        det.predicted
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
