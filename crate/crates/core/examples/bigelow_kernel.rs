//! Bigelow's braid lies in the kernel of the Burau representation of `B_5`
//! and its 2-cable lies in the kernel on `B_10`.

use braidcable::braid::{artin_action_is_trivial, bigelow_element, pure_braid_generator};
use braidcable::decomp::kernel_equivalence_check;
use braidcable::Result;

pub fn run_example() -> Result<()> {
    let beta = bigelow_element();
    println!("β has {} letters; pure: {}", beta.len(), beta.is_pure());
    println!("β acts trivially on F_5: {}", artin_action_is_trivial(&beta));

    let verdict = kernel_equivalence_check(&beta, 2)?;
    println!("{}", verdict.to_json());
    assert!(verdict.in_ker_burau() && verdict.in_ker_cabled());

    let xi = pure_braid_generator(3, 1, 3)?;
    let verdict = kernel_equivalence_check(&xi, 3)?;
    println!("{}", verdict.to_json());
    assert!(verdict.agree());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
