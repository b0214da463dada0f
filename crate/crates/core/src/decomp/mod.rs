//! Constructive checks of the cabling decomposition, its infinitesimal
//! version, and the resulting kernel equality.

mod global;
mod infinitesimal;
mod kernel;
mod report;
mod series;

pub use global::{
    build_theorem_rhs, cabled_burau, commutant_dimension, determinant_check, determinant_consistency,
    framing_criterion, verify_global_decomposition, DeterminantCheck,
};
pub use infinitesimal::{infinitesimal_target, verify_infinitesimal_decomposition, CabledBasis};
pub use kernel::{kernel_equivalence_check, kernel_membership, KernelVerdict, Membership, Witness};
pub use report::{Block, DecompositionReport, Intertwiner};
pub use series::{check_mod_h_reduction, check_series_linearization, linearization_target, series_image};
