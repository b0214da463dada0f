//! Braid group representations over `Q[q, q^{-1}]` and their infinitesimal
//! counterparts over `Q`.

mod global;
mod infinitesimal;

pub use global::{burau_rep, cabling_pullback, direct_sum, frame, sym_rep, twist, GeneratorRep};
pub use infinitesimal::{
    inf_burau, inf_cable_pullback, inf_direct_sum, inf_scale, inf_shift, inf_sym, InfRep, RelationViolation,
};
