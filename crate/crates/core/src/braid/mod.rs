//! Braid words and their combinatorics.

mod artin;
pub mod bigelow;
mod cabling;
mod pure;
mod word;

pub use artin::{artin_action, artin_action_is_trivial, FreeGroupWord};
pub use bigelow::bigelow_element;
pub use cabling::{block_crossing, cable_word};
pub use pure::{linking_numbers, pure_braid_generator, random_pure_word, LinkingNumbers};
pub use word::BraidWord;
