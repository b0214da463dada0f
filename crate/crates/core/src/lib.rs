pub mod algebra;
pub mod braid;
pub mod cli;
pub mod decomp;
pub mod error;
pub mod rep;
pub mod selftest;

pub use error::{Error, Result};
