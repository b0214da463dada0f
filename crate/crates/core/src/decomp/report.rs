use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{Matrix, RatFunc, Rational};

/// One isotypic piece of a decomposition.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Block {
    pub label: String,
    pub dimension: usize,
    pub multiplicity: usize,
}

/// Change of basis certifying a decomposition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Intertwiner {
    Rational(Matrix<Rational>),
    RatFunc(Matrix<RatFunc>),
}

impl Intertwiner {
    pub fn dim(&self) -> usize {
        match self {
            Intertwiner::Rational(m) => m.rows(),
            Intertwiner::RatFunc(m) => m.rows(),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Intertwiner::Rational(m) => m.to_json(),
            Intertwiner::RatFunc(m) => m.to_json(),
        }
    }
}

/// Outcome of a decomposition check: `intertwiner · left · intertwiner^{-1}`
/// equals `right` exactly when `verified` holds.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DecompositionReport {
    pub n: usize,
    pub r: usize,
    pub left_label: String,
    pub right_label: String,
    pub verified: bool,
    pub block_structure: Vec<Block>,
    pub intertwiner: Option<Intertwiner>,
    /// Dimension of the space of intertwiners, when it was computed.
    pub solution_space_dim: Option<usize>,
    /// First failing entry or reason, when not verified.
    pub failure: Option<String>,
}

impl DecompositionReport {
    pub fn dimension(&self) -> usize {
        self.block_structure.iter().map(|b| b.dimension * b.multiplicity).sum()
    }

    pub fn to_json(&self, emit_intertwiner: bool) -> Value {
        let mut v = json!({
            "n": self.n,
            "r": self.r,
            "left": self.left_label,
            "right": self.right_label,
            "verified": self.verified,
            "dimension": self.dimension(),
            "blocks": self.block_structure,
            "solution_space_dim": self.solution_space_dim,
            "failure": self.failure,
        });
        if emit_intertwiner {
            v["intertwiner"] = self.intertwiner.as_ref().map_or(Value::Null, Intertwiner::to_json);
        }
        v
    }
}

impl std::fmt::Display for DecompositionReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let status = if self.verified { "verified" } else { "NOT verified" };
        writeln!(f, "n = {}, r = {}: {status}", self.n, self.r)?;
        writeln!(f, "  left:  {}", self.left_label)?;
        writeln!(f, "  right: {}", self.right_label)?;
        for b in &self.block_structure {
            writeln!(f, "  block {} (dim {}) x{}", b.label, b.dimension, b.multiplicity)?;
        }
        if let Some(d) = self.solution_space_dim {
            writeln!(f, "  intertwiner space dimension: {d}")?;
        }
        if let Some(msg) = &self.failure {
            writeln!(f, "  failure: {msg}")?;
        }
        Ok(())
    }
}

/// `[(burau-like, n, 1), (sym-like, n, r-1)]`, dropping empty blocks.
pub(crate) fn cabling_blocks(n: usize, r: usize, burau: String, sym: String) -> Vec<Block> {
    let mut blocks = vec![Block {
        label: burau,
        dimension: n,
        multiplicity: 1,
    }];
    if r > 1 {
        blocks.push(Block {
            label: sym,
            dimension: n,
            multiplicity: r - 1,
        });
    }
    blocks
}
