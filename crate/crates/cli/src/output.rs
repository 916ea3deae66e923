//! Response shapes shared by the CLI `--format json` output and the HTTP API.

use modwythoff_core::modular::{classify, modular_p_set, winning_move};
use modwythoff_core::{Error, GameParams, Label, Move, Position, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyOutput {
    pub label: Label,
    pub winning_move: Option<Move>,
}

impl ClassifyOutput {
    pub fn compute(pos: Position, params: GameParams) -> Self {
        Self {
            label: classify(pos, params),
            winning_move: winning_move(pos, params),
        }
    }

    pub fn to_text(&self, pos: Position) -> String {
        match self.winning_move {
            None => format!("{}\n", self.label),
            Some(mv) => {
                let to = mv.apply(pos).expect("winning moves are legal");
                format!("{}\nwinning move: {mv} -> {to}\n", self.label)
            }
        }
    }
}

/// Largest modulus whose P-position list is materialized (about 1.2M entries).
pub const PPOSITIONS_M_LIMIT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PPositionsOutput {
    pub count: usize,
    /// Lexicographic order.
    pub positions: Vec<Position>,
}

impl PPositionsOutput {
    pub fn compute(params: GameParams) -> Result<Self> {
        if params.m() > PPOSITIONS_M_LIMIT {
            return Err(Error::OutOfRange {
                what: "m",
                value: params.m(),
                cap: PPOSITIONS_M_LIMIT,
            });
        }
        let positions = modular_p_set(params)?.sorted_positions();
        Ok(Self {
            count: positions.len(),
            positions,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("count: {}\n", self.count);
        for p in &self.positions {
            out.push_str(&p.to_string());
            out.push('\n');
        }
        out
    }
}
