//! Exact analysis of m-Modular Wythoff's game.
//!
//! Two piles of tokens; a move either takes a positive number of tokens from
//! one pile (Type I) or positive amounts `k1`, `k2` from both piles with
//! `k1 ≡ k2 (mod m)` (Type II). The player who cannot move loses.
//!
//! The P-positions of this game are exactly the first `2⌊m/φ⌋ + 1` P-positions
//! of classic Wythoff's game. This crate provides:
//!
//! - [`beatty`]: float-free golden-ratio arithmetic (`⌊kφ⌋`, `⌊kφ²⌋`, `⌊m/φ⌋`).
//! - [`wythoff`]: classic Wythoff P-positions, closed form and recursive.
//! - [`modular`]: move rules, the closed-form P-position set, O(1)
//!   classification and a constructive winning-move engine.
//! - [`oracle`]: brute-force retrograde labeling of bounded boards that knows
//!   nothing about the golden ratio.
//! - [`verify`]: the harness that checks the closed form against the oracle.

pub mod beatty;
mod error;
pub mod modular;
pub mod oracle;
pub mod verify;
pub mod wythoff;

pub use error::{Error, Result};
pub use modular::{GameParams, IllegalMove, Move, MoveKind};
pub use wythoff::{Label, PPositionSet, Position};
