//! The m-Modular Wythoff ruleset and its exact solution.
//!
//! The P-positions for modulus `m` are `𝒫_{a_m}` with `a_m = ⌊m/φ⌋`: the
//! classic Wythoff pairs whose pile difference is at most `a_m`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::beatty::{self, floor_phi, INDEX_CAP};
use crate::wythoff::{self, is_wythoff_p, Label, PPositionSet, Position};
use crate::{Error, Result};

/// The ruleset: Type II removals must agree modulo `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GameParams {
    m: u64,
    a_m: u64,
}

impl GameParams {
    pub fn new(m: u64) -> Result<Self> {
        let a_m = beatty::a_of_m(m)?;
        Ok(Self { m, a_m })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// `⌊m/φ⌋`, the cutoff index of the P-position set.
    pub fn a_m(&self) -> u64 {
        self.a_m
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    #[serde(rename = "TypeI-pile1")]
    TypeIPile1,
    #[serde(rename = "TypeI-pile2")]
    TypeIPile2,
    #[serde(rename = "TypeII")]
    TypeII,
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoveKind::TypeIPile1 => "TypeI-pile1",
            MoveKind::TypeIPile2 => "TypeI-pile2",
            MoveKind::TypeII => "TypeII",
        })
    }
}

/// A move: `k1` tokens taken from pile 1 and `k2` from pile 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Move {
    pub kind: MoveKind,
    pub k1: u64,
    pub k2: u64,
}

impl Move {
    pub const fn take_pile1(k: u64) -> Self {
        Self {
            kind: MoveKind::TypeIPile1,
            k1: k,
            k2: 0,
        }
    }

    pub const fn take_pile2(k: u64) -> Self {
        Self {
            kind: MoveKind::TypeIPile2,
            k1: 0,
            k2: k,
        }
    }

    pub const fn take_both(k1: u64, k2: u64) -> Self {
        Self {
            kind: MoveKind::TypeII,
            k1,
            k2,
        }
    }

    /// The move removing `(k1, k2)`, with its kind inferred from which piles
    /// are touched. `None` for `(0, 0)`.
    pub fn from_removals(k1: u64, k2: u64) -> Option<Self> {
        match (k1, k2) {
            (0, 0) => None,
            (k, 0) => Some(Self::take_pile1(k)),
            (0, k) => Some(Self::take_pile2(k)),
            (a, b) => Some(Self::take_both(a, b)),
        }
    }

    /// Same move with the piles exchanged.
    pub fn swapped(self) -> Self {
        let kind = match self.kind {
            MoveKind::TypeIPile1 => MoveKind::TypeIPile2,
            MoveKind::TypeIPile2 => MoveKind::TypeIPile1,
            MoveKind::TypeII => MoveKind::TypeII,
        };
        Self {
            kind,
            k1: self.k2,
            k2: self.k1,
        }
    }

    /// Resulting position, or `None` if a pile would go negative.
    pub fn apply(self, pos: Position) -> Option<Position> {
        Some(Position {
            x: pos.x.checked_sub(self.k1)?,
            y: pos.y.checked_sub(self.k2)?,
        })
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} k1={} k2={}", self.kind, self.k1, self.k2)
    }
}

/// Why a move is rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum IllegalMove {
    #[error("zero removal: a move must take at least one token from every pile it touches")]
    ZeroRemoval,
    #[error("{kind} may not take tokens from the other pile")]
    WrongPile { kind: MoveKind },
    #[error("congruence failure: {k1} and {k2} differ modulo {m}")]
    Congruence { k1: u64, k2: u64, m: u64 },
    #[error("exceeds pile: cannot take {requested} from pile {pile} holding {available}")]
    ExceedsPile {
        pile: u8,
        requested: u64,
        available: u64,
    },
}

impl IllegalMove {
    /// Short machine-readable rule name.
    pub fn rule(&self) -> &'static str {
        match self {
            IllegalMove::ZeroRemoval => "zero_removal",
            IllegalMove::WrongPile { .. } => "wrong_pile",
            IllegalMove::Congruence { .. } => "congruence",
            IllegalMove::ExceedsPile { .. } => "exceeds_pile",
        }
    }
}

/// Checks `mv` against the move rules at `pos`, naming the first violated rule.
pub fn check_move(pos: Position, mv: Move, params: GameParams) -> Result<(), IllegalMove> {
    let m = params.m;
    match mv.kind {
        MoveKind::TypeIPile1 => {
            if mv.k1 == 0 {
                return Err(IllegalMove::ZeroRemoval);
            }
            if mv.k2 != 0 {
                return Err(IllegalMove::WrongPile { kind: mv.kind });
            }
        }
        MoveKind::TypeIPile2 => {
            if mv.k2 == 0 {
                return Err(IllegalMove::ZeroRemoval);
            }
            if mv.k1 != 0 {
                return Err(IllegalMove::WrongPile { kind: mv.kind });
            }
        }
        MoveKind::TypeII => {
            if mv.k1 == 0 || mv.k2 == 0 {
                return Err(IllegalMove::ZeroRemoval);
            }
            if mv.k1 % m != mv.k2 % m {
                return Err(IllegalMove::Congruence {
                    k1: mv.k1,
                    k2: mv.k2,
                    m,
                });
            }
        }
    }
    if mv.k1 > pos.x {
        return Err(IllegalMove::ExceedsPile {
            pile: 1,
            requested: mv.k1,
            available: pos.x,
        });
    }
    if mv.k2 > pos.y {
        return Err(IllegalMove::ExceedsPile {
            pile: 2,
            requested: mv.k2,
            available: pos.y,
        });
    }
    Ok(())
}

pub fn is_legal(pos: Position, mv: Move, params: GameParams) -> bool {
    check_move(pos, mv, params).is_ok()
}

/// Every legal move from `pos`: Type I on pile 1 by ascending amount, then
/// Type I on pile 2, then Type II in lexicographic `(k1, k2)` order.
pub fn legal_moves(pos: Position, params: GameParams) -> Vec<Move> {
    let m = params.m;
    let mut out: Vec<Move> = (1..=pos.x)
        .map(Move::take_pile1)
        .chain((1..=pos.y).map(Move::take_pile2))
        .collect();
    for k1 in 1..=pos.x {
        let first = match k1 % m {
            0 => m,
            r => r,
        };
        let mut k2 = first;
        while k2 <= pos.y {
            out.push(Move::take_both(k1, k2));
            k2 = match k2.checked_add(m) {
                Some(next) => next,
                None => break,
            };
        }
    }
    out
}

/// The P-positions of the game: `𝒫_{a_m}`, of size `2⌊m/φ⌋ + 1`.
pub fn modular_p_set(params: GameParams) -> Result<PPositionSet> {
    wythoff::wythoff_p_set(params.a_m)
}

/// O(1): `P` iff `pos` is a classic Wythoff P-position with pile difference
/// at most `⌊m/φ⌋`.
pub fn classify(pos: Position, params: GameParams) -> Label {
    let (a, b) = pos.sorted();
    if b - a <= params.a_m && is_wythoff_p(pos) {
        Label::P
    } else {
        Label::N
    }
}

/// Which case of the constructive strategy produced a winning move.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StrategyCase {
    /// Smaller pile empty: empty the other one.
    EmptyPile,
    /// Smaller pile `< m` is an upper Wythoff number `⌊iφ⌋+i`: cut the larger
    /// pile to `⌊iφ⌋`.
    UpperPartner,
    /// Smaller pile `< m` is `⌊iφ⌋` and the larger exceeds `⌊iφ⌋+i`: cut the
    /// larger pile to `⌊iφ⌋+i`.
    LowerPartner,
    /// Smaller pile `< m` is `⌊iφ⌋` and the difference `d` is below `i`:
    /// equal removal down to the pair of difference `d`.
    EqualRemoval,
    /// Smaller pile `≥ m`, `r = (q2−q1) mod m ≤ ⌊m/φ⌋`: move to the pair of
    /// difference `r`, larger pile kept larger.
    ResidueSameSide,
    /// Smaller pile `≥ m`, `r > ⌊m/φ⌋`: move to the pair of difference
    /// `m − r` with the larger pile becoming the smaller.
    ResidueFlipped,
}

/// The winning move together with the strategy case that produced it.
pub fn winning_move_with_case(pos: Position, params: GameParams) -> Option<(Move, StrategyCase)> {
    if classify(pos, params) == Label::P {
        return None;
    }
    let m = params.m;
    let swap = pos.x > pos.y;
    let (q1, q2) = pos.sorted();

    // Target in the sorted frame: t1 on q1's pile, t2 on q2's pile.
    let (t1, t2, case) = if q1 == 0 {
        (0, 0, StrategyCase::EmptyPile)
    } else if q1 < m {
        if let Some(i) = beatty::upper_wythoff_inverse(q1) {
            (q1, floor_phi(i), StrategyCase::UpperPartner)
        } else {
            let i = beatty::lower_wythoff_inverse(q1)
                .expect("every positive integer is a lower or upper Wythoff number");
            let partner = q1 + i;
            if q2 >= partner {
                (q1, partner, StrategyCase::LowerPartner)
            } else {
                let d = q2 - q1;
                let lo = floor_phi(d);
                (lo, lo + d, StrategyCase::EqualRemoval)
            }
        }
    } else {
        let r = (q2 - q1) % m;
        if r <= params.a_m {
            let lo = floor_phi(r);
            (lo, lo + r, StrategyCase::ResidueSameSide)
        } else {
            let s = m - r;
            let lo = floor_phi(s);
            (lo + s, lo, StrategyCase::ResidueFlipped)
        }
    };

    let (first, second) = (q1 - t1, q2 - t2);
    let (k1, k2) = if swap {
        (second, first)
    } else {
        (first, second)
    };
    let mv = Move::from_removals(k1, k2).expect("an N-position is never its own target");
    Some((mv, case))
}

/// A move from `pos` into `𝒫_{a_m}`, or `None` when `pos` is already a
/// P-position.
///
/// Deterministic: the sorted position `(q1, q2)` is matched against the
/// [`StrategyCase`]s in declaration order. For `x = y` the second pile plays
/// the role of the larger one.
pub fn winning_move(pos: Position, params: GameParams) -> Option<Move> {
    winning_move_with_case(pos, params).map(|(mv, _)| mv)
}

/// Two consecutive Type II moves as one Type II move.
pub fn compose_type2(first: Move, second: Move, params: GameParams) -> Result<Move> {
    for mv in [first, second] {
        if mv.kind != MoveKind::TypeII {
            return Err(Error::NotTypeTwo(mv.kind));
        }
    }
    let sum = |a: u64, b: u64| {
        a.checked_add(b).filter(|&s| s <= INDEX_CAP).ok_or(Error::OutOfRange {
            what: "combined removal",
            value: a.saturating_add(b),
            cap: INDEX_CAP,
        })
    };
    let out = Move::take_both(sum(first.k1, second.k1)?, sum(first.k2, second.k2)?);
    debug_assert_eq!(out.k1 % params.m, out.k2 % params.m);
    Ok(out)
}
