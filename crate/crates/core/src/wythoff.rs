//! Classic Wythoff's game: positions, the P-position sets `𝒫_i`, and O(1)
//! membership in the infinite P-position set.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::beatty::{self, floor_phi, INDEX_CAP};
use crate::{Error, Result};

/// Two pile sizes, in pile order. Not normalized: `(1, 2)` and `(2, 1)` are
/// different positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Position {
    pub x: u64,
    pub y: u64,
}

impl Position {
    /// Checked constructor; both piles must be at most [`INDEX_CAP`].
    pub fn new(x: u64, y: u64) -> Result<Self> {
        for (what, value) in [("x", x), ("y", y)] {
            if value > INDEX_CAP {
                return Err(Error::OutOfRange {
                    what,
                    value,
                    cap: INDEX_CAP,
                });
            }
        }
        Ok(Self { x, y })
    }

    pub const fn origin() -> Self {
        Self { x: 0, y: 0 }
    }

    pub const fn swapped(self) -> Self {
        Self {
            x: self.y,
            y: self.x,
        }
    }

    pub const fn is_terminal(self) -> bool {
        self.x == 0 && self.y == 0
    }

    /// `(min, max)` of the two piles.
    pub fn sorted(self) -> (u64, u64) {
        (self.x.min(self.y), self.x.max(self.y))
    }

    /// Componentwise `self ≥ other`.
    pub fn dominates(self, other: Position) -> bool {
        self.x >= other.x && self.y >= other.y
    }

    pub fn strictly_dominates(self, other: Position) -> bool {
        self.dominates(other) && self != other
    }
}

impl From<(u64, u64)> for Position {
    fn from((x, y): (u64, u64)) -> Self {
        Self { x, y }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Outcome class of a position under normal play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    /// The previous player wins.
    P,
    /// The next player wins.
    N,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::P => "P",
            Label::N => "N",
        })
    }
}

/// The set `𝒫_c`: `(0, 0)` followed by `(⌊iφ⌋, ⌊iφ⌋+i)` and `(⌊iφ⌋+i, ⌊iφ⌋)`
/// for `i = 1..=c`, each tagged with its index `i`.
///
/// Entries are kept in that order, so entry `2i − 1` is the lower-first pair
/// of index `i` and entry `2i` its mirror.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PPositionSet {
    cutoff: u64,
    entries: Vec<(u64, Position)>,
}

impl PPositionSet {
    pub fn cutoff(&self) -> u64 {
        self.cutoff
    }

    /// Always `2·cutoff + 1`.
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `(index, position)` pairs in construction order.
    pub fn entries(&self) -> &[(u64, Position)] {
        &self.entries
    }

    pub fn positions(&self) -> impl Iterator<Item = Position> + '_ {
        self.entries.iter().map(|&(_, p)| p)
    }

    /// Positions in lexicographic `(x, y)` order.
    pub fn sorted_positions(&self) -> Vec<Position> {
        let mut out: Vec<Position> = self.positions().collect();
        out.sort_unstable();
        out
    }

    pub fn contains(&self, pos: Position) -> bool {
        let (a, b) = pos.sorted();
        let d = b - a;
        if d > self.cutoff {
            return false;
        }
        let slot = if d == 0 { 0 } else { 2 * d as usize - 1 };
        self.entries[slot].1.sorted() == (a, b)
    }

    /// The Wythoff index `i` that produced `pos`, if it is a member.
    pub fn index_of(&self, pos: Position) -> Option<u64> {
        self.contains(pos).then(|| pos.sorted().1 - pos.sorted().0)
    }
}

fn check_cutoff(cutoff: u64, limit: u64) -> Result<()> {
    if cutoff > limit {
        return Err(Error::OutOfRange {
            what: "cutoff",
            value: cutoff,
            cap: limit,
        });
    }
    Ok(())
}

// Each entry is a Vec slot; keep the closed-form builder well inside memory.
const CLOSED_FORM_LIMIT: u64 = 1 << 22;

/// Builds `𝒫_cutoff` from the closed form `(⌊iφ⌋, ⌊iφ²⌋)`.
pub fn wythoff_p_set(cutoff: u64) -> Result<PPositionSet> {
    check_cutoff(cutoff, CLOSED_FORM_LIMIT.min(INDEX_CAP))?;
    let mut entries = Vec::with_capacity(2 * cutoff as usize + 1);
    entries.push((0, Position::origin()));
    for i in 1..=cutoff {
        let lo = floor_phi(i);
        let hi = lo + i;
        entries.push((i, Position { x: lo, y: hi }));
        entries.push((i, Position { x: hi, y: lo }));
    }
    Ok(PPositionSet { cutoff, entries })
}

/// Largest cutoff accepted by [`wythoff_recursive_p_set`].
pub const RECURSIVE_LIMIT: u64 = 100_000;

/// Builds `𝒫_cutoff` by the literal recursion: at step `i`, take the smallest
/// positive integer `a` not yet used by any pair and add `(a, a+i)`, `(a+i, a)`.
///
/// Only used to cross-check [`wythoff_p_set`].
pub fn wythoff_recursive_p_set(cutoff: u64) -> Result<PPositionSet> {
    check_cutoff(cutoff, RECURSIVE_LIMIT)?;
    let n = cutoff as usize;
    // a_i < 2i and a_i + i < 3i, so 3·cutoff + 2 slots always suffice
    let mut used = vec![false; 3 * n + 2];
    used[0] = true;
    let mut entries = Vec::with_capacity(2 * n + 1);
    entries.push((0, Position::origin()));
    let mut a = 0usize;
    for i in 1..=n {
        while used[a] {
            a += 1;
        }
        used[a] = true;
        used[a + i] = true;
        let (lo, hi) = (a as u64, (a + i) as u64);
        entries.push((i as u64, Position { x: lo, y: hi }));
        entries.push((i as u64, Position { x: hi, y: lo }));
    }
    Ok(PPositionSet { cutoff, entries })
}

/// O(1) membership in the infinite set `𝒫` of classic Wythoff P-positions:
/// with `a ≤ b` the sorted piles, `(a, b) ∈ 𝒫` iff `a = ⌊(b−a)φ⌋`.
pub fn is_wythoff_p(pos: Position) -> bool {
    let (a, b) = pos.sorted();
    a == floor_phi(b - a)
}

/// Lower-first Wythoff pair of index `i`.
pub fn wythoff_pair(i: u64) -> Result<Position> {
    Ok(Position {
        x: beatty::lower_wythoff(i)?,
        y: beatty::upper_wythoff(i)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set_of(p: &PPositionSet) -> Vec<(u64, u64)> {
        p.positions().map(|q| (q.x, q.y)).collect()
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(set_of(&wythoff_p_set(0).unwrap()), [(0, 0)]);
        assert_eq!(set_of(&wythoff_p_set(1).unwrap()), [(0, 0), (1, 2), (2, 1)]);
        assert_eq!(
            set_of(&wythoff_p_set(2).unwrap()),
            [(0, 0), (1, 2), (2, 1), (3, 5), (5, 3)]
        );
    }

    #[test]
    fn recursive_examples() {
        assert_eq!(set_of(&wythoff_recursive_p_set(0).unwrap()), [(0, 0)]);
        assert_eq!(
            set_of(&wythoff_recursive_p_set(1).unwrap()),
            [(0, 0), (1, 2), (2, 1)]
        );
        let p3 = wythoff_recursive_p_set(3).unwrap();
        assert!(p3.contains((4, 7).into()));
        assert!(p3.contains((7, 4).into()));
        assert!(wythoff_recursive_p_set(RECURSIVE_LIMIT + 1).is_err());
    }

    #[test]
    fn closed_form_matches_recursion() {
        let big = wythoff_recursive_p_set(2000).unwrap();
        for c in 0..=2000 {
            let closed = wythoff_p_set(c).unwrap();
            assert_eq!(closed.len(), 2 * c as usize + 1);
            assert_eq!(closed.entries(), &big.entries()[..closed.len()], "c={c}");
        }
        assert_eq!(wythoff_p_set(2000).unwrap(), big);
    }

    #[test]
    fn classification_examples() {
        assert!(is_wythoff_p((0, 0).into()));
        assert!(is_wythoff_p((4, 7).into()));
        assert!(is_wythoff_p((7, 4).into()));
        assert!(!is_wythoff_p((2, 2).into()));
        assert!(!is_wythoff_p((0, 1).into()));
    }

    #[test]
    fn membership_consistent_on_covered_range() {
        let c = 60;
        let set = wythoff_p_set(c).unwrap();
        let bound = floor_phi(c);
        let mut hits = 0;
        for x in 0..=bound {
            for y in 0..=bound {
                let p = Position { x, y };
                assert_eq!(is_wythoff_p(p), set.contains(p), "{p}");
                hits += usize::from(set.contains(p));
            }
        }
        // every lower-first pair with upper member ≤ ⌊cφ⌋ lies in the square
        assert!(hits > 0 && hits <= set.len());
    }

    #[test]
    fn index_of_and_contains() {
        let set = wythoff_p_set(5).unwrap();
        assert_eq!(set.index_of((4, 7).into()), Some(3));
        assert_eq!(set.index_of((0, 0).into()), Some(0));
        assert_eq!(set.index_of((2, 2).into()), None);
        assert!(!set.contains((9, 15).into())); // index 6, beyond cutoff
        assert!(wythoff_p_set(6).unwrap().contains((9, 15).into()));
    }

    #[test]
    fn position_helpers() {
        let p = Position::new(3, 5).unwrap();
        assert_eq!(p.swapped(), Position { x: 5, y: 3 });
        assert_eq!(p.to_string(), "(3, 5)");
        assert!(p.strictly_dominates((3, 4).into()));
        assert!(!p.strictly_dominates(p));
        assert!(Position::new(INDEX_CAP + 1, 0).is_err());
        assert_eq!(wythoff_pair(3).unwrap(), Position { x: 4, y: 7 });
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(10_000))]
            #[test]
            fn classification_is_symmetric(x in 0..=INDEX_CAP, y in 0..=INDEX_CAP) {
                let p = Position { x, y };
                prop_assert_eq!(is_wythoff_p(p), is_wythoff_p(p.swapped()));
            }

            #[test]
            fn pairs_are_p(i in 0..=INDEX_CAP / 2) {
                let p = wythoff_pair(i).unwrap();
                prop_assert!(is_wythoff_p(p));
                let bumped = Position { x: p.x, y: p.y + 1 };
                prop_assert!(!is_wythoff_p(bumped));
            }
        }
    }
}
