//! Brute-force ground truth: retrograde P/N labeling of the box
//! `[0, n_max]²`.
//!
//! Every move lowers at least one pile and raises none, so the box is closed
//! under moves and its labels are exact. Nothing here knows about the golden
//! ratio; the naive tier enumerates [`legal_moves`] and the fast tier uses an
//! equivalent row/column/residue formulation of the same rules.

use crate::modular::{legal_moves, GameParams};
use crate::wythoff::{Label, Position};
use crate::{Error, Result};

/// Largest box side for [`solve_naive`]; its cost grows like `n_max⁴`.
pub const NAIVE_LIMIT: u64 = 60;
/// Largest box side for [`solve_fast`].
pub const FAST_LIMIT: u64 = 5000;

/// P/N labels for every position of `[0, n_max]²`, stored as a bit-grid
/// (bit set = P).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoardLabels {
    n_max: u64,
    m: u64,
    bits: Vec<u64>,
}

impl BoardLabels {
    fn empty(n_max: u64, m: u64) -> Self {
        let cells = ((n_max + 1) * (n_max + 1)) as usize;
        Self {
            n_max,
            m,
            bits: vec![0; cells.div_ceil(64)],
        }
    }

    fn cell(&self, x: u64, y: u64) -> usize {
        (x * (self.n_max + 1) + y) as usize
    }

    fn mark_p(&mut self, x: u64, y: u64) {
        let c = self.cell(x, y);
        self.bits[c / 64] |= 1 << (c % 64);
    }

    fn is_p(&self, x: u64, y: u64) -> bool {
        let c = self.cell(x, y);
        self.bits[c / 64] >> (c % 64) & 1 == 1
    }

    pub fn n_max(&self) -> u64 {
        self.n_max
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// Label of `pos`.
    ///
    /// # Panics
    ///
    /// If `pos` lies outside the box.
    pub fn get(&self, pos: Position) -> Label {
        assert!(
            pos.x <= self.n_max && pos.y <= self.n_max,
            "{pos} outside box of side {}",
            self.n_max
        );
        if self.is_p(pos.x, pos.y) {
            Label::P
        } else {
            Label::N
        }
    }

    pub fn p_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }
}

fn check_tier(tier: &'static str, n_max: u64, limit: u64, hint: &'static str) -> Result<()> {
    if n_max > limit {
        return Err(Error::OracleRange {
            tier,
            n_max,
            limit,
            hint,
        });
    }
    Ok(())
}

/// Labels the box by the textbook recurrence: a position is N iff some
/// legal move reaches a P-position.
pub fn solve_naive(params: GameParams, n_max: u64) -> Result<BoardLabels> {
    check_tier("naive", n_max, NAIVE_LIMIT, "; use solve_fast for larger boards")?;
    let mut labels = BoardLabels::empty(n_max, params.m());
    // (x, y) ascending: every move target was labeled earlier
    for x in 0..=n_max {
        for y in 0..=n_max {
            let here = Position { x, y };
            let reaches_p = legal_moves(here, params).into_iter().any(|mv| {
                let to = mv.apply(here).expect("legal moves stay on the board");
                labels.is_p(to.x, to.y)
            });
            if !reaches_p {
                labels.mark_p(x, y);
            }
        }
    }
    Ok(labels)
}

/// Labels the box with the same result as [`solve_naive`], but tests
/// reachability of earlier P-positions directly:
///
/// - a P-position earlier in the same row or column is one Type I move away;
/// - a P-position `(u, v)` with `u < x`, `v < y` and `u − v ≡ x − y (mod m)`
///   is one Type II move away.
///
/// P-positions are bucketed by the residue of `u − v`, each bucket in
/// ascending `u`, so only one bucket is scanned per cell.
pub fn solve_fast(params: GameParams, n_max: u64) -> Result<BoardLabels> {
    check_tier("fast", n_max, FAST_LIMIT, "")?;
    let m = params.m();
    let mut labels = BoardLabels::empty(n_max, m);

    let side = n_max as i64;
    // Differences lie in [−n_max, n_max]; when m exceeds that span each
    // residue class holds a single difference and is indexed by it.
    let span = 2 * n_max + 1;
    let slots = m.min(span) as usize;
    let slot_of = |d: i64| {
        if m <= span {
            d.rem_euclid(m as i64) as usize
        } else {
            (d + side) as usize
        }
    };
    let mut buckets: Vec<Vec<(u64, u64)>> = vec![Vec::new(); slots];
    let mut column_has_p = vec![false; n_max as usize + 1];

    for x in 0..=n_max {
        let mut row_has_p = false;
        for y in 0..=n_max {
            if row_has_p || column_has_p[y as usize] {
                continue;
            }
            let bucket = &buckets[slot_of(x as i64 - y as i64)];
            let diagonal = bucket
                .iter()
                .take_while(|&&(u, _)| u < x)
                .any(|&(_, v)| v < y);
            if diagonal {
                continue;
            }
            labels.mark_p(x, y);
            row_has_p = true;
            column_has_p[y as usize] = true;
            buckets[slot_of(x as i64 - y as i64)].push((x, y));
        }
    }
    Ok(labels)
}

/// Classic Wythoff labels on the box. With `m = n_max + 1` no two distinct
/// removals within the box are congruent, so Type II collapses to equal
/// removal.
pub fn classic_wythoff_labels(n_max: u64) -> Result<BoardLabels> {
    check_tier("fast", n_max, FAST_LIMIT, "")?;
    solve_fast(GameParams::new(n_max + 1)?, n_max)
}

/// All P-labeled positions in lexicographic order.
pub fn p_positions_of(labels: &BoardLabels) -> Vec<Position> {
    let mut out = Vec::new();
    for x in 0..=labels.n_max {
        for y in 0..=labels.n_max {
            if labels.is_p(x, y) {
                out.push(Position { x, y });
            }
        }
    }
    out
}

/// Re-checks the P/N recurrence over the whole box with full move
/// enumeration; returns every position whose label disagrees with it.
pub fn recurrence_violations(labels: &BoardLabels) -> Result<Vec<Position>> {
    let params = GameParams::new(labels.m)?;
    let mut bad = Vec::new();
    for x in 0..=labels.n_max {
        for y in 0..=labels.n_max {
            let here = Position { x, y };
            let reaches_p = legal_moves(here, params).into_iter().any(|mv| {
                let to = mv.apply(here).expect("legal moves stay on the board");
                labels.is_p(to.x, to.y)
            });
            if reaches_p == labels.is_p(x, y) {
                bad.push(here);
            }
        }
    }
    Ok(bad)
}
