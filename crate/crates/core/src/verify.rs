//! Cross-checks the closed-form solution against the brute-force oracle.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::beatty;
use crate::modular::{classify, is_legal, modular_p_set, winning_move, GameParams};
use crate::oracle::{p_positions_of, solve_fast, BoardLabels};
use crate::wythoff::{is_wythoff_p, Label, Position};
use crate::{Error, Result};

/// Box side as a multiple of `m`: a rational `numer/denom ≥ 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxFactor {
    numer: u64,
    denom: u64,
}

impl BoxFactor {
    pub fn new(numer: u64, denom: u64) -> Result<Self> {
        if denom == 0 || numer < 2 * denom {
            return Err(Error::BoxFactor(format!("{numer}/{denom} is below 2")));
        }
        Ok(Self { numer, denom })
    }

    pub fn integer(k: u64) -> Result<Self> {
        Self::new(k, 1)
    }

    /// `⌈m · factor⌉`.
    pub fn side_for(&self, m: u64) -> u64 {
        (m as u128 * self.numer as u128).div_ceil(self.denom as u128) as u64
    }
}

impl Default for BoxFactor {
    fn default() -> Self {
        Self { numer: 3, denom: 1 }
    }
}

impl fmt::Display for BoxFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == 1 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom)
        }
    }
}

/// Accepts `3`, `5/2` or `2.5`.
impl FromStr for BoxFactor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BoxFactor(format!("cannot parse {s:?}"));
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n = n.trim().parse().map_err(|_| bad())?;
            let d = d.trim().parse().map_err(|_| bad())?;
            return Self::new(n, d);
        }
        if let Some((whole, frac)) = s.split_once('.') {
            if frac.is_empty() || frac.len() > 9 || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let whole: u64 = whole.parse().map_err(|_| bad())?;
            let denom = 10u64.pow(frac.len() as u32);
            let frac: u64 = frac.parse().map_err(|_| bad())?;
            let numer = whole
                .checked_mul(denom)
                .and_then(|w| w.checked_add(frac))
                .ok_or_else(bad)?;
            return Self::new(numer, denom);
        }
        Self::integer(s.parse().map_err(|_| bad())?)
    }
}

/// A box position where the closed form and the oracle disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub position: Position,
    pub expected: Label,
    pub oracle: Label,
}

/// Outcome of checking one modulus on one box.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub m: u64,
    pub box_side: u64,
    pub closed_form_count: u64,
    pub oracle_count: u64,
    /// Oracle P set equals the closed-form set, and every other box cell is N.
    pub sets_equal: bool,
    /// `oracle_count = 2⌊m/φ⌋ + 1`.
    pub count_formula_holds: bool,
    /// Every oracle P-position is a classic Wythoff P-position.
    pub subset_of_wythoff: bool,
    /// The winning-move engine agrees with the oracle on every box cell.
    pub strategy_sound: bool,
    pub mismatches: Vec<Mismatch>,
    /// Box cells where the engine's answer contradicts the oracle.
    pub strategy_failures: Vec<Position>,
    /// Set when the check could not run; all flags are then false.
    pub error: Option<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.error.is_none()
            && self.sets_equal
            && self.count_formula_holds
            && self.subset_of_wythoff
            && self.strategy_sound
    }

    fn failed(m: u64, box_side: u64, err: &Error) -> Self {
        Self {
            m,
            box_side,
            closed_form_count: 0,
            oracle_count: 0,
            sets_equal: false,
            count_formula_holds: false,
            subset_of_wythoff: false,
            strategy_sound: false,
            mismatches: Vec::new(),
            strategy_failures: Vec::new(),
            error: Some(err.to_string()),
        }
    }

    /// One `key=value` line.
    pub fn to_text(&self) -> String {
        let mut s = format!(
            "m={} box_side={} closed_count={} oracle_count={} sets_equal={} count_ok={} subset_ok={} strategy_ok={} mismatches={} strategy_failures={}",
            self.m,
            self.box_side,
            self.closed_form_count,
            self.oracle_count,
            self.sets_equal,
            self.count_formula_holds,
            self.subset_of_wythoff,
            self.strategy_sound,
            self.mismatches.len(),
            self.strategy_failures.len(),
        );
        if let Some(err) = &self.error {
            let _ = write!(s, " error={err:?}");
        }
        s
    }
}

/// CSV header for [`write_csv`].
pub const CSV_HEADER: &str =
    "m,box_side,closed_count,oracle_count,sets_equal,count_ok,subset_ok,strategy_ok";

#[derive(Serialize, Deserialize)]
struct CsvRow {
    m: u64,
    box_side: u64,
    closed_count: u64,
    oracle_count: u64,
    sets_equal: bool,
    count_ok: bool,
    subset_ok: bool,
    strategy_ok: bool,
}

/// Renders reports as CSV with [`CSV_HEADER`].
pub fn write_csv(reports: &[VerificationReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in reports {
        w.serialize(CsvRow {
            m: r.m,
            box_side: r.box_side,
            closed_count: r.closed_form_count,
            oracle_count: r.oracle_count,
            sets_equal: r.sets_equal,
            count_ok: r.count_formula_holds,
            subset_ok: r.subset_of_wythoff,
            strategy_ok: r.strategy_sound,
        })
        .expect("writing to memory");
    }
    if reports.is_empty() {
        return format!("{CSV_HEADER}\n");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv output is UTF-8")
}

fn check_against(params: GameParams, labels: &BoardLabels) -> Result<VerificationReport> {
    let m = params.m();
    let side = labels.n_max();
    let closed = modular_p_set(params)?;
    let oracle_p = p_positions_of(labels);

    let mut mismatches = Vec::new();
    let mut strategy_failures = Vec::new();
    for x in 0..=side {
        for y in 0..=side {
            let here = Position { x, y };
            let truth = labels.get(here);
            let expected = classify(here, params);
            if expected != truth {
                mismatches.push(Mismatch {
                    position: here,
                    expected,
                    oracle: truth,
                });
            }
            let sound = match winning_move(here, params) {
                None => truth == Label::P,
                Some(mv) => {
                    is_legal(here, mv, params)
                        && mv.apply(here).is_some_and(|to| labels.get(to) == Label::P)
                }
            };
            if !sound {
                strategy_failures.push(here);
            }
        }
    }
    let closed_sorted = closed.sorted_positions();
    let sets_equal = closed_sorted == oracle_p;
    // a closed-form element outside the box is a failure without a box mismatch
    debug_assert!(!sets_equal || mismatches.is_empty());

    Ok(VerificationReport {
        m,
        box_side: side,
        closed_form_count: closed.len() as u64,
        oracle_count: oracle_p.len() as u64,
        sets_equal,
        count_formula_holds: oracle_p.len() as u64 == 2 * beatty::a_of_m(m)? + 1,
        subset_of_wythoff: oracle_p.iter().all(|&p| is_wythoff_p(p)),
        strategy_sound: strategy_failures.is_empty(),
        mismatches,
        strategy_failures,
        error: None,
    })
}

/// Solves the box of side `⌈m·factor⌉` with the fast oracle and checks the
/// closed-form set, the count formula, the Wythoff-subset property and the
/// winning-move engine against it.
pub fn verify_m(m: u64, factor: BoxFactor) -> Result<VerificationReport> {
    let params = GameParams::new(m)?;
    let labels = solve_fast(params, factor.side_for(m))?;
    check_against(params, &labels)
}

/// Reports for a contiguous range of moduli.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeVerification {
    pub reports: Vec<VerificationReport>,
    pub all_pass: bool,
}

/// [`verify_m`] for every `m` in `m_lo..=m_hi`, in parallel. A failing `m`
/// is recorded in its report; the batch always completes.
pub fn verify_range(m_lo: u64, m_hi: u64, factor: BoxFactor) -> Result<RangeVerification> {
    if m_lo == 0 || m_hi < m_lo {
        return Err(Error::InvalidRange { lo: m_lo, hi: m_hi });
    }
    let reports: Vec<VerificationReport> = (m_lo..=m_hi)
        .into_par_iter()
        .map(|m| {
            verify_m(m, factor)
                .unwrap_or_else(|e| VerificationReport::failed(m, factor.side_for(m), &e))
        })
        .collect();
    let all_pass = reports.iter().all(VerificationReport::passed);
    Ok(RangeVerification { reports, all_pass })
}

/// One row of the P-position table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub m: u64,
    /// `⌊m/φ⌋`: the row's positions are `𝒫_cutoff`.
    pub cutoff: u64,
    /// In construction order: `(0, 0)`, then each pair lower-first, mirror second.
    pub positions: Vec<Position>,
}

impl TableRow {
    pub fn positions_text(&self) -> String {
        let parts: Vec<String> = self.positions.iter().map(Position::to_string).collect();
        parts.join(", ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PPositionTable {
    pub rows: Vec<TableRow>,
}

impl PPositionTable {
    /// Aligned `m | P-positions` table.
    pub fn to_text(&self) -> String {
        self.render("P-positions", TableRow::positions_text)
    }

    /// Aligned `m | P-positions` table naming each row's set as `P_i`.
    pub fn to_cutoff_text(&self) -> String {
        self.render("P-positions", |r| format!("P_{}", r.cutoff))
    }

    fn render(&self, heading: &str, cell: impl Fn(&TableRow) -> String) -> String {
        let width = self
            .rows
            .iter()
            .map(|r| r.m.to_string().len())
            .max()
            .unwrap_or(1);
        let mut out = format!("{:>width$} | {heading}\n", "m");
        for r in &self.rows {
            let _ = writeln!(out, "{:>width$} | {}", r.m, cell(r));
        }
        out
    }

    /// `m,cutoff,p_positions` rows.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["m", "cutoff", "p_positions"]).expect("writing to memory");
        for r in &self.rows {
            w.write_record([r.m.to_string(), r.cutoff.to_string(), r.positions_text()])
                .expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("writing to memory")).expect("csv output is UTF-8")
    }
}

/// The P-position table for the given moduli, taken from the closed form.
pub fn emit_table1(m_list: &[u64]) -> Result<PPositionTable> {
    let rows = m_list
        .iter()
        .map(|&m| {
            let params = GameParams::new(m)?;
            let set = modular_p_set(params)?;
            Ok(TableRow {
                m,
                cutoff: set.cutoff(),
                positions: set.positions().collect(),
            })
        })
        .collect::<Result<_>>()?;
    Ok(PPositionTable { rows })
}
