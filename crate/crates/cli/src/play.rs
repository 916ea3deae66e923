//! Terminal version of one play session.

use std::io::{BufRead, Write};

use modwythoff_core::modular::classify;
use modwythoff_core::{GameParams, Move, Position};

use crate::output::ClassifyOutput;
use crate::session::{SessionState, Status};

const HELP: &str = "moves: `1 K` (take K from pile 1), `2 K` (take K from pile 2), \
`b K1 K2` (take from both; K1 ≡ K2 mod m), `hint`, `quit`";

fn parse_move(line: &str) -> Option<Move> {
    let words: Vec<&str> = line.split_whitespace().collect();
    let num = |s: &str| s.parse::<u64>().ok();
    match words.as_slice() {
        ["1", k] => Some(Move::take_pile1(num(k)?)),
        ["2", k] => Some(Move::take_pile2(num(k)?)),
        ["b", k1, k2] => Some(Move::take_both(num(k1)?, num(k2)?)),
        _ => None,
    }
}

fn announce(out: &mut impl Write, state: &SessionState) -> std::io::Result<()> {
    match state.status {
        Status::Ongoing => writeln!(out, "position {}", state.current),
        Status::HumanLost => writeln!(out, "position {}: you cannot move, the engine wins", state.current),
        Status::EngineLost => writeln!(out, "position {}: the engine cannot move, you win", state.current),
    }
}

/// Runs a game on `input`/`out` until it ends or input runs out. Returns the
/// final session.
pub fn run(
    params: GameParams,
    start: Position,
    human_first: bool,
    input: impl BufRead,
    mut out: impl Write,
) -> std::io::Result<SessionState> {
    let mut state = SessionState::new("local".into(), params, start, human_first);
    writeln!(out, "m = {}; {HELP}", params.m())?;
    if let Some(step) = state.history.last() {
        writeln!(out, "engine plays {}", step.mv)?;
    }
    announce(&mut out, &state)?;
    let mut lines = input.lines();
    while state.status == Status::Ongoing {
        write!(out, "> ")?;
        out.flush()?;
        let Some(line) = lines.next().transpose()? else {
            break;
        };
        let line = line.trim();
        match line {
            "" => continue,
            "quit" | "q" => break,
            "hint" => {
                let label = classify(state.current, params);
                let text = ClassifyOutput::compute(state.current, params).to_text(state.current);
                writeln!(out, "{label}-position. {}", text.lines().nth(1).unwrap_or("no winning move exists"))?;
                continue;
            }
            _ => {}
        }
        let Some(mv) = parse_move(line) else {
            writeln!(out, "cannot parse {line:?}; {HELP}")?;
            continue;
        };
        match state.human_move(mv) {
            Ok(reply) => {
                if let Some(reply) = reply {
                    writeln!(out, "engine plays {reply}")?;
                }
                announce(&mut out, &state)?;
            }
            Err(e) => writeln!(out, "{e}")?,
        }
    }
    Ok(state)
}
