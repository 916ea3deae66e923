//! A human-versus-engine game under normal play.

use modwythoff_core::modular::{check_move, winning_move};
use modwythoff_core::{GameParams, IllegalMove, Move, Position};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Player {
    Human,
    Engine,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ongoing,
    HumanLost,
    EngineLost,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistoryStep {
    pub player: Player,
    #[serde(rename = "move")]
    pub mv: Move,
    pub position: Position,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SessionError {
    #[error("the game is over")]
    GameOver,
    #[error("illegal move: {0}")]
    Illegal(#[from] IllegalMove),
}

/// The engine's choice: the winning move if there is one, otherwise one token
/// off the larger pile (pile 1 on ties). `None` only at `(0, 0)`.
pub fn engine_move(pos: Position, params: GameParams) -> Option<Move> {
    if pos.is_terminal() {
        return None;
    }
    winning_move(pos, params).or_else(|| {
        Some(if pos.x >= pos.y {
            Move::take_pile1(1)
        } else {
            Move::take_pile2(1)
        })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionState {
    pub session_id: String,
    pub m: u64,
    pub start: Position,
    pub current: Position,
    pub to_move: Player,
    pub history: Vec<HistoryStep>,
    pub status: Status,
}

impl SessionState {
    /// Opens a game at `start`. If the engine moves first it plays
    /// immediately.
    pub fn new(session_id: String, params: GameParams, start: Position, human_first: bool) -> Self {
        let mut state = Self {
            session_id,
            m: params.m(),
            start,
            current: start,
            to_move: if human_first {
                Player::Human
            } else {
                Player::Engine
            },
            history: Vec::new(),
            status: Status::Ongoing,
        };
        state.settle(params);
        state
    }

    pub fn params(&self) -> GameParams {
        GameParams::new(self.m).expect("sessions hold validated parameters")
    }

    /// Plays the human's move and the engine's reply. Returns the reply, which
    /// is `None` when the human's move ended the game.
    pub fn human_move(&mut self, mv: Move) -> Result<Option<Move>, SessionError> {
        if self.status != Status::Ongoing {
            return Err(SessionError::GameOver);
        }
        debug_assert_eq!(self.to_move, Player::Human);
        let params = self.params();
        check_move(self.current, mv, params)?;
        self.push(Player::Human, mv);
        let before = self.history.len();
        self.settle(params);
        Ok((self.history.len() > before).then(|| self.history[before].mv))
    }

    fn push(&mut self, player: Player, mv: Move) {
        self.current = mv.apply(self.current).expect("move was checked");
        self.history.push(HistoryStep {
            player,
            mv,
            position: self.current,
        });
        self.to_move = match player {
            Player::Human => Player::Engine,
            Player::Engine => Player::Human,
        };
    }

    // Runs the engine's turn if due, then records a loss for whoever faces (0, 0).
    fn settle(&mut self, params: GameParams) {
        if self.to_move == Player::Engine {
            if let Some(mv) = engine_move(self.current, params) {
                self.push(Player::Engine, mv);
            }
        }
        if self.current.is_terminal() {
            self.status = match self.to_move {
                Player::Human => Status::HumanLost,
                Player::Engine => Status::EngineLost,
            };
        }
    }

    /// Replays the history from `start`, checking every step's legality and
    /// that it ends at `current`.
    pub fn replay_consistent(&self) -> bool {
        let params = self.params();
        let mut pos = self.start;
        for step in &self.history {
            if check_move(pos, step.mv, params).is_err() {
                return false;
            }
            pos = step.mv.apply(pos).expect("checked");
            if pos != step.position {
                return false;
            }
        }
        pos == self.current
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use modwythoff_core::modular::classify;
    use modwythoff_core::Label;

    fn gp(m: u64) -> GameParams {
        GameParams::new(m).unwrap()
    }

    #[test]
    fn human_empties_board() {
        let mut s = SessionState::new("a".into(), gp(2), (3, 3).into(), true);
        assert_eq!(s.status, Status::Ongoing);
        assert_eq!(s.human_move(Move::take_both(3, 3)), Ok(None));
        assert_eq!(s.status, Status::EngineLost);
        assert_eq!(s.current, Position::origin());
        assert_eq!(s.human_move(Move::take_pile1(1)), Err(SessionError::GameOver));
        assert!(s.replay_consistent());
    }

    #[test]
    fn illegal_moves_leave_state_untouched() {
        let mut s = SessionState::new("a".into(), gp(2), (3, 3).into(), true);
        let before = s.clone();
        assert!(matches!(
            s.human_move(Move::take_pile1(5)),
            Err(SessionError::Illegal(IllegalMove::ExceedsPile { .. }))
        ));
        assert!(matches!(
            s.human_move(Move::take_both(1, 2)),
            Err(SessionError::Illegal(IllegalMove::Congruence { .. }))
        ));
        assert_eq!(s, before);
    }

    #[test]
    fn engine_first_from_n_position_hands_over_p() {
        let s = SessionState::new("a".into(), gp(5), (10, 3).into(), false);
        assert_eq!(s.history.len(), 1);
        assert_eq!(s.to_move, Player::Human);
        assert_eq!(classify(s.current, gp(5)), Label::P);
    }

    #[test]
    fn terminal_start() {
        let s = SessionState::new("a".into(), gp(2), Position::origin(), true);
        assert_eq!(s.status, Status::HumanLost);
        let s = SessionState::new("a".into(), gp(2), Position::origin(), false);
        assert_eq!(s.status, Status::EngineLost);
    }

    #[test]
    fn engine_replies_into_p() {
        // (1, 2) is P for m = 2: whatever the human does, the engine answers into P
        for mv in [Move::take_pile1(1), Move::take_pile2(1), Move::take_pile2(2), Move::take_both(1, 1)] {
            let mut s = SessionState::new("a".into(), gp(2), (1, 2).into(), true);
            let reply = s.human_move(mv).unwrap().unwrap();
            assert_eq!(s.history.last().unwrap().mv, reply);
            assert_eq!(classify(s.current, gp(2)), Label::P);
            assert_eq!(s.status, Status::HumanLost);
        }
    }

    #[test]
    fn fallback_takes_one_from_larger_pile() {
        let m = gp(5);
        assert_eq!(engine_move((4, 7).into(), m), Some(Move::take_pile2(1)));
        assert_eq!(engine_move((7, 4).into(), m), Some(Move::take_pile1(1)));
        assert_eq!(engine_move((0, 0).into(), m), None);
        assert_eq!(engine_move((3, 3).into(), gp(1)), Some(Move::take_both(3, 3)));
    }
}
