//! Exhaustive misère search over disjunctive sums.
//!
//! The rule is the misère one: a player who is to move and has no legal
//! move anywhere in the sum wins. Otherwise the mover wins iff some move
//! reaches a position the opponent loses when moving first. Every move
//! lowers the total bump mass, so the search depth is bounded by it.

use std::collections::HashMap;

use thiserror::Error;

use crate::{Board, CanonicalKey, Move, Outcome, Player, Position};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Memo entries (position, player-to-move) before the search gives up.
    pub max_states: usize,
    /// Largest total bump mass accepted as input.
    pub max_total_bump_mass: u64,
}

impl SearchBudget {
    pub const DEFAULT_MAX_STATES: usize = 10_000_000;
    pub const DEFAULT_MAX_MASS: u64 = 64;

    pub fn new(max_states: usize, max_total_bump_mass: u64) -> Self {
        assert!(max_states > 0 && max_total_bump_mass > 0, "budget limits must be positive");
        SearchBudget { max_states, max_total_bump_mass }
    }
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget::new(Self::DEFAULT_MAX_STATES, Self::DEFAULT_MAX_MASS)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search budget exhausted after {states} states")]
    StateLimit { states: usize },
    #[error("total bump mass {mass} exceeds the limit of {limit}")]
    MassLimit { mass: u64, limit: u64 },
}

impl OracleError {
    pub fn states(&self) -> usize {
        match self {
            OracleError::StateLimit { states } => *states,
            OracleError::MassLimit { .. } => 0,
        }
    }
}

#[derive(Clone, Copy, Default)]
struct Slots([Option<Player>; 2]);

impl Slots {
    fn get(&self, to_move: Player) -> Option<Player> {
        self.0[to_move as usize]
    }

    fn set(&mut self, to_move: Player, winner: Player) {
        self.0[to_move as usize] = Some(winner);
    }
}

/// Memoized solver. The table persists across queries, so reusing one
/// `Oracle` for many related positions (a sweep over `G + X`) is cheap.
pub struct Oracle {
    budget: SearchBudget,
    memo: HashMap<CanonicalKey, Slots>,
    states: usize,
}

impl Oracle {
    pub fn new(budget: SearchBudget) -> Self {
        Oracle {
            budget,
            memo: HashMap::new(),
            states: 0,
        }
    }

    pub fn budget(&self) -> SearchBudget {
        self.budget
    }

    /// Number of (position, player-to-move) entries solved so far.
    pub fn states_explored(&self) -> usize {
        self.states
    }

    pub fn outcome(&mut self, position: &Position) -> Result<Outcome, OracleError> {
        let boards = self.admit(position)?;
        let l = self.solve(&boards, Player::Left)?;
        let r = self.solve(&boards, Player::Right)?;
        Ok(Outcome::from_winners(l, r))
    }

    /// Winner when `starter` moves first.
    pub fn winner(&mut self, position: &Position, starter: Player) -> Result<Player, OracleError> {
        let boards = self.admit(position)?;
        self.solve(&boards, starter)
    }

    /// The moves for `player` after which `player` wins with the opponent
    /// to move. Empty when `player` has no move or loses moving first.
    pub fn best_moves(&mut self, position: &Position, player: Player) -> Result<Vec<Move>, OracleError> {
        self.admit(position)?;
        let mut winning = Vec::new();
        for (mv, next) in position.moves(player) {
            let boards = next.sorted_components();
            if self.solve(&boards, player.opponent())? == player {
                winning.push(mv);
            }
        }
        Ok(winning)
    }

    fn admit(&self, position: &Position) -> Result<Vec<Board>, OracleError> {
        let mass = position.mass();
        if mass > self.budget.max_total_bump_mass {
            return Err(OracleError::MassLimit {
                mass,
                limit: self.budget.max_total_bump_mass,
            });
        }
        Ok(position.sorted_components())
    }

    /// `boards` is sorted.
    fn solve(&mut self, boards: &[Board], to_move: Player) -> Result<Player, OracleError> {
        let key = CanonicalKey::from_boards(boards);
        if let Some(w) = self.memo.get(&key).and_then(|s| s.get(to_move)) {
            return Ok(w);
        }

        let opponent = to_move.opponent();
        let mut winner = opponent;
        let mut any_move = false;
        'search: for i in 0..boards.len() {
            // identical components have identical successors
            if i > 0 && boards[i] == boards[i - 1] {
                continue;
            }
            for (_, next) in boards[i].successors(to_move) {
                any_move = true;
                let mut succ = boards.to_vec();
                succ[i] = next;
                succ.sort();
                if self.solve(&succ, opponent)? == to_move {
                    winner = to_move;
                    break 'search;
                }
            }
        }
        if !any_move {
            winner = to_move;
        }

        if self.states >= self.budget.max_states {
            return Err(OracleError::StateLimit { states: self.states });
        }
        self.memo.entry(key).or_default().set(to_move, winner);
        self.states += 1;
        Ok(winner)
    }
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(SearchBudget::default())
    }
}

/// One-shot outcome with a fresh table.
pub fn misere_outcome(position: &Position, budget: SearchBudget) -> Result<Outcome, OracleError> {
    Oracle::new(budget).outcome(position)
}

/// One-shot [`Oracle::best_moves`] with a fresh table.
pub fn best_moves_oracle(
    position: &Position,
    player: Player,
    budget: SearchBudget,
) -> Result<Vec<Move>, OracleError> {
    Oracle::new(budget).best_moves(position, player)
}
