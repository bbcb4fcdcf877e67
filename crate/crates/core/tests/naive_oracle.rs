//! Cross-checks the memoized oracle against a deliberately naive solver
//! that never normalizes: flattened bumps stay on the board as zeros and
//! simply block the roller.

use cpitch_core::enumerate::{self, EnumBound};
use cpitch_core::{Oracle, Outcome, Player, Position, SearchBudget};

/// Written-order heights with the roller before index `roller`.
#[derive(Clone)]
struct RawBoard {
    heights: Vec<i64>,
    roller: usize,
}

impl RawBoard {
    fn from_position(p: &Position) -> Vec<RawBoard> {
        p.components()
            .iter()
            .map(|b| {
                let mut heights: Vec<i64> = b.left().bumps().iter().rev().map(|&h| h as i64).collect();
                let roller = heights.len();
                heights.extend(b.right().bumps().iter().map(|&h| h as i64));
                RawBoard { heights, roller }
            })
            .collect()
    }

    fn successors(&self, player: Player) -> Vec<RawBoard> {
        let mut out = Vec::new();
        let mut cur = self.clone();
        loop {
            let next = match player {
                Player::Left if cur.roller > 0 && cur.heights[cur.roller - 1] > 0 => cur.roller - 1,
                Player::Right if cur.roller < cur.heights.len() && cur.heights[cur.roller] > 0 => cur.roller + 1,
                _ => break,
            };
            let rolled = match player {
                Player::Left => next,
                Player::Right => cur.roller,
            };
            cur.heights[rolled] -= 1;
            cur.roller = next;
            out.push(cur.clone());
        }
        out
    }
}

fn naive_winner(sum: &[RawBoard], to_move: Player) -> Player {
    let mut moved = false;
    for (i, b) in sum.iter().enumerate() {
        for next in b.successors(to_move) {
            moved = true;
            let mut s = sum.to_vec();
            s[i] = next;
            if naive_winner(&s, to_move.opponent()) == to_move {
                return to_move;
            }
        }
    }
    if moved {
        to_move.opponent()
    } else {
        to_move
    }
}

fn naive_outcome(p: &Position) -> Outcome {
    let raw = RawBoard::from_position(p);
    Outcome::from_winners(naive_winner(&raw, Player::Left), naive_winner(&raw, Player::Right))
}

#[test]
fn oracle_matches_naive_search_on_small_sums() {
    let mut oracle = Oracle::new(SearchBudget::default());
    let positions = enumerate::positions(&EnumBound::by_total_mass(6, 3));
    assert!(positions.len() > 1000);
    for p in &positions {
        assert_eq!(oracle.outcome(p).unwrap(), naive_outcome(p), "{p}");
    }
}

#[test]
fn oracle_matches_naive_search_on_single_boards() {
    let mut oracle = Oracle::new(SearchBudget::default());
    for b in enumerate::boards(9, 5) {
        let p = Position::from(b);
        assert_eq!(oracle.outcome(&p).unwrap(), naive_outcome(&p), "{p}");
    }
}

#[test]
fn naive_search_agrees_on_fixed_examples() {
    for (s, o) in [("|", Outcome::N), ("1|", Outcome::R), ("|1", Outcome::L), ("2|2", Outcome::P), ("|1 + 1|", Outcome::N)] {
        assert_eq!(naive_outcome(&s.parse().unwrap()), o, "{s}");
    }
}
