use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::Player;

/// Misère outcome class of a position.
///
/// Each class is a pair of winners: who wins when Left moves first and who
/// wins when Right moves first. `L = (L, L)`, `N = (L, R)`, `P = (R, L)`,
/// `R = (R, R)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    L,
    N,
    P,
    R,
}

impl Outcome {
    pub const ALL: [Outcome; 4] = [Outcome::L, Outcome::N, Outcome::P, Outcome::R];

    pub fn from_winners(left_starts: Player, right_starts: Player) -> Outcome {
        match (left_starts, right_starts) {
            (Player::Left, Player::Left) => Outcome::L,
            (Player::Left, Player::Right) => Outcome::N,
            (Player::Right, Player::Left) => Outcome::P,
            (Player::Right, Player::Right) => Outcome::R,
        }
    }

    /// Winner when `starter` makes the first move.
    pub fn winner_when(self, starter: Player) -> Player {
        match starter {
            Player::Left => self.left_starts(),
            Player::Right => self.right_starts(),
        }
    }

    /// `o_L`.
    pub fn left_starts(self) -> Player {
        match self {
            Outcome::L | Outcome::N => Player::Left,
            Outcome::P | Outcome::R => Player::Right,
        }
    }

    /// `o_R`.
    pub fn right_starts(self) -> Player {
        match self {
            Outcome::L | Outcome::P => Player::Left,
            Outcome::N | Outcome::R => Player::Right,
        }
    }

    /// Outcome after swapping the roles of Left and Right.
    pub fn conjugate(self) -> Outcome {
        match self {
            Outcome::L => Outcome::R,
            Outcome::R => Outcome::L,
            other => other,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Outcome::L => 'L',
            Outcome::N => 'N',
            Outcome::P => 'P',
            Outcome::R => 'R',
        }
    }
}

fn rank(p: Player) -> u8 {
    match p {
        Player::Left => 1,
        Player::Right => 0,
    }
}

/// Coordinatewise with Left above Right: `L` is the top, `R` the bottom,
/// `N` and `P` are incomparable.
impl PartialOrd for Outcome {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        let a = rank(self.left_starts()).cmp(&rank(other.left_starts()));
        let b = rank(self.right_starts()).cmp(&rank(other.right_starts()));
        match (a, b) {
            (x, y) if x == y => Some(x),
            (Ordering::Equal, y) => Some(y),
            (x, Ordering::Equal) => Some(x),
            _ => None,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}
