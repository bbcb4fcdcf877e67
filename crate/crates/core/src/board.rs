//! Single Cricket Pitch boards.
//!
//! A board is a roller with a run of bumps on either side. Both sides are
//! stored roller-outward: index 0 is the bump touching the roller. The
//! written form `2,3,2|4,2` therefore stores its left side as `[2, 3, 2]`
//! read from the roller (`a_1 = 2, a_2 = 3, a_3 = 2`).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::Player;

/// Bump heights on one side of the roller, roller-outward, all `>= 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Side(Vec<u64>);

impl Side {
    pub const EMPTY: Side = Side(Vec::new());

    /// Builds a side from roller-outward heights, keeping the maximal
    /// zero-free prefix. A zero bump cannot be crossed, so everything past
    /// it is unreachable.
    pub fn new(mut bumps: Vec<u64>) -> Self {
        if let Some(first_zero) = bumps.iter().position(|&b| b == 0) {
            bumps.truncate(first_zero);
        }
        Side(bumps)
    }

    /// Builds a side from heights in written (board) order, i.e. the order
    /// they appear left-to-right on the page. For a left side that is
    /// outermost first, for a right side roller first.
    pub fn from_written(bumps: &[u64], on: Player) -> Self {
        match on {
            Player::Left => Side::new(bumps.iter().rev().copied().collect()),
            Player::Right => Side::new(bumps.to_vec()),
        }
    }

    pub fn bumps(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of the heights.
    pub fn mass(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn into_inner(self) -> Vec<u64> {
        self.0
    }
}

impl From<Vec<u64>> for Side {
    fn from(bumps: Vec<u64>) -> Self {
        Side::new(bumps)
    }
}

/// One pitch: the bumps left of the roller and the bumps right of it.
///
/// Boards are always normalized; there is no way to build one holding a zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Board {
    left: Side,
    right: Side,
}

/// Builds a board from raw roller-outward sequences that may contain zeros.
pub fn normalize(left_raw: &[u64], right_raw: &[u64]) -> Board {
    Board::new(Side::new(left_raw.to_vec()), Side::new(right_raw.to_vec()))
}

impl Board {
    /// The lone roller.
    pub const EMPTY: Board = Board {
        left: Side::EMPTY,
        right: Side::EMPTY,
    };

    pub fn new(left: Side, right: Side) -> Self {
        Board { left, right }
    }

    pub fn left(&self) -> &Side {
        &self.left
    }

    pub fn right(&self) -> &Side {
        &self.right
    }

    /// The side `player` rolls over.
    pub fn side(&self, player: Player) -> &Side {
        match player {
            Player::Left => &self.left,
            Player::Right => &self.right,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.left.is_empty() && self.right.is_empty()
    }

    pub fn mass(&self) -> u64 {
        self.left.mass() + self.right.mass()
    }

    pub fn bump_count(&self) -> usize {
        self.left.len() + self.right.len()
    }

    /// Number of legal moves for `player`: one per bump on their side.
    pub fn move_count(&self, player: Player) -> usize {
        self.side(player).len()
    }

    /// Rolls `player`'s way over `k` bumps. Each rolled bump drops by one
    /// and lands on the far side of the roller; the result is normalized.
    ///
    /// Returns `None` unless `1 <= k <= move_count(player)`.
    pub fn roll(&self, player: Player, k: usize) -> Option<Board> {
        let (own, other) = match player {
            Player::Left => (&self.left.0, &self.right.0),
            Player::Right => (&self.right.0, &self.left.0),
        };
        if k == 0 || k > own.len() {
            return None;
        }
        let remaining = Side(own[k..].to_vec());
        let mut landed = Vec::with_capacity(k + other.len());
        landed.extend(own[..k].iter().rev().map(|&b| b - 1));
        landed.extend_from_slice(other);
        let landed = Side::new(landed);
        Some(match player {
            Player::Left => Board::new(remaining, landed),
            Player::Right => Board::new(landed, remaining),
        })
    }

    /// All `(k, successor)` pairs for `player`, in increasing `k`.
    pub fn successors(&self, player: Player) -> impl Iterator<Item = (usize, Board)> + '_ {
        (1..=self.move_count(player)).map(move |k| (k, self.roll(player, k).expect("k in range")))
    }

    /// The board turned around: left and right sides swap.
    pub fn mirror(&self) -> Board {
        Board::new(self.right.clone(), self.left.clone())
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.0.iter())
    }
}

fn write_joined<'a>(f: &mut fmt::Formatter<'_>, it: impl Iterator<Item = &'a u64>) -> fmt::Result {
    for (i, b) in it.enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{b}")?;
    }
    Ok(())
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, self.left.0.iter().rev())?;
        f.write_str("|")?;
        write_joined(f, self.right.0.iter())
    }
}
