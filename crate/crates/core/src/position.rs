//! Disjunctive sums of boards and the moves between them.

use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::Board;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Player {
    Left,
    Right,
}

impl Player {
    pub const BOTH: [Player; 2] = [Player::Left, Player::Right];

    pub fn opponent(self) -> Player {
        match self {
            Player::Left => Player::Right,
            Player::Right => Player::Left,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Player::Left => 'L',
            Player::Right => 'R',
        }
    }

    pub fn from_letter(c: char) -> Option<Player> {
        match c {
            'L' | 'l' => Some(Player::Left),
            'R' | 'r' => Some(Player::Right),
            _ => None,
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Rolling over `k` bumps of component `component`, written `L k [component]`.
/// Left always rolls leftward and Right rightward, so the player doubles as
/// the direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Move {
    pub component: usize,
    pub player: Player,
    pub k: usize,
}

impl Move {
    pub fn new(component: usize, player: Player, k: usize) -> Self {
        Move { component, player, k }
    }

    /// Ordering used when a single move must be reported: smallest `k`,
    /// Left before Right, then lowest component index.
    pub fn tie_break_key(&self) -> (usize, Player, usize) {
        (self.k, self.player, self.component)
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.player, self.k)?;
        if self.component > 0 {
            write!(f, " {}", self.component)?;
        }
        Ok(())
    }
}

/// A disjunctive sum of boards. The empty sum is the zero game `0`.
///
/// Components keep the order they were given in, so [`Move::component`]
/// indexes are stable; equality of sums as multisets goes through
/// [`Position::canonical_key`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Position {
    components: Vec<Board>,
}

impl Position {
    pub fn zero() -> Self {
        Position::default()
    }

    pub fn new(components: Vec<Board>) -> Self {
        Position { components }
    }

    pub fn components(&self) -> &[Board] {
        &self.components
    }

    pub fn into_components(self) -> Vec<Board> {
        self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn mass(&self) -> u64 {
        self.components.iter().map(Board::mass).sum()
    }

    pub fn bump_count(&self) -> usize {
        self.components.iter().map(Board::bump_count).sum()
    }

    /// `Some(board)` when the sum has exactly one component.
    pub fn single(&self) -> Option<&Board> {
        match self.components.as_slice() {
            [b] => Some(b),
            _ => None,
        }
    }

    pub fn has_move(&self, player: Player) -> bool {
        self.components.iter().any(|b| !b.side(player).is_empty())
    }

    /// Applies `mv`, returning `None` if it is not legal here.
    pub fn apply(&self, mv: Move) -> Option<Position> {
        let next = self.components.get(mv.component)?.roll(mv.player, mv.k)?;
        let mut components = self.components.clone();
        components[mv.component] = next;
        Some(Position { components })
    }

    /// Every legal move for `player` with its successor, component by
    /// component and by increasing `k`.
    pub fn moves(&self, player: Player) -> Vec<(Move, Position)> {
        let mut out = Vec::new();
        for (i, board) in self.components.iter().enumerate() {
            for (k, next) in board.successors(player) {
                let mut components = self.components.clone();
                components[i] = next;
                out.push((Move::new(i, player, k), Position { components }));
            }
        }
        out
    }

    pub fn mirror(&self) -> Position {
        Position {
            components: self.components.iter().map(Board::mirror).collect(),
        }
    }

    /// Components in canonical (sorted) order.
    pub fn sorted_components(&self) -> Vec<Board> {
        let mut c = self.components.clone();
        c.sort();
        c
    }

    /// The order-independent identity of this sum.
    pub fn canonical_key(&self) -> CanonicalKey {
        CanonicalKey::from_boards(&self.sorted_components())
    }
}

impl From<Board> for Position {
    fn from(board: Board) -> Self {
        Position { components: vec![board] }
    }
}

impl FromIterator<Board> for Position {
    fn from_iter<I: IntoIterator<Item = Board>>(iter: I) -> Self {
        Position {
            components: iter.into_iter().collect(),
        }
    }
}

impl Add for Position {
    type Output = Position;

    fn add(mut self, rhs: Position) -> Position {
        self.components.extend(rhs.components);
        self
    }
}

impl Add<&Position> for &Position {
    type Output = Position;

    fn add(self, rhs: &Position) -> Position {
        self.clone() + rhs.clone()
    }
}

/// Flat encoding of a multiset of boards: per board (in sorted order) the
/// left length, the left bumps, the right length, the right bumps.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey(Box<[u64]>);

impl CanonicalKey {
    /// `boards` must already be sorted.
    pub(crate) fn from_boards(boards: &[Board]) -> Self {
        let mut words = Vec::with_capacity(boards.iter().map(|b| b.bump_count() + 2).sum());
        for b in boards {
            for side in [b.left(), b.right()] {
                words.push(side.len() as u64);
                words.extend_from_slice(side.bumps());
            }
        }
        CanonicalKey(words.into_boxed_slice())
    }

    pub fn as_words(&self) -> &[u64] {
        &self.0
    }
}
