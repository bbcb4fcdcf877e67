//! Closed-form outcomes for a single board.
//!
//! A side alone decides `α|` (or `|β`): with an even bump the first player
//! wins, otherwise the player owning the side wins. Two sides combine by
//! their one-sided outcomes, and when both are first-player wins, odd tails
//! are stripped and the pivotal odd bumps `M(α)`, `M(β)` are compared.
//! Everything is a single pass over the bumps.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Board, Move, Outcome, Player, Side};

/// Parity profile of one side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SideClass {
    Empty,
    AllOdd,
    HasEven,
}

impl SideClass {
    /// Outcome of the board with only this side, on `owner`'s side of the
    /// roller. `None` for an empty side.
    pub fn one_sided_outcome(self, owner: Player) -> Option<Outcome> {
        match (self, owner) {
            (SideClass::Empty, _) => None,
            (SideClass::HasEven, _) => Some(Outcome::N),
            (SideClass::AllOdd, Player::Left) => Some(Outcome::R),
            (SideClass::AllOdd, Player::Right) => Some(Outcome::L),
        }
    }
}

pub fn side_class(side: &Side) -> SideClass {
    if side.is_empty() {
        SideClass::Empty
    } else if side.bumps().iter().any(|b| b % 2 == 0) {
        SideClass::HasEven
    } else {
        SideClass::AllOdd
    }
}

/// Drops the odd bumps past the outermost even one. Sides without an even
/// bump come back unchanged, never empty.
pub fn strip_odd_tail(side: &Side) -> Side {
    match side.bumps().iter().rposition(|b| b % 2 == 0) {
        Some(last_even) => Side::new(side.bumps()[..=last_even].to_vec()),
        None => side.clone(),
    }
}

/// A bump index or height that may be infinite. `Finite(_) < Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Extended<T> {
    Finite(T),
    Infinite,
}

impl<T: fmt::Display> fmt::Display for Extended<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::Finite(v) => write!(f, "{v}"),
            Extended::Infinite => f.write_str("inf"),
        }
    }
}

/// The last odd bump that is no bigger than anything between it and the
/// roller, with its 1-based index counted from the roller.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MStat {
    pub index: Extended<usize>,
    pub value: Extended<u64>,
}

pub fn m_stat(side: &Side) -> MStat {
    let mut best = MStat {
        index: Extended::Infinite,
        value: Extended::Infinite,
    };
    let mut running_min = u64::MAX;
    for (i, &b) in side.bumps().iter().enumerate() {
        if b % 2 == 1 && b <= running_min {
            best = MStat {
                index: Extended::Finite(i + 1),
                value: Extended::Finite(b),
            };
        }
        running_min = running_min.min(b);
    }
    best
}

/// One step of a classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Rule {
    /// Lone roller: the mover has no move and wins.
    EmptyBoth,
    /// Only `side`'s bumps remain; decided by their parity profile.
    OneSideOnly { side: Player, class: SideClass },
    /// One-sided outcomes `(o(α|), o(|β))` were `(R,L)`, `(R,N)` or `(N,L)`.
    SidePair { left: Outcome, right: Outcome },
    /// `count` odd bumps removed from the far end of `side`.
    StrippedOddTail { side: Player, count: usize },
    /// Comparison of pivotal bumps on a reduced board; `case` is 1..=4 for
    /// `<`, `>`, equal finite, both infinite.
    PivotCompare { case: u8, left: MStat, right: MStat },
}

impl Rule {
    /// The outcome this rule settles, if it is a final rule.
    pub fn verdict(&self) -> Option<Outcome> {
        match *self {
            Rule::EmptyBoth => Some(Outcome::N),
            Rule::OneSideOnly { side, class } => class.one_sided_outcome(side),
            Rule::SidePair { left, right } => match (left, right) {
                (Outcome::R, Outcome::L) => Some(Outcome::P),
                (Outcome::R, Outcome::N) => Some(Outcome::R),
                (Outcome::N, Outcome::L) => Some(Outcome::L),
                _ => None,
            },
            Rule::StrippedOddTail { .. } => None,
            Rule::PivotCompare { case, .. } => match case {
                1 => Some(Outcome::L),
                2 => Some(Outcome::R),
                3 => Some(Outcome::N),
                4 => Some(Outcome::P),
                _ => None,
            },
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::EmptyBoth => f.write_str("EmptyBoth"),
            Rule::OneSideOnly { side, class } => write!(f, "OneSideOnly({side}, {class:?})"),
            Rule::SidePair { left, right } => write!(f, "Theorem1Case({left},{right})"),
            Rule::StrippedOddTail { side, count } => {
                let s = match side {
                    Player::Left => "left",
                    Player::Right => "right",
                };
                write!(f, "StrippedOddTail({s},{count})")
            }
            Rule::PivotCompare { case, left, right } => write!(
                f,
                "Theorem2Case({case}) m(a)={} M(a)={} m(b)={} M(b)={}",
                left.index, left.value, right.index, right.value
            ),
        }
    }
}

/// Ordered rules applied by [`classify`]; the last one carries the verdict.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationTrace(pub Vec<Rule>);

impl ClassificationTrace {
    pub fn rules(&self) -> &[Rule] {
        &self.0
    }

    /// Re-derives the outcome from the recorded rules alone.
    pub fn replay(&self) -> Option<Outcome> {
        self.0.last()?.verdict()
    }
}

pub fn classify(board: &Board) -> (Outcome, ClassificationTrace) {
    let mut trace = Vec::new();
    let left = side_class(board.left());
    let right = side_class(board.right());

    let outcome = match (left, right) {
        (SideClass::Empty, SideClass::Empty) => push(&mut trace, Rule::EmptyBoth),
        (class, SideClass::Empty) => push(&mut trace, Rule::OneSideOnly { side: Player::Left, class }),
        (SideClass::Empty, class) => push(&mut trace, Rule::OneSideOnly { side: Player::Right, class }),
        (SideClass::HasEven, SideClass::HasEven) => {
            let a = strip_odd_tail(board.left());
            let b = strip_odd_tail(board.right());
            for (side, before, after) in [(Player::Left, board.left(), &a), (Player::Right, board.right(), &b)] {
                let count = before.len() - after.len();
                if count > 0 {
                    trace.push(Rule::StrippedOddTail { side, count });
                }
            }
            let (ma, mb) = (m_stat(&a), m_stat(&b));
            let case = match ma.value.cmp(&mb.value) {
                Ordering::Less => 1,
                Ordering::Greater => 2,
                Ordering::Equal if ma.value != Extended::Infinite => 3,
                Ordering::Equal => 4,
            };
            push(&mut trace, Rule::PivotCompare { case, left: ma, right: mb })
        }
        (l, r) => {
            let rule = Rule::SidePair {
                left: l.one_sided_outcome(Player::Left).expect("nonempty"),
                right: r.one_sided_outcome(Player::Right).expect("nonempty"),
            };
            push(&mut trace, rule)
        }
    };
    (outcome, ClassificationTrace(trace))
}

fn push(trace: &mut Vec<Rule>, rule: Rule) -> Outcome {
    let verdict = rule.verdict().expect("final rule");
    trace.push(rule);
    verdict
}

pub fn classify_outcome(board: &Board) -> Outcome {
    classify(board).0
}

/// Moves for `player` on a lone board after which `player` wins with the
/// opponent to move, by increasing `k`.
pub fn winning_moves(board: &Board, player: Player) -> Vec<Move> {
    board
        .successors(player)
        .filter(|(_, next)| classify_outcome(next).winner_when(player.opponent()) == player)
        .map(|(k, _)| Move::new(0, player, k))
        .collect()
}
