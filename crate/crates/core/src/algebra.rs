//! Reductions that hold in any sum, one-bump sums, and bounded searches for
//! positions that tell two sums apart.
//!
//! `G` and `H` are equivalent when `o(G + X) = o(H + X)` for every `X`.
//! Here `X` only ranges over enumerated Cricket Pitch sums, so a search
//! without a witness is evidence, not a proof of equivalence.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumerate::{self, EnumBound};
use crate::{Board, Oracle, OracleError, Outcome, Position, Side};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("`{0}` is not a one-bump board")]
    NotOneBump(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// What a one-bump board is equivalent to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OneBumpCanon {
    /// The empty board; even bumps vanish.
    Zero,
    /// `|1`, a win for Left.
    LeftUnit,
    /// `1|`, a win for Right.
    RightUnit,
}

impl OneBumpCanon {
    pub fn to_board(self) -> Board {
        match self {
            OneBumpCanon::Zero => Board::EMPTY,
            OneBumpCanon::LeftUnit => Board::new(Side::EMPTY, Side::new(vec![1])),
            OneBumpCanon::RightUnit => Board::new(Side::new(vec![1]), Side::EMPTY),
        }
    }
}

pub fn reduce_one_bump(board: &Board) -> Result<OneBumpCanon, AlgebraError> {
    let (left, right) = (board.left().bumps(), board.right().bumps());
    let (height, on_left) = match (left, right) {
        ([h], []) => (*h, true),
        ([], [h]) => (*h, false),
        _ => return Err(AlgebraError::NotOneBump(board.to_string())),
    };
    Ok(match (height % 2 == 0, on_left) {
        (true, _) => OneBumpCanon::Zero,
        (false, true) => OneBumpCanon::RightUnit,
        (false, false) => OneBumpCanon::LeftUnit,
    })
}

/// Outcome of a sum of one-bump boards: Left wins outright with more `|1`
/// than `1|` units, Right with fewer, and the first player on a tie.
pub fn one_bump_sum_outcome(components: &[Board]) -> Result<Outcome, AlgebraError> {
    let (mut left_units, mut right_units) = (0usize, 0usize);
    for b in components {
        match reduce_one_bump(b)? {
            OneBumpCanon::LeftUnit => left_units += 1,
            OneBumpCanon::RightUnit => right_units += 1,
            OneBumpCanon::Zero => {}
        }
    }
    Ok(match left_units.cmp(&right_units) {
        std::cmp::Ordering::Greater => Outcome::L,
        std::cmp::Ordering::Equal => Outcome::N,
        std::cmp::Ordering::Less => Outcome::R,
    })
}

/// An `X` with `o(G + X) != o(H + X)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub x: Position,
    pub g_outcome: Outcome,
    pub h_outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinguishReport {
    pub witness: Option<Witness>,
    /// Number of `X` evaluated, including the witness.
    pub searched: usize,
    pub bound: EnumBound,
}

/// Looks for the first `X` within `bound` (in enumeration order) that
/// separates `g` from `h`.
pub fn distinguish(
    oracle: &mut Oracle,
    g: &Position,
    h: &Position,
    bound: &EnumBound,
) -> Result<DistinguishReport, AlgebraError> {
    let mut searched = 0;
    for x in enumerate::positions(bound) {
        searched += 1;
        if let Some(w) = compare(oracle, g, h, &x)? {
            return Ok(DistinguishReport {
                witness: Some(w),
                searched,
                bound: *bound,
            });
        }
    }
    Ok(DistinguishReport {
        witness: None,
        searched,
        bound: *bound,
    })
}

fn compare(oracle: &mut Oracle, g: &Position, h: &Position, x: &Position) -> Result<Option<Witness>, OracleError> {
    let g_outcome = oracle.outcome(&(g + x))?;
    let h_outcome = oracle.outcome(&(h + x))?;
    Ok((g_outcome != h_outcome).then(|| Witness {
        x: x.clone(),
        g_outcome,
        h_outcome,
    }))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EquivReport {
    pub checked: usize,
    pub agreements: usize,
    pub disagreements: Vec<Witness>,
}

impl EquivReport {
    pub fn consistent(&self) -> bool {
        self.disagreements.is_empty()
    }
}

/// Compares `o(g + X)` with `o(h + X)` for every `X` in `xs`.
pub fn check_equiv_sampled<'a>(
    oracle: &mut Oracle,
    g: &Position,
    h: &Position,
    xs: impl IntoIterator<Item = &'a Position>,
) -> Result<EquivReport, AlgebraError> {
    let mut report = EquivReport::default();
    for x in xs {
        report.checked += 1;
        match compare(oracle, g, h, x)? {
            Some(w) => report.disagreements.push(w),
            None => report.agreements += 1,
        }
    }
    Ok(report)
}
