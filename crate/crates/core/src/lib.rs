//! Misère Cricket Pitch.
//!
//! A pitch is a row of positive bumps with a roller somewhere in it. Left
//! rolls the roller leftward over any positive number of bumps, Right
//! rightward; each bump rolled over drops by one and a flattened bump can
//! no longer be crossed. Under misère play the player who cannot move wins.
//!
//! The crate provides the game model ([`Board`], [`Position`]), an
//! exhaustive memoized solver ([`Oracle`]), a linear-time outcome rule for
//! single boards ([`classify`]) and one-bump sum reductions with bounded
//! equivalence searches ([`algebra`]).

pub mod algebra;
mod board;
pub mod classifier;
pub mod enumerate;
mod notation;
pub mod oracle;
mod outcome;
mod position;
mod random;
pub mod verify;

pub use algebra::{
    check_equiv_sampled, distinguish, one_bump_sum_outcome, reduce_one_bump, AlgebraError, DistinguishReport,
    EquivReport, OneBumpCanon, Witness,
};
pub use board::{normalize, Board, Side};
pub use classifier::{
    classify, classify_outcome, m_stat, side_class, strip_odd_tail, winning_moves, ClassificationTrace, Extended,
    MStat, Rule, SideClass,
};
pub use enumerate::EnumBound;
pub use notation::ParseError;
pub use oracle::{best_moves_oracle, misere_outcome, Oracle, OracleError, SearchBudget};
pub use outcome::Outcome;
pub use position::{CanonicalKey, Move, Player, Position};
pub use random::random_board;
