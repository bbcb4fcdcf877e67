//! Shared inputs for the criterion benches.

use cpitch_core::{random_board, Board, Position};

pub const SEED: u64 = 0x5eed;

/// Seeded boards of increasing length for the classifier.
pub fn classifier_inputs() -> Vec<(usize, Board)> {
    [1_000, 10_000, 100_000, 1_000_000]
        .into_iter()
        .map(|n| (n, random_board(n, SEED)))
        .collect()
}

/// Small sums the oracle solves from scratch.
pub fn oracle_inputs() -> Vec<(&'static str, Position)> {
    ["6,2,4,5|4,3,3,4,6", "2,1| + |1,2 + 3|", "1|1 + 1|1 + 2|2", "3,2|2,3 + |1,1 + 2|"]
        .into_iter()
        .map(|s| (s, s.parse().expect("fixture parses")))
        .collect()
}
