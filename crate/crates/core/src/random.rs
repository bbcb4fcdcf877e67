use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Board, Side};

/// A board of `bumps` bumps with heights uniform in `1..=9` and the roller
/// at a uniform split point. The same seed always gives the same board.
pub fn random_board(bumps: usize, seed: u64) -> Board {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let heights: Vec<u64> = (0..bumps).map(|_| rng.random_range(1..=9)).collect();
    let split = rng.random_range(0..=bumps);
    let (left, right) = heights.split_at(split);
    Board::new(Side::new(left.to_vec()), Side::new(right.to_vec()))
}
