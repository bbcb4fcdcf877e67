//! Deterministic enumeration of small boards and sums, for exhaustive
//! checks and distinguisher searches.

use serde::{Deserialize, Serialize};

use crate::{Board, Player, Position, Side};

/// Every board with total mass `<= max_mass` and at most `max_bumps` bumps,
/// ordered by mass and then by board order. Includes the lone roller.
pub fn boards(max_mass: u64, max_bumps: usize) -> Vec<Board> {
    let mut out = Vec::new();
    let mut seq = Vec::new();
    compositions(max_mass, max_bumps, &mut seq, &mut |written| {
        for split in 0..=written.len() {
            out.push(Board::new(
                Side::from_written(&written[..split], Player::Left),
                Side::from_written(&written[split..], Player::Right),
            ));
        }
    });
    out.sort_by(|a, b| a.mass().cmp(&b.mass()).then_with(|| a.cmp(b)));
    out
}

/// Visits every sequence of positive heights with sum `<= budget` and
/// length `<= max_len`, the empty one included.
fn compositions(budget: u64, max_len: usize, seq: &mut Vec<u64>, visit: &mut impl FnMut(&[u64])) {
    visit(seq);
    if seq.len() == max_len {
        return;
    }
    for h in 1..=budget {
        seq.push(h);
        compositions(budget - h, max_len, seq, visit);
        seq.pop();
    }
}

/// Boards with a single bump of height `1..=max_height`, on either side.
pub fn one_bump_boards(max_height: u64) -> Vec<Board> {
    (1..=max_height)
        .flat_map(|h| {
            [
                Board::new(Side::new(vec![h]), Side::EMPTY),
                Board::new(Side::EMPTY, Side::new(vec![h])),
            ]
        })
        .collect()
}

/// Limits on enumerated sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumBound {
    pub max_components: usize,
    pub max_side_bumps: usize,
    pub max_board_mass: u64,
    pub max_total_mass: u64,
}

impl EnumBound {
    /// Sums of up to `max_components` boards with total mass `<= max_mass`.
    pub fn by_total_mass(max_mass: u64, max_components: usize) -> Self {
        EnumBound {
            max_components,
            max_side_bumps: max_mass as usize,
            max_board_mass: max_mass,
            max_total_mass: max_mass,
        }
    }
}

/// All sums within `bound`, including the empty sum, ordered by total mass,
/// then component count, then canonical key.
pub fn positions(bound: &EnumBound) -> Vec<Position> {
    let pool: Vec<Board> = boards(bound.max_board_mass, 2 * bound.max_side_bumps)
        .into_iter()
        .filter(|b| b.left().len() <= bound.max_side_bumps && b.right().len() <= bound.max_side_bumps)
        .collect();

    let mut out = Vec::new();
    let mut chosen = Vec::new();
    multisets(&pool, 0, bound.max_components, bound.max_total_mass, &mut chosen, &mut out);

    let mut keyed: Vec<_> = out
        .into_iter()
        .map(|p| ((p.mass(), p.len(), p.canonical_key()), p))
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, p)| p).collect()
}

fn multisets(
    pool: &[Board],
    from: usize,
    slots: usize,
    budget: u64,
    chosen: &mut Vec<Board>,
    out: &mut Vec<Position>,
) {
    out.push(Position::new(chosen.clone()));
    if slots == 0 {
        return;
    }
    for i in from..pool.len() {
        let m = pool[i].mass();
        // pool is sorted by mass
        if m > budget {
            break;
        }
        chosen.push(pool[i].clone());
        multisets(pool, i, slots - 1, budget - m, chosen, out);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn board_counts_by_mass() {
        // mass s contributes 2^s + (s-1) 2^(s-2) boards for s >= 2
        let all = boards(6, 6);
        let count = |s| all.iter().filter(|b| b.mass() == s).count();
        assert_eq!(count(0), 1);
        assert_eq!(count(1), 2);
        assert_eq!(count(2), 5);
        assert_eq!(count(3), 12);
        assert_eq!(count(6), 144);
        assert_eq!(all.len(), 256);
        let unique: HashSet<_> = all.iter().collect();
        assert_eq!(unique.len(), all.len());
    }

    #[test]
    fn bump_limit_applies_to_both_sides_together() {
        assert!(boards(9, 3).iter().all(|b| b.bump_count() <= 3));
        assert!(boards(9, 3).iter().any(|b| b.bump_count() == 3));
    }

    #[test]
    fn positions_start_with_the_empty_sum() {
        let ps = positions(&EnumBound::by_total_mass(2, 2));
        assert_eq!(ps[0], Position::zero());
        assert_eq!(ps[1].to_string(), "|");
        assert_eq!(ps[2].to_string(), "| + |");
        let masses: Vec<_> = ps.iter().map(Position::mass).collect();
        assert!(masses.windows(2).all(|w| w[0] <= w[1]));
        let keys: HashSet<_> = ps.iter().map(Position::canonical_key).collect();
        assert_eq!(keys.len(), ps.len());
    }

    #[test]
    fn one_bump_boards_cover_both_sides() {
        let b = one_bump_boards(2);
        let text: Vec<_> = b.iter().map(ToString::to_string).collect();
        assert_eq!(text, ["1|", "|1", "2|", "|2"]);
    }
}
