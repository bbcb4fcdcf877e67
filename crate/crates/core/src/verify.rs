//! Exhaustive check suites run by `cpitch verify`.
//!
//! Every suite compares a stated rule against the [`Oracle`] over all
//! boards (or small sums) up to a mass bound and collects the exceptions.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::enumerate::{self, EnumBound};
use crate::{
    algebra, classify_outcome, side_class, strip_odd_tail, Board, Oracle, OracleError, Outcome, Player, Position,
    SearchBudget, Side, SideClass,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    OneSide,
    RemoveOdd,
    SidePairs,
    Pivots,
    Reductions,
    DisjSum,
    Closure,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::OneSide,
        Suite::RemoveOdd,
        Suite::SidePairs,
        Suite::Pivots,
        Suite::Reductions,
        Suite::DisjSum,
        Suite::Closure,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::OneSide => "one-side",
            Suite::RemoveOdd => "removeodd",
            Suite::SidePairs => "theorem1",
            Suite::Pivots => "theorem2",
            Suite::Reductions => "reductions",
            Suite::DisjSum => "disj-sum",
            Suite::Closure => "closure",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// Largest board mass enumerated.
    pub max_mass: u64,
    /// Largest bump count of an enumerated board.
    pub max_bumps: usize,
    pub budget: SearchBudget,
}

impl VerifyConfig {
    pub fn new(max_mass: u64) -> Self {
        VerifyConfig {
            max_mass,
            max_bumps: 7,
            budget: SearchBudget::default(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: usize,
    pub failed: usize,
    /// First few failures, human readable.
    pub examples: Vec<String>,
}

impl SuiteReport {
    const KEPT: usize = 10;

    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite: suite.name().to_string(),
            checked: 0,
            failed: 0,
            examples: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.examples.len() < Self::KEPT {
                self.examples.push(describe());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

pub fn run(suite: Suite, config: &VerifyConfig) -> Result<SuiteReport, OracleError> {
    let mut oracle = Oracle::new(config.budget);
    let boards = enumerate::boards(config.max_mass, config.max_bumps);
    match suite {
        Suite::OneSide => one_side(&mut oracle, &boards),
        Suite::RemoveOdd => remove_odd(&mut oracle, &boards),
        Suite::SidePairs => side_pairs(&mut oracle, &boards),
        Suite::Pivots => pivots(&mut oracle, &boards),
        Suite::Reductions => reductions(&mut oracle, config.max_mass.min(6)),
        Suite::DisjSum => disjunctive_sums(&mut oracle, config.max_mass.min(5)),
        Suite::Closure => closure(&mut oracle, &boards),
    }
}

/// `α|` is `N` iff `α` has an even bump, else `R`; mirrored for `|β`.
pub fn one_side(oracle: &mut Oracle, boards: &[Board]) -> Result<SuiteReport, OracleError> {
    let mut report = SuiteReport::new(Suite::OneSide);
    for b in boards {
        let (side, owner) = match (b.left().is_empty(), b.right().is_empty()) {
            (false, true) => (b.left(), Player::Left),
            (true, false) => (b.right(), Player::Right),
            _ => continue,
        };
        let has_even = side.bumps().iter().any(|h| h % 2 == 0);
        let expected = match (has_even, owner) {
            (true, _) => Outcome::N,
            (false, Player::Left) => Outcome::R,
            (false, Player::Right) => Outcome::L,
        };
        let got = oracle.outcome(&b.clone().into())?;
        report.check(got == expected, || format!("{b}: oracle {got}, expected {expected}"));
    }
    Ok(report)
}

/// Dropping an odd bump from the far end of a side with at least two bumps
/// keeps the outcome; so does stripping whole odd tails.
pub fn remove_odd(oracle: &mut Oracle, boards: &[Board]) -> Result<SuiteReport, OracleError> {
    let mut report = SuiteReport::new(Suite::RemoveOdd);
    for b in boards {
        let here = oracle.outcome(&b.clone().into())?;
        for player in Player::BOTH {
            let side = b.side(player).bumps();
            if side.len() >= 2 && side[side.len() - 1] % 2 == 1 {
                let shorter = with_side(b, player, Side::new(side[..side.len() - 1].to_vec()));
                let there = oracle.outcome(&shorter.clone().into())?;
                report.check(here == there, || format!("{b} is {here} but {shorter} is {there}"));
            }
        }
        let stripped = Board::new(strip_odd_tail(b.left()), strip_odd_tail(b.right()));
        if stripped != *b {
            let there = oracle.outcome(&stripped.clone().into())?;
            report.check(here == there, || format!("{b} is {here} but {stripped} is {there}"));
        }
    }
    Ok(report)
}

fn with_side(b: &Board, player: Player, side: Side) -> Board {
    match player {
        Player::Left => Board::new(side, b.right().clone()),
        Player::Right => Board::new(b.left().clone(), side),
    }
}

/// Two nonempty sides whose one-sided outcomes are `(R,L)`, `(R,N)` or
/// `(N,L)` give `P`, `R` and `L`.
pub fn side_pairs(oracle: &mut Oracle, boards: &[Board]) -> Result<SuiteReport, OracleError> {
    let mut report = SuiteReport::new(Suite::SidePairs);
    for b in boards {
        let expected = match (side_class(b.left()), side_class(b.right())) {
            (SideClass::AllOdd, SideClass::AllOdd) => Outcome::P,
            (SideClass::AllOdd, SideClass::HasEven) => Outcome::R,
            (SideClass::HasEven, SideClass::AllOdd) => Outcome::L,
            _ => continue,
        };
        let got = oracle.outcome(&b.clone().into())?;
        report.check(got == expected, || format!("{b}: oracle {got}, expected {expected}"));
    }
    Ok(report)
}

/// Boards with an even bump on both sides: classifier against oracle.
pub fn pivots(oracle: &mut Oracle, boards: &[Board]) -> Result<SuiteReport, OracleError> {
    let mut report = SuiteReport::new(Suite::Pivots);
    for b in boards {
        if side_class(b.left()) != SideClass::HasEven || side_class(b.right()) != SideClass::HasEven {
            continue;
        }
        let got = oracle.outcome(&b.clone().into())?;
        let claimed = classify_outcome(b);
        report.check(got == claimed, || format!("{b}: oracle {got}, classifier {claimed}"));
    }
    Ok(report)
}

/// Pairs `(G, H)` claimed equivalent: `e| = 0`, `d| = 1|`, `|1 + 1| = 0`,
/// and their mirror images.
pub fn reduction_pairs() -> Vec<(Position, Position)> {
    let base = [
        ("2|", "0"),
        ("4|", "0"),
        ("3|", "1|"),
        ("5|", "1|"),
        ("|1 + 1|", "0"),
    ];
    let mut pairs = Vec::new();
    for (g, h) in base {
        let g: Position = g.parse().expect("literal");
        let h: Position = h.parse().expect("literal");
        let mirrored = (g.mirror(), h.mirror());
        if mirrored.0.canonical_key() != g.canonical_key() {
            pairs.push((g, h));
            pairs.push(mirrored);
        } else {
            pairs.push((g, h));
        }
    }
    pairs
}

/// The reduction pairs against every sum of at most two boards of mass at
/// most `board_mass` each.
pub fn reductions(oracle: &mut Oracle, board_mass: u64) -> Result<SuiteReport, OracleError> {
    let mut report = SuiteReport::new(Suite::Reductions);
    let bound = EnumBound {
        max_components: 2,
        max_side_bumps: board_mass as usize,
        max_board_mass: board_mass,
        max_total_mass: 2 * board_mass,
    };
    let xs = enumerate::positions(&bound);
    for (g, h) in reduction_pairs() {
        let r = algebra::check_equiv_sampled(oracle, &g, &h, &xs).map_err(|e| match e {
            algebra::AlgebraError::Oracle(e) => e,
            algebra::AlgebraError::NotOneBump(_) => unreachable!("no one-bump reduction here"),
        })?;
        report.checked += r.checked;
        report.failed += r.disagreements.len();
        for w in r.disagreements.iter().take(SuiteReport::KEPT.saturating_sub(report.examples.len())) {
            report
                .examples
                .push(format!("{g} vs {h} with X = {}: {} vs {}", w.x, w.g_outcome, w.h_outcome));
        }
    }
    Ok(report)
}

/// Every multiset of at most four one-bump boards with heights up to
/// `max_height`.
pub fn one_bump_multisets(max_height: u64) -> Vec<Vec<Board>> {
    fn go(pool: &[Board], from: usize, left: usize, cur: &mut Vec<Board>, out: &mut Vec<Vec<Board>>) {
        out.push(cur.clone());
        if left == 0 {
            return;
        }
        for i in from..pool.len() {
            cur.push(pool[i].clone());
            go(pool, i, left - 1, cur, out);
            cur.pop();
        }
    }
    let pool = enumerate::one_bump_boards(max_height);
    let mut out = Vec::new();
    go(&pool, 0, 4, &mut Vec::new(), &mut out);
    out
}

pub fn disjunctive_sums(oracle: &mut Oracle, max_height: u64) -> Result<SuiteReport, OracleError> {
    let mut report = SuiteReport::new(Suite::DisjSum);
    for comps in one_bump_multisets(max_height) {
        let claimed = algebra::one_bump_sum_outcome(&comps).expect("one-bump components");
        let pos = Position::new(comps);
        let got = oracle.outcome(&pos)?;
        report.check(got == claimed, || format!("{pos}: oracle {got}, unit count {claimed}"));
    }
    Ok(report)
}

/// Two moves by one player never reach anything one move could not.
pub fn hereditarily_closed(b: &Board, player: Player) -> bool {
    let once: HashSet<Board> = b.successors(player).map(|(_, n)| n).collect();
    once.iter()
        .all(|n| n.successors(player).all(|(_, nn)| once.contains(&nn)))
}

/// If `player` has no move, every opponent move either leaves them stuck or
/// allows a `player` reply after which they are stuck again.
pub fn blocking_closed(b: &Board, player: Player) -> bool {
    if b.move_count(player) > 0 {
        return true;
    }
    b.successors(player.opponent()).all(|(_, gr)| {
        gr.move_count(player) == 0 || gr.successors(player).any(|(_, grl)| grl.move_count(player) == 0)
    })
}

pub fn closure(oracle: &mut Oracle, boards: &[Board]) -> Result<SuiteReport, OracleError> {
    let mut report = SuiteReport::new(Suite::Closure);
    for b in boards {
        for player in Player::BOTH {
            report.check(hereditarily_closed(b, player), || format!("{b}: {player} two-step escapes"));
            report.check(blocking_closed(b, player), || format!("{b}: not blocking for {player}"));
        }
        let here = oracle.outcome(&b.clone().into())?;
        let there = oracle.outcome(&b.mirror().into())?;
        report.check(there == here.conjugate(), || format!("{b} is {here}, mirror is {there}"));
    }
    Ok(report)
}
