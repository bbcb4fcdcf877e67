//! `cpitch`: command-line solver for misère Cricket Pitch.

mod play;
mod report;

use std::io::{self, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cpitch_core::enumerate::EnumBound;
use cpitch_core::verify::{self, Suite, VerifyConfig};
use cpitch_core::{
    classify, classify_outcome, distinguish, one_bump_sum_outcome, random_board, reduce_one_bump, strip_odd_tail,
    winning_moves, AlgebraError, Board, Move, Oracle, OracleError, ParseError, Player, Position, SearchBudget,
};

use report::{outcome_with_pair, Report, WitnessJson};

const MAX_STATES_ENV: &str = "CPITCH_MAX_STATES";

#[derive(Parser, Debug)]
#[command(name = "cpitch", version, about = "Misère Cricket Pitch solver")]
struct Cli {
    /// Print one JSON object per line instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Oracle state budget (default: $CPITCH_MAX_STATES or 10^7).
    #[arg(long, global = true, value_name = "N")]
    max_states: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Outcome of a single board by the closed-form classifier.
    Outcome {
        position: String,
        /// Print the rules that decided the outcome.
        #[arg(long)]
        trace: bool,
        /// Solve sums of several boards with the exhaustive oracle.
        #[arg(long)]
        oracle: bool,
    },
    /// Outcome by exhaustive search; works for sums.
    Oracle { position: String },
    /// Winning moves for a player.
    BestMove {
        position: String,
        #[arg(long, value_enum)]
        player: Side,
    },
    /// Odd-tail reduced boards and one-bump canonical forms.
    Reduce { position: String },
    /// Outcome of the sum of the given positions.
    Sum {
        #[arg(required = true)]
        positions: Vec<String>,
    },
    /// Search for X with o(G + X) != o(H + X).
    Distinguish {
        g: String,
        h: String,
        #[arg(long, default_value_t = 6)]
        max_mass: u64,
        #[arg(long, default_value_t = 2)]
        max_components: usize,
    },
    /// Run the exhaustive check suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 10)]
        max_mass: u64,
        #[arg(long, default_value_t = 7)]
        max_bumps: usize,
    },
    /// Play against the engine in the terminal.
    Play {
        position: String,
        #[arg(long, value_enum)]
        human: Side,
        /// Who moves first (defaults to the human).
        #[arg(long, value_enum)]
        first: Option<Side>,
    },
    /// Time the classifier on a seeded random board.
    Bench {
        #[arg(long, default_value_t = 1_000_000)]
        bumps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Side {
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "R", alias = "r")]
    R,
}

impl From<Side> for Player {
    fn from(s: Side) -> Player {
        match s {
            Side::L => Player::Left,
            Side::R => Player::Right,
        }
    }
}

#[derive(Debug)]
enum CliError {
    Parse(ParseError),
    Usage(String),
    Budget(OracleError),
    VerifyFailed(Box<Report>),
    Io(io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
            CliError::VerifyFailed(_) => 1,
            CliError::Io(_) => 1,
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Budget(e)
    }
}

impl From<AlgebraError> for CliError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Oracle(e) => CliError::Budget(e),
            AlgebraError::NotOneBump(b) => CliError::Usage(format!("`{b}` is not a one-bump board")),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn budget(cli: &Cli) -> Result<SearchBudget, CliError> {
    let states = match cli.max_states {
        Some(n) => n,
        None => match std::env::var(MAX_STATES_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("{MAX_STATES_ENV}=`{v}` is not a number")))?,
            Err(_) => SearchBudget::DEFAULT_MAX_STATES,
        },
    };
    if states == 0 {
        return Err(CliError::Usage("state budget must be positive".into()));
    }
    Ok(SearchBudget::new(states, SearchBudget::DEFAULT_MAX_MASS))
}

fn parse(s: &str) -> Result<Position, CliError> {
    Ok(s.parse::<Position>()?)
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn moves_json(moves: &[Move]) -> serde_json::Value {
    moves.iter().map(|m| json!({"component": m.component, "player": m.player.to_string(), "k": m.k})).collect()
}

fn run(cli: &Cli) -> Result<Option<Report>, CliError> {
    let budget = budget(cli)?;
    let start = Instant::now();
    let report = match &cli.command {
        Command::Outcome { position, trace, oracle } => {
            let p = parse(position)?;
            let mut r = Report::new("outcome", p.to_string());
            match p.single() {
                Some(board) => {
                    let (o, t) = classify(board);
                    r.set_outcome(o);
                    r.set_trace(&t);
                    r.line(o.to_string());
                    if *trace {
                        for rule in t.rules() {
                            r.line(format!("  {rule}"));
                        }
                    }
                }
                None if *oracle => {
                    let mut solver = Oracle::new(budget);
                    let o = solver.outcome(&p)?;
                    r.set_outcome(o);
                    r.states = Some(solver.states_explored());
                    r.line(o.to_string());
                }
                None => {
                    return Err(CliError::Usage(format!(
                        "`{p}` has {} components; the classifier handles single boards only, pass --oracle to search the sum",
                        p.len()
                    )))
                }
            }
            r
        }
        Command::Oracle { position } => {
            let p = parse(position)?;
            let mut solver = Oracle::new(budget);
            let o = solver.outcome(&p)?;
            let mut r = Report::new("oracle", p.to_string());
            r.set_outcome(o);
            r.states = Some(solver.states_explored());
            r.line(outcome_with_pair(o));
            r
        }
        Command::BestMove { position, player } => {
            let p = parse(position)?;
            let player = Player::from(*player);
            let mut r = Report::new("best-move", p.to_string());
            let (moves, o) = match p.single() {
                Some(board) => (winning_moves(board, player), classify_outcome(board)),
                None => {
                    let mut solver = Oracle::new(budget);
                    let moves = solver.best_moves(&p, player)?;
                    let o = solver.outcome(&p)?;
                    r.states = Some(solver.states_explored());
                    (moves, o)
                }
            };
            r.set_outcome(o);
            let mut sorted = moves.clone();
            sorted.sort_by_key(Move::tie_break_key);
            if !p.has_move(player) {
                r.line(format!("{player} has no move (and wins if it is their turn)"));
            } else if let Some(best) = sorted.first() {
                r.line(format!("best: {best}"));
                let all: Vec<String> = sorted.iter().map(ToString::to_string).collect();
                r.line(format!("winning: {}", all.join(", ")));
            } else {
                r.line(format!("none: {player} loses moving first"));
            }
            r.detail = json!({ "player": player.to_string(), "moves": moves_json(&sorted) });
            r
        }
        Command::Reduce { position } => {
            let p = parse(position)?;
            let reduced: Position = p
                .components()
                .iter()
                .map(|b| Board::new(strip_odd_tail(b.left()), strip_odd_tail(b.right())))
                .collect();
            let mut r = Report::new("reduce", p.to_string());
            r.line(reduced.to_string());
            let mut canon = Vec::new();
            for b in p.sorted_components() {
                if let Ok(c) = reduce_one_bump(&b) {
                    r.line(format!("  {b} = {}", c.to_board()));
                    canon.push(json!({"board": b.to_string(), "canonical": c.to_board().to_string()}));
                }
            }
            r.detail = json!({ "reduced": reduced.to_string(), "one_bump": canon });
            r
        }
        Command::Sum { positions } => {
            let mut total = Position::zero();
            for s in positions {
                total = total + parse(s)?;
            }
            let mut r = Report::new("sum", total.to_string());
            let (o, method) = match one_bump_sum_outcome(total.components()) {
                Ok(o) => (o, "unit-count"),
                Err(AlgebraError::NotOneBump(_)) => {
                    let mut solver = Oracle::new(budget);
                    let o = solver.outcome(&total)?;
                    r.states = Some(solver.states_explored());
                    (o, "oracle")
                }
                Err(e) => return Err(e.into()),
            };
            r.set_outcome(o);
            r.line(format!("{} via {method}", outcome_with_pair(o)));
            r.detail = json!({ "method": method });
            r
        }
        Command::Distinguish { g, h, max_mass, max_components } => {
            let (gp, hp) = (parse(g)?, parse(h)?);
            let bound = EnumBound::by_total_mass(*max_mass, *max_components);
            let mut solver = Oracle::new(budget);
            let rep = distinguish(&mut solver, &gp, &hp, &bound)?;
            let mut r = Report::new("distinguish", json!([gp.to_string(), hp.to_string()]));
            r.states = Some(solver.states_explored());
            match &rep.witness {
                Some(w) => {
                    r.line(format!(
                        "witness X = {}: o(G+X) = {}, o(H+X) = {} (searched {})",
                        w.x, w.g_outcome, w.h_outcome, rep.searched
                    ));
                    r.witness = Some(WitnessJson::from(w));
                }
                None => r.line(format!(
                    "no witness within max-mass {max_mass}, max-components {max_components} (searched {})",
                    rep.searched
                )),
            }
            r.detail = json!({ "searched": rep.searched, "bound": rep.bound });
            r
        }
        Command::Verify { suite, max_mass, max_bumps } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse().map_err(CliError::Usage)?]
            };
            let config = VerifyConfig {
                max_mass: *max_mass,
                max_bumps: *max_bumps,
                budget,
            };
            let mut r = Report::new("verify", suite.clone());
            let mut reports = Vec::new();
            let mut failed = 0;
            for s in suites {
                let sr = verify::run(s, &config)?;
                let status = if sr.passed() { "PASS" } else { "FAIL" };
                r.line(format!("{status} {}: {} checked, {} failed", sr.suite, sr.checked, sr.failed));
                for e in &sr.examples {
                    r.line(format!("    {e}"));
                }
                failed += usize::from(!sr.passed());
                reports.push(sr);
            }
            r.detail = json!({ "max_mass": max_mass, "max_bumps": max_bumps, "suites": reports });
            r.millis = elapsed_ms(start);
            if failed > 0 {
                return Err(CliError::VerifyFailed(Box::new(r)));
            }
            r
        }
        Command::Play { position, human, first } => {
            let p = parse(position)?;
            let human = Player::from(*human);
            let first = first.map(Player::from).unwrap_or(human);
            let mut solver = Oracle::new(budget);
            let stdin = io::stdin();
            let mut stdout = io::stdout();
            play::play(&mut solver, p, human, first, stdin.lock(), &mut stdout)?;
            return Ok(None);
        }
        Command::Bench { bumps, seed } => {
            let board = random_board(*bumps, *seed);
            let t = Instant::now();
            let o = std::hint::black_box(classify_outcome(std::hint::black_box(&board)));
            let secs = t.elapsed().as_secs_f64();
            let rate = *bumps as f64 / secs.max(1e-9);
            let mut r = Report::new("bench", format!("random({bumps}, seed={seed})"));
            r.set_outcome(o);
            r.line(format!(
                "bumps={bumps} seed={seed} outcome={o} time={:.3}ms bumps/sec={rate:.3e}",
                secs * 1e3
            ));
            r.detail = json!({ "bumps": bumps, "seed": seed, "bumps_per_sec": rate, "classify_millis": secs * 1e3 });
            r
        }
    };
    let mut report = report;
    if report.millis == 0.0 {
        report.millis = elapsed_ms(start);
    }
    Ok(Some(report))
}

fn emit(report: &Report, json: bool) {
    let mut out = io::stdout().lock();
    let _ = if json {
        writeln!(out, "{}", report.to_json_line())
    } else {
        write!(out, "{}", report.text)
    };
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Some(report)) => {
            emit(&report, cli.json);
            ExitCode::SUCCESS
        }
        Ok(None) => ExitCode::SUCCESS,
        Err(e) => {
            let code = e.exit_code();
            match e {
                CliError::VerifyFailed(report) => emit(&report, cli.json),
                CliError::Parse(p) => eprintln!("error: {p} (offending token: `{}`)", p.token()),
                CliError::Usage(m) => eprintln!("error: {m}"),
                CliError::Budget(b) => eprintln!("error: {b}"),
                CliError::Io(io) => eprintln!("error: {io}"),
            }
            ExitCode::from(code)
        }
    }
}
