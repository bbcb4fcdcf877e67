//! Terminal play against the engine.

use std::io::{self, BufRead, Write};

use cpitch_core::{winning_moves, Move, Oracle, OracleError, Player, Position};

/// The engine's choice for `player`: a winning move if one exists, else the
/// tie-break first legal move. `None` when `player` has no move.
pub fn engine_move(oracle: &mut Oracle, position: &Position, player: Player) -> Result<Option<Move>, OracleError> {
    let mut candidates = match position.single() {
        Some(board) => winning_moves(board, player),
        None => oracle.best_moves(position, player)?,
    };
    if candidates.is_empty() {
        candidates = position.moves(player).into_iter().map(|(m, _)| m).collect();
    }
    Ok(candidates.into_iter().min_by_key(Move::tie_break_key))
}

fn player_name(p: Player) -> &'static str {
    match p {
        Player::Left => "Left",
        Player::Right => "Right",
    }
}

/// Parses `L k` / `R k`, optionally followed by a 0-based component index.
fn parse_move(line: &str) -> Result<Move, String> {
    let mut parts = line.split_whitespace();
    let who = parts
        .next()
        .and_then(|t| {
            let mut c = t.chars();
            let p = Player::from_letter(c.next()?);
            if c.next().is_some() {
                None
            } else {
                p
            }
        })
        .ok_or_else(|| "expected `L k` or `R k`".to_string())?;
    let k = parts
        .next()
        .and_then(|t| t.parse::<usize>().ok())
        .ok_or_else(|| "expected a bump count after the player".to_string())?;
    let component = match parts.next() {
        Some(t) => t.parse::<usize>().map_err(|_| format!("bad component index `{t}`"))?,
        None => 0,
    };
    if parts.next().is_some() {
        return Err("too many fields".into());
    }
    Ok(Move::new(component, who, k))
}

/// Runs the REPL until the game ends or input runs out. Returns the winner
/// if the game finished.
pub fn play<R: BufRead, W: Write>(
    oracle: &mut Oracle,
    start: Position,
    human: Player,
    first: Player,
    mut input: R,
    out: &mut W,
) -> io::Result<Option<Player>> {
    let mut position = start;
    let mut to_move = first;
    let mut line = String::new();
    loop {
        writeln!(out, "{position}    ({} to move)", player_name(to_move))?;
        if !position.has_move(to_move) {
            writeln!(out, "{} has no move and wins.", player_name(to_move))?;
            return Ok(Some(to_move));
        }
        let mv = if to_move == human {
            write!(out, "> ")?;
            out.flush()?;
            line.clear();
            if input.read_line(&mut line)? == 0 {
                writeln!(out)?;
                return Ok(None);
            }
            let trimmed = line.trim();
            if trimmed == "quit" || trimmed == "q" {
                return Ok(None);
            }
            match parse_move(trimmed) {
                Ok(mv) if mv.player != human => {
                    writeln!(out, "you are {}", player_name(human))?;
                    continue;
                }
                Ok(mv) => mv,
                Err(e) => {
                    writeln!(out, "{e}")?;
                    continue;
                }
            }
        } else {
            let mv = engine_move(oracle, &position, to_move)
                .map_err(|e| io::Error::other(e.to_string()))?
                .expect("mover has a move");
            writeln!(out, "engine plays {mv}")?;
            mv
        };
        match position.apply(mv) {
            Some(next) => {
                position = next;
                to_move = to_move.opponent();
            }
            None => writeln!(out, "illegal move {mv}")?,
        }
    }
}
