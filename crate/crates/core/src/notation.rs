//! Text notation.
//!
//! ```text
//! position := board ("+" board)* | "0"
//! board    := side? "|" side?
//! side     := INT ("," INT)*        INT >= 1
//! ```
//!
//! Sides are written in board order, so `2,3,2|4,2` has `2` touching the
//! roller on both sides. Whitespace around tokens is ignored.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::{Board, Player, Position, Side};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty position (write `0` for the empty sum)")]
    Empty,
    #[error("board `{0}` has no roller `|`")]
    MissingRoller(String),
    #[error("board `{0}` has more than one roller `|`")]
    ExtraRoller(String),
    #[error("empty bump in `{0}`")]
    EmptyBump(String),
    #[error("`{0}` is not a bump height")]
    NotANumber(String),
    #[error("bump `{0}` must be at least 1")]
    NonPositive(String),
}

impl ParseError {
    /// The offending piece of input.
    pub fn token(&self) -> &str {
        match self {
            ParseError::Empty => "",
            ParseError::MissingRoller(t)
            | ParseError::ExtraRoller(t)
            | ParseError::EmptyBump(t)
            | ParseError::NotANumber(t)
            | ParseError::NonPositive(t) => t,
        }
    }
}

fn parse_side(text: &str, on: Player) -> Result<Side, ParseError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Side::EMPTY);
    }
    let mut bumps = Vec::new();
    for tok in text.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            return Err(ParseError::EmptyBump(text.to_string()));
        }
        if tok.starts_with('-') && tok[1..].chars().all(|c| c.is_ascii_digit()) && tok.len() > 1 {
            return Err(ParseError::NonPositive(tok.to_string()));
        }
        if !tok.chars().all(|c| c.is_ascii_digit()) {
            return Err(ParseError::NotANumber(tok.to_string()));
        }
        let v: u64 = tok
            .parse()
            .map_err(|_| ParseError::NotANumber(tok.to_string()))?;
        if v == 0 {
            return Err(ParseError::NonPositive(tok.to_string()));
        }
        bumps.push(v);
    }
    Ok(Side::from_written(&bumps, on))
}

impl FromStr for Board {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        let mut parts = trimmed.split('|');
        let left = parts.next().unwrap_or_default();
        let Some(right) = parts.next() else {
            return Err(ParseError::MissingRoller(trimmed.to_string()));
        };
        if parts.next().is_some() {
            return Err(ParseError::ExtraRoller(trimmed.to_string()));
        }
        Ok(Board::new(
            parse_side(left, Player::Left)?,
            parse_side(right, Player::Right)?,
        ))
    }
}

impl FromStr for Position {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(ParseError::Empty);
        }
        if trimmed == "0" {
            return Ok(Position::zero());
        }
        trimmed.split('+').map(str::parse::<Board>).collect()
    }
}

impl fmt::Display for Position {
    /// Canonical form: components sorted, joined by ` + `; `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("0");
        }
        for (i, b) in self.sorted_components().iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}
