//! Plain-text point-set files.
//!
//! ```text
//! # optional comments start with '#'
//! 3            <- optional point count, first non-comment line only
//! 0 0
//! 10 0
//! -5 7
//! ```
//!
//! Coordinates are signed decimal integers of any length separated by
//! whitespace. The canonical form written by [`serialize_pointset`] has no
//! header or comments, one `x y` pair per line with a single space, and a
//! trailing newline.

use num_bigint::BigInt;
use thiserror::Error;

use crate::geometry::{validate_general_position, Point, PointSet, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected two integers, found {text:?}")]
    Malformed { line: usize, text: String },
    #[error("header declares {declared} points but {found} were given")]
    CountMismatch { declared: usize, found: usize },
    #[error("a point set needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("not in general position: {0}")]
    GeneralPosition(#[from] Violation),
}

fn parse_int(token: &str) -> Option<BigInt> {
    let digits = token.strip_prefix(['-', '+']).unwrap_or(token);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    token.parse().ok()
}

/// Reads points without any geometric validation.
pub fn parse_points(text: &str) -> Result<Vec<Point>, ParseError> {
    let mut points = Vec::new();
    let mut declared = None;
    let mut seen_content = false;
    for (number, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = || ParseError::Malformed {
            line: number + 1,
            text: raw.to_string(),
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [count] if !seen_content => {
                declared = Some(count.parse::<usize>().map_err(|_| malformed())?);
            }
            [x, y] => {
                let x = parse_int(x).ok_or_else(malformed)?;
                let y = parse_int(y).ok_or_else(malformed)?;
                points.push(Point { x, y });
            }
            _ => return Err(malformed()),
        }
        seen_content = true;
    }
    if let Some(declared) = declared {
        if declared != points.len() {
            return Err(ParseError::CountMismatch {
                declared,
                found: points.len(),
            });
        }
    }
    Ok(points)
}

/// Reads and validates a point set.
pub fn parse_pointset(text: &str) -> Result<PointSet, ParseError> {
    let points = parse_points(text)?;
    if points.len() < 3 {
        return Err(ParseError::TooFewPoints(points.len()));
    }
    validate_general_position(&points)?;
    Ok(PointSet::from_valid(points))
}

pub fn serialize_pointset(set: &PointSet) -> String {
    let mut out = String::new();
    for p in set.points() {
        out.push_str(&p.x.to_string());
        out.push(' ');
        out.push_str(&p.y.to_string());
        out.push('\n');
    }
    out
}

/// A checkpoint file: one `# ` summary comment line, then the canonical set.
pub fn format_checkpoint(set: &PointSet, summary: &str) -> String {
    format!("# {summary}\n{}", serialize_pointset(set))
}
