//! Exhaustive `O(n⁴)` reference counts.
//!
//! Nothing here touches the sweep in [`crate::counter`]; the only shared
//! code is the orientation predicate.

use log::warn;
use thiserror::Error;

use crate::counter::PatternTally;
use crate::geometry::{ExactPoint, Orientation, Point, PointSet};

/// Largest set size the oracle accepts unless told otherwise.
pub const DEFAULT_CAP: usize = 100;
/// Above this size the oracle logs a warning about run time.
pub const WARN_ABOVE: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("the oracle needs at least 4 points, got {0}")]
    TooFewPoints(usize),
    #[error("{n} points exceed the oracle cap of {cap}")]
    ExceedsCap { n: usize, cap: usize },
    #[error("degenerate configuration: a zero orientation was encountered")]
    Degenerate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PatternType {
    A,
    B,
}

fn nonzero(o: Orientation) -> Result<Orientation, OracleError> {
    match o {
        Orientation::Collinear => Err(OracleError::Degenerate),
        o => Ok(o),
    }
}

fn strictly_inside<P: ExactPoint>(a: &P, b: &P, c: &P, p: &P) -> Result<bool, OracleError> {
    let s1 = nonzero(P::orient(a, b, p))?;
    let s2 = nonzero(P::orient(b, c, p))?;
    let s3 = nonzero(P::orient(c, a, p))?;
    Ok(s1 == s2 && s2 == s3)
}

/// Generic form of [`is_convex_quadruple`].
pub fn convex_quadruple<P: ExactPoint>(w: &P, x: &P, y: &P, z: &P) -> Result<bool, OracleError> {
    let inside = strictly_inside(x, y, z, w)?
        || strictly_inside(w, y, z, x)?
        || strictly_inside(w, x, z, y)?
        || strictly_inside(w, x, y, z)?;
    Ok(!inside)
}

/// True iff no one of the four points lies inside the triangle of the
/// other three.
pub fn is_convex_quadruple(w: &Point, x: &Point, y: &Point, z: &Point) -> Result<bool, OracleError> {
    convex_quadruple(w, x, y, z)
}

/// Generic form of [`classify_pattern`].
pub fn pattern_type<P: ExactPoint>(p: &P, q: &P, r: &P, s: &P) -> Result<PatternType, OracleError> {
    let cone = nonzero(P::orient(p, r, s))?;
    let rq = nonzero(P::orient(p, r, q))?;
    let qs = nonzero(P::orient(p, q, s))?;
    Ok(if rq == cone && qs == cone {
        PatternType::A
    } else {
        PatternType::B
    })
}

/// Type of the pattern `((p, q), {r, s})`: A iff `q` is strictly inside
/// the cone at `p` bounded by rays `p→r` and `p→s`.
pub fn classify_pattern(p: &Point, q: &Point, r: &Point, s: &Point) -> Result<PatternType, OracleError> {
    pattern_type(p, q, r, s)
}

/// Net value of the twelve patterns inside a 4-subset under weights
/// A = +3, B = −1. Four for a convex subset, zero otherwise.
pub fn quadruple_pattern_value<P: ExactPoint>(quad: [&P; 4]) -> Result<i64, OracleError> {
    let mut value = 0;
    for p in 0..4 {
        for q in 0..4 {
            if p == q {
                continue;
            }
            let mut rest = (0..4).filter(|&k| k != p && k != q);
            let (r, s) = (rest.next().unwrap(), rest.next().unwrap());
            value += match pattern_type(quad[p], quad[q], quad[r], quad[s])? {
                PatternType::A => 3,
                PatternType::B => -1,
            };
        }
    }
    Ok(value)
}

fn check_size(n: usize, cap: usize) -> Result<(), OracleError> {
    if n < 4 {
        return Err(OracleError::TooFewPoints(n));
    }
    if n > cap {
        return Err(OracleError::ExceedsCap { n, cap });
    }
    if n > WARN_ABOVE {
        warn!("brute-force oracle on {n} points enumerates O(n^4) subsets");
    }
    Ok(())
}

fn count_convex<P: ExactPoint>(pts: &[P]) -> Result<u64, OracleError> {
    let n = pts.len();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                for l in k + 1..n {
                    if convex_quadruple(&pts[i], &pts[j], &pts[k], &pts[l])? {
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(count)
}

fn tally_patterns<P: ExactPoint>(pts: &[P]) -> Result<PatternTally, OracleError> {
    let n = pts.len();
    let (mut a, mut b) = (0, 0);
    for p in 0..n {
        for q in 0..n {
            if q == p {
                continue;
            }
            for r in 0..n {
                if r == p || r == q {
                    continue;
                }
                for s in r + 1..n {
                    if s == p || s == q {
                        continue;
                    }
                    match pattern_type(&pts[p], &pts[q], &pts[r], &pts[s])? {
                        PatternType::A => a += 1,
                        PatternType::B => b += 1,
                    }
                }
            }
        }
    }
    Ok(PatternTally { a, b, total: a + b })
}

/// Number of convex 4-subsets, by enumeration.
pub fn oracle_count(set: &PointSet) -> Result<u64, OracleError> {
    oracle_count_capped(set, DEFAULT_CAP)
}

pub fn oracle_count_capped(set: &PointSet, cap: usize) -> Result<u64, OracleError> {
    check_size(set.len(), cap)?;
    match set.to_fast() {
        Some(fast) => count_convex(&fast),
        None => count_convex(set.points()),
    }
}

/// Classifies every pattern of the set.
pub fn oracle_pattern_tally(set: &PointSet) -> Result<PatternTally, OracleError> {
    oracle_pattern_tally_capped(set, DEFAULT_CAP)
}

pub fn oracle_pattern_tally_capped(set: &PointSet, cap: usize) -> Result<PatternTally, OracleError> {
    check_size(set.len(), cap)?;
    match set.to_fast() {
        Some(fast) => tally_patterns(&fast),
        None => tally_patterns(set.points()),
    }
}
