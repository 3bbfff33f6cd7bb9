//! The `O(n² log n)` crossing counter.
//!
//! A *pattern* is an ordered pair `(p, q)` together with an unordered pair
//! `{r, s}` of two further points. It has type A when `q` lies strictly
//! inside the convex cone with apex `p` spanned by the rays `p→r` and `p→s`,
//! and type B otherwise. Every convex 4-subset carries four type-A patterns
//! and every non-convex one carries three, out of twelve patterns each, so
//!
//! ```text
//! crossings = (3A - B) / 4
//! ```
//!
//! Type-A patterns are counted apex by apex. Sort the other points
//! counterclockwise around the apex as `y_0, …, y_{m-1}` and let `a[i]` be
//! the number of points whose counterclockwise offset from `y_i` is strictly
//! less than π. Those points form a contiguous run after `y_i`, and any two
//! of them, `q` before `s`, give the type-A pattern `((apex, q), {y_i, s})`.
//! The apex therefore contributes `Σ C(a[i], 2)`.

use std::cmp::Ordering;

use rayon::prelude::*;
use thiserror::Error;

use crate::geometry::{ArithmeticPath, ExactPoint, Orientation, PointSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("crossing counts need at least 4 points, got {0}")]
    TooFewPoints(usize),
    #[error("points {first} and {second} are collinear with apex {apex}")]
    AngularTie {
        apex: usize,
        first: usize,
        second: usize,
    },
    #[error("3A - B = {value} is not divisible by 4")]
    Indivisible { value: i128 },
    #[error("coordinates exceed the fixed-width gate")]
    FixedWidthUnavailable,
}

/// The other points of the set, sorted counterclockwise around `apex`
/// starting from the positive x direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AngularOrder {
    pub apex: usize,
    pub order: Vec<usize>,
}

/// `counts[i]` is the number of points within a counterclockwise offset in
/// `(0, π)` of `order[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfplaneCounts {
    pub apex: usize,
    pub counts: Vec<usize>,
}

impl HalfplaneCounts {
    /// Number of type-A patterns with this apex.
    pub fn type_a_patterns(&self) -> u64 {
        self.counts.iter().map(|&a| choose2(a as u64)).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PatternTally {
    pub a: u64,
    pub b: u64,
    pub total: u64,
}

impl PatternTally {
    pub fn from_type_a(n: usize, a: u64) -> Self {
        let total = total_patterns(n);
        PatternTally {
            a,
            b: total - a,
            total,
        }
    }

    /// `(3A - B) / 4`, the number of convex quadrilaterals.
    pub fn crossings(&self) -> Result<u64, CountError> {
        let value = 3 * self.a as i128 - self.b as i128;
        if value < 0 || value % 4 != 0 {
            return Err(CountError::Indivisible { value });
        }
        Ok((value / 4) as u64)
    }
}

/// `n (n-1) C(n-2, 2)`.
pub fn total_patterns(n: usize) -> u64 {
    if n < 4 {
        return 0;
    }
    let n = n as u64;
    n * (n - 1) * choose2(n - 2)
}

fn choose2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

fn compare_around<P: ExactPoint>(apex: &P, u: &P, v: &P) -> Ordering {
    match (u.is_upper_around(apex), v.is_upper_around(apex)) {
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        _ => match P::orient(apex, u, v) {
            Orientation::CounterClockwise => Ordering::Less,
            Orientation::Clockwise => Ordering::Greater,
            Orientation::Collinear => Ordering::Equal,
        },
    }
}

/// Sorts every point except `apex` counterclockwise around it.
pub fn angular_order_around<P: ExactPoint>(
    points: &[P],
    apex: usize,
) -> Result<AngularOrder, CountError> {
    let centre = &points[apex];
    let mut order: Vec<usize> = (0..points.len()).filter(|&i| i != apex).collect();
    order.sort_unstable_by(|&u, &v| compare_around(centre, &points[u], &points[v]));
    for pair in order.windows(2) {
        if compare_around(centre, &points[pair[0]], &points[pair[1]]) == Ordering::Equal {
            return Err(CountError::AngularTie {
                apex,
                first: pair[0],
                second: pair[1],
            });
        }
    }
    Ok(AngularOrder { apex, order })
}

fn sweep<P: ExactPoint>(points: &[P], order: &AngularOrder) -> Result<Vec<usize>, CountError> {
    let centre = &points[order.apex];
    let ys = &order.order;
    let m = ys.len();
    let mut counts = vec![0; m];
    // `end` is an unwrapped index into the circular order; it never moves back.
    let mut end = 1;
    for i in 0..m {
        end = end.max(i + 1);
        while end < i + m {
            match P::orient(centre, &points[ys[i]], &points[ys[end % m]]) {
                Orientation::CounterClockwise => end += 1,
                Orientation::Clockwise => break,
                Orientation::Collinear => {
                    return Err(CountError::AngularTie {
                        apex: order.apex,
                        first: ys[i],
                        second: ys[end % m],
                    })
                }
            }
        }
        counts[i] = end - i - 1;
    }
    Ok(counts)
}

/// One circular two-pointer pass over an angular order.
///
/// Expects points in general position; collinear triples through the apex
/// make the result meaningless (the counting entry points report them).
pub fn apex_halfplane_counts<P: ExactPoint>(points: &[P], order: &AngularOrder) -> HalfplaneCounts {
    let counts = sweep(points, order).expect("angular order is not in general position");
    HalfplaneCounts {
        apex: order.apex,
        counts,
    }
}

fn apex_type_a<P: ExactPoint>(points: &[P], apex: usize) -> Result<u64, CountError> {
    let order = angular_order_around(points, apex)?;
    Ok(sweep(points, &order)?
        .into_iter()
        .map(|a| choose2(a as u64))
        .sum())
}

/// Type-A and type-B pattern counts over a raw slice of points.
pub fn tally_points<P: ExactPoint>(points: &[P]) -> Result<PatternTally, CountError> {
    if points.len() < 4 {
        return Err(CountError::TooFewPoints(points.len()));
    }
    let mut a = 0;
    for apex in 0..points.len() {
        a += apex_type_a(points, apex)?;
    }
    Ok(PatternTally::from_type_a(points.len(), a))
}

/// [`tally_points`] with the apexes distributed over the rayon pool.
pub fn tally_points_parallel<P: ExactPoint>(points: &[P]) -> Result<PatternTally, CountError> {
    if points.len() < 4 {
        return Err(CountError::TooFewPoints(points.len()));
    }
    let a = (0..points.len())
        .into_par_iter()
        .map(|apex| apex_type_a(points, apex))
        .try_reduce(|| 0, |x, y| Ok(x + y))?;
    Ok(PatternTally::from_type_a(points.len(), a))
}

pub fn angular_orders(set: &PointSet) -> Result<Vec<AngularOrder>, CountError> {
    match set.to_fast() {
        Some(fast) => (0..fast.len()).map(|i| angular_order_around(&fast, i)).collect(),
        None => (0..set.len())
            .map(|i| angular_order_around(set.points(), i))
            .collect(),
    }
}

/// Tallies patterns on the arithmetic path chosen by
/// [`select_arithmetic_path`](crate::geometry::select_arithmetic_path).
pub fn count_patterns(set: &PointSet) -> Result<PatternTally, CountError> {
    count_patterns_with(set, set.arithmetic_path())
}

pub fn count_patterns_with(set: &PointSet, path: ArithmeticPath) -> Result<PatternTally, CountError> {
    match path {
        ArithmeticPath::FixedWidth128 => {
            tally_points(&set.to_fast().ok_or(CountError::FixedWidthUnavailable)?)
        }
        ArithmeticPath::ArbitraryPrecision => tally_points(set.points()),
    }
}

pub fn count_patterns_parallel(set: &PointSet) -> Result<PatternTally, CountError> {
    match set.to_fast() {
        Some(fast) => tally_points_parallel(&fast),
        None => tally_points_parallel(set.points()),
    }
}

/// Number of crossings of the complete graph drawn on `set`, equivalently
/// the number of convex 4-subsets.
pub fn count_crossings(set: &PointSet) -> Result<u64, CountError> {
    count_patterns(set)?.crossings()
}

pub fn count_crossings_with(set: &PointSet, path: ArithmeticPath) -> Result<u64, CountError> {
    count_patterns_with(set, path)?.crossings()
}
