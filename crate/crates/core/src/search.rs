//! Randomized local search for point sets with few crossings.
//!
//! Each iteration picks a point uniformly, proposes moving it by an integer
//! offset with exponentially distributed magnitude, and keeps the move if the
//! crossing count does not increase. When no strict improvement has been
//! seen for `stale_threshold` iterations the whole set is doubled, which
//! halves the offset scale relative to the configuration.
//!
//! # Random stream
//!
//! All randomness comes from [`ChaCha8Rng`] seeded with
//! [`SeedableRng::seed_from_u64`]. Per proposal the stream is consumed as:
//!
//! 1. the point index, `rng.gen_range(0..n)`;
//! 2. for `t_x` then `t_y`: one `next_u64` whose top 53 bits give
//!    `u ∈ [0, 1)`, magnitude `round(-M ln(1 - u))` (half away from zero),
//!    then one `next_u32` whose lowest bit set means negate.
//!
//! Traces are therefore reproducible for a given `(seed, config, start)`.

use num_bigint::BigInt;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::counter::{count_crossings, CountError};
use crate::geometry::{orientation, Orientation, Point, PointSet};
use crate::oracle::{oracle_count, OracleError};

/// Oracle cross-checks only run on sets at most this large.
pub const ORACLE_CHECK_LIMIT: usize = 40;
pub const DEFAULT_MAX_DOUBLINGS: u32 = 16;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("invalid search configuration: {0}")]
    InvalidConfig(&'static str),
    #[error("the search needs at least 4 points, got {0}")]
    TooFewPoints(usize),
    #[error(transparent)]
    Count(#[from] CountError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("count mismatch at iteration {iteration}: incumbent {expected}, recomputed {found}")]
    Inconsistent {
        iteration: u64,
        expected: u64,
        found: u64,
    },
    #[error("could not place {n} points in general position within [-{span}, {span}]")]
    StartGeneration { n: usize, span: i64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub seed: u64,
    /// Expected offset magnitude in lattice units.
    pub initial_mean: f64,
    /// Iterations without strict improvement before the set is doubled.
    pub stale_threshold: u64,
    pub max_doublings: u32,
    pub iteration_budget: u64,
    /// Cross-check the incumbent with the brute-force oracle at every
    /// doubling and at exit (sets of at most [`ORACLE_CHECK_LIMIT`] points).
    pub oracle_checks: bool,
    /// Emit a [`Checkpoint`] every this many iterations.
    pub checkpoint_every: Option<u64>,
}

impl SearchConfig {
    /// Defaults for an `n`-point start: `stale_threshold = 20 n²`,
    /// 16 doublings, 10⁵ iterations, no oracle checks or checkpoints.
    pub fn new(seed: u64, initial_mean: f64, n: usize) -> Self {
        SearchConfig {
            seed,
            initial_mean,
            stale_threshold: 20 * (n as u64) * (n as u64),
            max_doublings: DEFAULT_MAX_DOUBLINGS,
            iteration_budget: 100_000,
            oracle_checks: false,
            checkpoint_every: None,
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if !(self.initial_mean.is_finite() && self.initial_mean > 0.0) {
            return Err(SearchError::InvalidConfig("initial_mean must be positive and finite"));
        }
        if self.stale_threshold == 0 {
            return Err(SearchError::InvalidConfig("stale_threshold must be at least 1"));
        }
        if self.iteration_budget == 0 {
            return Err(SearchError::InvalidConfig("iteration_budget must be at least 1"));
        }
        if self.checkpoint_every == Some(0) {
            return Err(SearchError::InvalidConfig("checkpoint cadence must be at least 1"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchTrace {
    pub iterations: u64,
    pub accepted: u64,
    pub improvements: u64,
    /// Iterations after which the set was doubled.
    pub doubling_events: Vec<u64>,
    pub best_set: PointSet,
    pub best_count: u64,
    /// `(iteration, count)` for the start (iteration 0) and every accepted move.
    pub objective_history: Vec<(u64, u64)>,
}

impl SearchTrace {
    /// One-line summary used in checkpoint files and CLI output.
    pub fn summary(&self) -> String {
        format!(
            "iterations={} accepted={} improvements={} doublings={} count={}",
            self.iterations,
            self.accepted,
            self.improvements,
            self.doubling_events.len(),
            self.best_count
        )
    }
}

/// State handed to the checkpoint observer.
#[derive(Debug)]
pub struct Checkpoint<'a> {
    pub iteration: u64,
    pub set: &'a PointSet,
    pub count: u64,
    pub accepted: u64,
    pub improvements: u64,
    pub doublings: usize,
}

impl Checkpoint<'_> {
    pub fn summary(&self) -> String {
        format!(
            "iterations={} accepted={} improvements={} doublings={} count={}",
            self.iteration, self.accepted, self.improvements, self.doublings, self.count
        )
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn signed_magnitude<R: RngCore + ?Sized>(rng: &mut R, mean: f64) -> i64 {
    let u = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
    // `as` saturates for out-of-range floats.
    let magnitude = (-mean * (-u).ln_1p()).round() as i64;
    if rng.next_u32() & 1 == 1 {
        -magnitude
    } else {
        magnitude
    }
}

/// Two independent exponential offsets, rounded and randomly signed.
pub fn sample_offset<R: RngCore + ?Sized>(rng: &mut R, mean: f64) -> (i64, i64) {
    debug_assert!(mean > 0.0);
    let tx = signed_magnitude(rng, mean);
    let ty = signed_magnitude(rng, mean);
    (tx, ty)
}

/// Picks a point uniformly and a nearby candidate position for it.
pub fn propose<R: Rng + ?Sized>(set: &PointSet, rng: &mut R, mean: f64) -> (usize, Point) {
    let index = rng.gen_range(0..set.len());
    let (tx, ty) = sample_offset(rng, mean);
    let p = &set.points()[index];
    (index, p.translated(&BigInt::from(tx), &BigInt::from(ty)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StepOutcome {
    /// The candidate broke general position.
    Degenerate,
    /// The candidate had more crossings.
    Worse(u64),
    Accepted { set: PointSet, count: u64 },
}

/// Evaluates moving point `index` to `candidate`.
///
/// The move is accepted when the new count is at most `current_count`.
/// A zero move (`candidate` equal to the point it replaces) counts as a
/// duplicate and is rejected.
pub fn evaluate_move(
    set: &PointSet,
    current_count: u64,
    index: usize,
    candidate: Point,
) -> Result<StepOutcome, CountError> {
    if set.points()[index] == candidate {
        return Ok(StepOutcome::Degenerate);
    }
    let Ok(next) = set.with_replacement(index, candidate) else {
        return Ok(StepOutcome::Degenerate);
    };
    let count = count_crossings(&next)?;
    Ok(if count <= current_count {
        StepOutcome::Accepted { set: next, count }
    } else {
        StepOutcome::Worse(count)
    })
}

/// One propose-and-evaluate iteration.
pub fn step<R: Rng + ?Sized>(
    set: &PointSet,
    current_count: u64,
    rng: &mut R,
    mean: f64,
) -> Result<StepOutcome, CountError> {
    let (index, candidate) = propose(set, rng, mean);
    evaluate_move(set, current_count, index, candidate)
}

fn cross_check(set: &PointSet, expected: u64, iteration: u64, oracle: bool) -> Result<(), SearchError> {
    let found = count_crossings(set)?;
    if found != expected {
        return Err(SearchError::Inconsistent {
            iteration,
            expected,
            found,
        });
    }
    if oracle && set.len() <= ORACLE_CHECK_LIMIT {
        let found = oracle_count(set)?;
        if found != expected {
            return Err(SearchError::Inconsistent {
                iteration,
                expected,
                found,
            });
        }
    }
    Ok(())
}

pub fn run(config: &SearchConfig, start: &PointSet) -> Result<SearchTrace, SearchError> {
    run_with_checkpoints(config, start, |_| {})
}

/// [`run`], calling `observer` every `config.checkpoint_every` iterations.
pub fn run_with_checkpoints<F>(
    config: &SearchConfig,
    start: &PointSet,
    mut observer: F,
) -> Result<SearchTrace, SearchError>
where
    F: FnMut(&Checkpoint<'_>),
{
    config.validate()?;
    if start.len() < 4 {
        return Err(SearchError::TooFewPoints(start.len()));
    }
    let mut rng = rng_from_seed(config.seed);
    let mut current = start.clone();
    let mut count = count_crossings(&current)?;
    let mut trace_history = vec![(0, count)];
    let (mut accepted, mut improvements) = (0, 0);
    let mut doubling_events = Vec::new();
    let mut stale = 0;

    for iteration in 1..=config.iteration_budget {
        match step(&current, count, &mut rng, config.initial_mean)? {
            StepOutcome::Accepted { set, count: next } => {
                accepted += 1;
                if next < count {
                    improvements += 1;
                    stale = 0;
                } else {
                    stale += 1;
                }
                current = set;
                count = next;
                trace_history.push((iteration, count));
            }
            StepOutcome::Degenerate | StepOutcome::Worse(_) => stale += 1,
        }

        if stale >= config.stale_threshold && (doubling_events.len() as u32) < config.max_doublings {
            current = current.doubled();
            cross_check(&current, count, iteration, config.oracle_checks)?;
            doubling_events.push(iteration);
            stale = 0;
        }

        if config.checkpoint_every.is_some_and(|every| iteration % every == 0) {
            observer(&Checkpoint {
                iteration,
                set: &current,
                count,
                accepted,
                improvements,
                doublings: doubling_events.len(),
            });
        }
    }

    cross_check(&current, count, config.iteration_budget, config.oracle_checks)?;
    Ok(SearchTrace {
        iterations: config.iteration_budget,
        accepted,
        improvements,
        doubling_events,
        best_set: current,
        best_count: count,
        objective_history: trace_history,
    })
}

/// Draws `n` points uniformly from `[-span, span]²`, resampling any point
/// that would coincide with or be collinear with earlier ones.
pub fn random_start<R: Rng + ?Sized>(n: usize, span: i64, rng: &mut R) -> Result<PointSet, SearchError> {
    random_point_set(n, -span..=span, rng).ok_or(SearchError::StartGeneration { n, span })
}

/// As [`random_start`] with an arbitrary coordinate range. Gives up after
/// 1000 failed placements of a single point, or if `n < 3`.
pub fn random_point_set<R: Rng + ?Sized>(
    n: usize,
    range: std::ops::RangeInclusive<i64>,
    rng: &mut R,
) -> Option<PointSet> {
    const ATTEMPTS_PER_POINT: usize = 1000;
    let mut points: Vec<Point> = Vec::with_capacity(n);
    for _ in 0..n {
        let placed = (0..ATTEMPTS_PER_POINT).find_map(|_| {
            let candidate = Point::new(rng.gen_range(range.clone()), rng.gen_range(range.clone()));
            let clash = points.iter().enumerate().any(|(i, p)| {
                *p == candidate
                    || points[i + 1..].iter().any(|q| {
orientation(p, q, &candidate) == Orientation::Collinear
                    })
            });
            (!clash).then_some(candidate)
        });
        points.push(placed?);
    }
    PointSet::new(points).ok()
}
