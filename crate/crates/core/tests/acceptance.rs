//! Acceptance gate. Run with `cargo test -p rectcross --test acceptance`;
//! prints one PASS/FAIL line per criterion and exits non-zero on any failure.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rectcross::bounds::{compare_constants, construction_bound, headline_constant, RationalBound};
use rectcross::counter::{count_crossings, count_crossings_with, count_patterns};
use rectcross::geometry::{ArithmeticPath, Point, PointSet, FIXED_WIDTH_GATE};
use rectcross::io::{self, verify_records, RecordOutcome, RecordTable};
use rectcross::oracle::{oracle_count, oracle_pattern_tally, quadruple_pattern_value};
use rectcross::search::{self, random_point_set, SearchConfig};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_set(n: usize, span: i64, rng: &mut ChaCha8Rng) -> PointSet {
    random_point_set(n, -span..=span, rng).expect("random set")
}

fn choose4(n: u64) -> u64 {
    n * (n - 1) * (n - 2) * (n - 3) / 24
}

/// Points on the parabola `y = x²` are in convex and general position.
fn parabola(n: usize) -> PointSet {
    PointSet::new((0..n as i64).map(|i| Point::new(i, i * i)).collect()).unwrap()
}

/// Rounded regular polygon on a circle of radius 10⁴.
fn regular_polygon(n: usize) -> PointSet {
    let r = 10_000.0_f64;
    let pts = (0..n)
        .map(|k| {
            let t = std::f64::consts::TAU * k as f64 / n as f64;
            Point::new((r * t.cos()).round() as i64, (r * t.sin()).round() as i64)
        })
        .collect();
    PointSet::new(pts).unwrap()
}

fn criterion_1() -> Outcome {
    let set = io::parse_pointset(io::APPENDIX_TEXT).map_err(|e| e.to_string())?;
    ensure!(set.len() == 75, "fixture has {} points", set.len());
    let t = Instant::now();
    let fast = count_crossings(&set).map_err(|e| e.to_string())?;
    let sweep_time = t.elapsed();
    ensure!(fast == 450_492, "sweep counted {fast}");
    ensure!(sweep_time < Duration::from_secs(1), "sweep took {sweep_time:?}");
    let t = Instant::now();
    let slow = oracle_count(&set).map_err(|e| e.to_string())?;
    let oracle_time = t.elapsed();
    ensure!(slow == 450_492, "oracle counted {slow}");
    ensure!(oracle_time < Duration::from_secs(60), "oracle took {oracle_time:?}");
    Ok(format!("sweep {fast} in {sweep_time:?}, oracle {slow} in {oracle_time:?}"))
}

fn criterion_2() -> Outcome {
    let b = construction_bound(75, 450_492).map_err(|e| e.to_string())?;
    ensure!(b == RationalBound::new(9_363_184, 24_609_375), "bound is {b}");
    ensure!(b == headline_constant(), "headline constant differs");
    let d = |s: &str| RationalBound::from_decimal(s).unwrap();
    ensure!(d("0.379972") < b, "not above 0.379972");
    ensure!(b < d("0.380473"), "not below 0.380473");
    ensure!(d("0.380473") < d("0.380488"), "constant ordering");
    let report = compare_constants(&b, 6);
    ensure!(
        report.ordering_against("0.380473") == Some(std::cmp::Ordering::Less),
        "report disagrees"
    );
    Ok(format!("{b} = {}...", b.decimal_expansion(10)))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut r = rng(3);
    let mut instances = 0;
    for k in 0..225 {
        let n = 4 + k % 9;
        let set = random_set(n, 1000, &mut r);
        let fast = count_crossings(&set).map_err(|e| e.to_string())?;
        let slow = oracle_count(&set).map_err(|e| e.to_string())?;
        ensure!(fast == slow, "instance {k} (n={n}): sweep {fast}, oracle {slow}");
        let tally = count_patterns(&set).map_err(|e| e.to_string())?;
        let oracle_tally = oracle_pattern_tally(&set).map_err(|e| e.to_string())?;
        ensure!(tally == oracle_tally, "instance {k}: {tally:?} vs {oracle_tally:?}");
        instances += 1;
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    Ok(format!("{instances} instances, n in 4..=12, {elapsed:?}"))
}

fn criterion_4() -> Outcome {
    let mut r = rng(4);
    let mut subsets = 0;
    for k in 0..50 {
        let set = random_set(8, 500, &mut r);
        let p = set.points();
        let mut value = 0i64;
        for a in 0..8 {
            for b in a + 1..8 {
                for c in b + 1..8 {
                    for d in c + 1..8 {
                        let v = quadruple_pattern_value([&p[a], &p[b], &p[c], &p[d]])
                            .map_err(|e| e.to_string())?;
                        ensure!(v == 0 || v == 4, "subset value {v}");
                        value += v;
                        subsets += 1;
                    }
                }
            }
        }
        let convex = oracle_count(&set).map_err(|e| e.to_string())? as i64;
        ensure!(value == 4 * convex, "set {k}: weighted sum {value}, 4*convex {}", 4 * convex);
    }
    Ok(format!("{subsets} subsets over 50 sets"))
}

fn criterion_5() -> Outcome {
    let mut r = rng(5);
    let mut checked = 0;
    for k in 0..100 {
        let n = 4 + k % 27;
        let set = random_set(n, 10_000, &mut r);
        let t = count_patterns(&set).map_err(|e| e.to_string())?;
        let n = n as u64;
        ensure!(t.a + t.b == n * (n - 1) * (n - 2) * (n - 3) / 2, "A + B on set {k}");
        ensure!((3 * t.a as i128 - t.b as i128) % 4 == 0, "4 does not divide 3A - B on set {k}");
        checked += 1;
    }
    for n in 4..=30 {
        for set in [parabola(n), regular_polygon(n)] {
            let t = count_patterns(&set).map_err(|e| e.to_string())?;
            ensure!(t.a + t.b == t.total && (3 * t.a as i128 - t.b as i128) % 4 == 0, "tally n={n}");
            let c = count_crossings(&set).map_err(|e| e.to_string())?;
            ensure!(c == choose4(n as u64), "convex {n}-gon counted {c}");
            checked += 1;
        }
    }
    Ok(format!("{checked} sets, convex n-gons 4..=30"))
}

fn criterion_6() -> Outcome {
    let mut r = rng(6);
    for k in 0..50 {
        let n = 4 + k % 20;
        let set = random_set(n, 1_000_000, &mut r);
        let base = count_crossings(&set).map_err(|e| e.to_string())?;
        let (dx, dy) = (BigInt::from(-123_456_789i64), BigInt::from(987_654_321i64));
        let moved = PointSet::new(set.points().iter().map(|p| p.translated(&dx, &dy)).collect()).unwrap();
        let rotated = PointSet::new(
            set.points()
                .iter()
                .map(|p| Point { x: -p.y.clone(), y: p.x.clone() })
                .collect(),
        )
        .unwrap();
        let mut shuffled = set.points().to_vec();
        shuffled.shuffle(&mut r);
        let shuffled = PointSet::new(shuffled).unwrap();
        for (name, variant) in [
            ("translation", moved),
            ("doubling", set.doubled()),
            ("rotation", rotated),
            ("reordering", shuffled),
        ] {
            let c = count_crossings(&variant).map_err(|e| e.to_string())?;
            ensure!(c == base, "set {k}: {name} changed {base} to {c}");
        }
    }
    Ok("50 sets x 4 transforms".into())
}

fn criterion_7() -> Outcome {
    let start = regular_polygon(10);
    let initial = count_crossings(&start).map_err(|e| e.to_string())?;
    ensure!(initial == 210, "convex 10-gon counted {initial}");
    // Spread of the polygon is 2·10⁴.
    let mean = 20_000.0 / 10.0;

    let config = |seed| SearchConfig {
        iteration_budget: 100_000,
        ..SearchConfig::new(seed, mean, start.len())
    };
    let short = SearchConfig { iteration_budget: 5_000, ..config(99) };
    let a = search::run(&short, &start).map_err(|e| e.to_string())?;
    let b = search::run(&short, &start).map_err(|e| e.to_string())?;
    ensure!(a == b, "same seed produced different traces");

    let mut finals = Vec::new();
    for seed in 1..=5 {
        let trace = search::run(&config(seed), &start).map_err(|e| e.to_string())?;
        ensure!(
            trace.objective_history.windows(2).all(|w| w[1].1 <= w[0].1),
            "seed {seed}: objective increased"
        );
        ensure!(
            trace.best_count == count_crossings(&trace.best_set).unwrap(),
            "seed {seed}: best_count inconsistent"
        );
        ensure!(trace.best_count < 210, "seed {seed}: no improvement");
        finals.push(trace.best_count);
    }
    let best = *finals.iter().min().unwrap();
    ensure!(best <= 100, "best of 5 is {best}");
    Ok(format!("final counts {finals:?}, best {best}"))
}

fn criterion_8() -> Outcome {
    let mut r = rng(8);
    let lo = FIXED_WIDTH_GATE / 2;
    let hi = FIXED_WIDTH_GATE;
    for k in 0..100 {
        let n = 5 + k % 8;
        let set = random_point_set(n, lo..=hi, &mut r).ok_or("could not sample")?;
        ensure!(set.arithmetic_path() == ArithmeticPath::FixedWidth128, "gate");
        let fixed = count_crossings_with(&set, ArithmeticPath::FixedWidth128).map_err(|e| e.to_string())?;
        let big = count_crossings_with(&set, ArithmeticPath::ArbitraryPrecision).map_err(|e| e.to_string())?;
        ensure!(fixed == big, "set {k}: fixed {fixed}, arbitrary {big}");
    }
    Ok("100 sets with coordinates in [2^61, 2^62]".into())
}

fn criterion_9() -> Outcome {
    let table = RecordTable::published();
    for (n, e) in table.entries() {
        ensure!(e.new_count < e.previous_count, "row {n} does not improve");
    }
    let set = io::appendix_set();
    let count = count_crossings(&set).map_err(|e| e.to_string())?;
    let report = verify_records(&BTreeMap::from([(set.len(), count)]), &table);
    ensure!(report.outcome(75) == Some(RecordOutcome::Match), "n=75 not matched: {report}");
    Ok(format!("{} rows, n=75 matches", table.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("fixture regression", criterion_1),
        ("headline constant", criterion_2),
        ("oracle equivalence", criterion_3),
        ("pattern-weight identity", criterion_4),
        ("structural identities", criterion_5),
        ("invariance", criterion_6),
        ("heuristic behaviour", criterion_7),
        ("arithmetic-path agreement", criterion_8),
        ("record-table integrity", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{:?}]", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {why} [{:?}]", i + 1, t.elapsed());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
