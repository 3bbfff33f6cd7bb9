//! Exact integer points, the orientation predicate and general-position
//! validation.
//!
//! Every predicate in the crate bottoms out in [`orientation`]. Points carry
//! arbitrary-precision coordinates; when all coordinates of a set fit within
//! [`FIXED_WIDTH_GATE`] the hot paths switch to [`FastPoint`], whose
//! determinant is evaluated in `i128`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

/// Largest coordinate magnitude (inclusive) for which the `i128` determinant
/// is used.
pub const FIXED_WIDTH_GATE: i64 = 1 << 62;

/// Sign of the orientation determinant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Clockwise = -1,
    Collinear = 0,
    CounterClockwise = 1,
}

impl Orientation {
    fn from_sign(sign: std::cmp::Ordering) -> Self {
        match sign {
            std::cmp::Ordering::Less => Orientation::Clockwise,
            std::cmp::Ordering::Equal => Orientation::Collinear,
            std::cmp::Ordering::Greater => Orientation::CounterClockwise,
        }
    }

    /// `-1`, `0` or `+1`.
    pub fn as_i8(self) -> i8 {
        self as i8
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
            Orientation::CounterClockwise => Orientation::Clockwise,
        }
    }
}

/// A lattice point with unbounded integer coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: BigInt,
    pub y: BigInt,
}

impl Point {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        Point {
            x: x.into(),
            y: y.into(),
        }
    }

    pub fn translated(&self, dx: &BigInt, dy: &BigInt) -> Self {
        Point {
            x: &self.x + dx,
            y: &self.y + dy,
        }
    }

    /// Narrows to a [`FastPoint`] if both coordinates are within the gate.
    pub fn to_fast(&self) -> Option<FastPoint> {
        let x = self.x.to_i64()?;
        let y = self.y.to_i64()?;
        (within_gate(x) && within_gate(y)).then_some(FastPoint { x, y })
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

fn within_gate(c: i64) -> bool {
    c.unsigned_abs() <= FIXED_WIDTH_GATE as u64
}

/// A point whose coordinates are known to satisfy `|c| <= 2^62`.
///
/// Coordinate differences then fit in 63 bits and the determinant in
/// `i128`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FastPoint {
    pub x: i64,
    pub y: i64,
}

/// Returns the sign of `(q - p) x (r - p)`.
///
/// `CounterClockwise` means `r` lies to the left of the directed line `p -> q`.
pub fn orientation(p: &Point, q: &Point, r: &Point) -> Orientation {
    let det = (&q.x - &p.x) * (&r.y - &p.y) - (&q.y - &p.y) * (&r.x - &p.x);
    Orientation::from_sign(det.sign().cmp(&num_bigint::Sign::NoSign))
}

/// The `i128` evaluation of [`orientation`].
///
/// Panics if the caller hands in coordinates outside the gate and the
/// determinant overflows.
pub fn orientation_fixed(p: FastPoint, q: FastPoint, r: FastPoint) -> Orientation {
    let ax = q.x as i128 - p.x as i128;
    let ay = q.y as i128 - p.y as i128;
    let bx = r.x as i128 - p.x as i128;
    let by = r.y as i128 - p.y as i128;
    let lhs = ax.checked_mul(by).expect("coordinate outside fixed-width gate");
    let rhs = ay.checked_mul(bx).expect("coordinate outside fixed-width gate");
    Orientation::from_sign(lhs.cmp(&rhs))
}

/// The minimal interface the sweep counter and the oracle need from a point
/// representation.
pub trait ExactPoint: Clone + Eq + Send + Sync {
    fn orient(p: &Self, q: &Self, r: &Self) -> Orientation;

    /// True if `self` lies in the upper half-plane around `apex`: strictly
    /// above the horizontal line, or on the ray pointing in positive x.
    fn is_upper_around(&self, apex: &Self) -> bool;
}

impl ExactPoint for Point {
    fn orient(p: &Self, q: &Self, r: &Self) -> Orientation {
        orientation(p, q, r)
    }

    fn is_upper_around(&self, apex: &Self) -> bool {
        self.y > apex.y || (self.y == apex.y && self.x > apex.x)
    }
}

impl ExactPoint for FastPoint {
    fn orient(p: &Self, q: &Self, r: &Self) -> Orientation {
        orientation_fixed(*p, *q, *r)
    }

    fn is_upper_around(&self, apex: &Self) -> bool {
        self.y > apex.y || (self.y == apex.y && self.x > apex.x)
    }
}

/// Which determinant implementation a computation runs on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArithmeticPath {
    FixedWidth128,
    ArbitraryPrecision,
}

impl fmt::Display for ArithmeticPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArithmeticPath::FixedWidth128 => "fixed-width-128",
            ArithmeticPath::ArbitraryPrecision => "arbitrary-precision",
        })
    }
}

/// The first general-position failure found in a sequence of points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("points {0} and {1} coincide")]
    Duplicate(usize, usize),
    #[error("points {0}, {1} and {2} are collinear")]
    Collinear(usize, usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PointSetError {
    #[error("a point set needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("not in general position: {0}")]
    GeneralPosition(#[from] Violation),
}

/// Scans pairs and triples in lexicographic index order and reports the
/// first duplicate pair or collinear triple.
///
/// For each `(i, j)` the duplicate check precedes the triples `(i, j, k)`.
pub fn validate_general_position(points: &[Point]) -> Result<(), Violation> {
    match fast_points(points) {
        Some(fast) => scan_triples(&fast),
        None => scan_triples(points),
    }
}

fn scan_triples<P: ExactPoint>(points: &[P]) -> Result<(), Violation> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                return Err(Violation::Duplicate(i, j));
            }
            for k in j + 1..n {
                if P::orient(&points[i], &points[j], &points[k]) == Orientation::Collinear {
                    return Err(Violation::Collinear(i, j, k));
                }
            }
        }
    }
    Ok(())
}

/// Checks only the pairs and triples that involve `candidate` placed at
/// `index`, assuming the remaining points are already in general position.
///
/// Reported indices refer to the set after the replacement and are sorted.
pub fn validate_replacement(
    points: &[Point],
    index: usize,
    candidate: &Point,
) -> Result<(), Violation> {
    let n = points.len();
    let others: Vec<usize> = (0..n).filter(|&i| i != index).collect();
    let sorted = |mut v: [usize; 3]| {
        v.sort_unstable();
        v
    };
    for (a, &i) in others.iter().enumerate() {
        if &points[i] == candidate {
            return Err(Violation::Duplicate(i.min(index), i.max(index)));
        }
        for &j in &others[a + 1..] {
            if orientation(&points[i], &points[j], candidate) == Orientation::Collinear {
                let [u, v, w] = sorted([i, j, index]);
                return Err(Violation::Collinear(u, v, w));
            }
        }
    }
    Ok(())
}

/// Narrows every point, or returns `None` if any coordinate is past the gate.
pub fn fast_points(points: &[Point]) -> Option<Vec<FastPoint>> {
    points.iter().map(Point::to_fast).collect()
}

/// An ordered set of distinct points with no three collinear.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    pub fn new(points: Vec<Point>) -> Result<Self, PointSetError> {
        if points.len() < 3 {
            return Err(PointSetError::TooFewPoints(points.len()));
        }
        validate_general_position(&points)?;
        Ok(PointSet { points })
    }

    /// Builds a set from small integer pairs. Mostly useful in tests and
    /// documentation.
    pub fn from_i64(coords: &[(i64, i64)]) -> Result<Self, PointSetError> {
        Self::new(coords.iter().map(|&(x, y)| Point::new(x, y)).collect())
    }

    pub(crate) fn from_valid(points: Vec<Point>) -> Self {
        debug_assert!(points.len() >= 3);
        PointSet { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    /// Largest `|x|` or `|y|` over the set.
    pub fn max_abs_coordinate(&self) -> BigInt {
        self.points
            .iter()
            .flat_map(|p| [p.x.abs(), p.y.abs()])
            .max()
            .unwrap_or_default()
    }

    /// Multiplies every coordinate by two. Orientation signs, and hence
    /// every count, are unchanged.
    pub fn doubled(&self) -> Self {
        PointSet {
            points: self
                .points
                .iter()
                .map(|p| Point {
                    x: &p.x << 1u32,
                    y: &p.y << 1u32,
                })
                .collect(),
        }
    }

    /// Returns the set with point `index` replaced, if the result stays in
    /// general position.
    pub fn with_replacement(&self, index: usize, candidate: Point) -> Result<Self, Violation> {
        validate_replacement(&self.points, index, &candidate)?;
        let mut points = self.points.clone();
        points[index] = candidate;
        Ok(PointSet { points })
    }

    pub fn arithmetic_path(&self) -> ArithmeticPath {
        select_arithmetic_path(self)
    }

    pub fn to_fast(&self) -> Option<Vec<FastPoint>> {
        fast_points(&self.points)
    }
}

/// `FixedWidth128` iff every coordinate satisfies `|c| <= 2^62`.
pub fn select_arithmetic_path(set: &PointSet) -> ArithmeticPath {
    if set.points.iter().all(|p| p.to_fast().is_some()) {
        ArithmeticPath::FixedWidth128
    } else {
        ArithmeticPath::ArbitraryPrecision
    }
}

/// Free-function form of [`PointSet::doubled`].
pub fn double_coordinates(set: &PointSet) -> PointSet {
    set.doubled()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(
            orientation(&pt(0, 0), &pt(1, 0), &pt(0, 1)),
            Orientation::CounterClockwise
        );
        assert_eq!(orientation(&pt(0, 0), &pt(2, 2), &pt(5, 5)), Orientation::Collinear);
        assert_eq!(orientation(&pt(0, 0), &pt(0, 1), &pt(1, 0)), Orientation::Clockwise);
        assert_eq!(Orientation::Clockwise.as_i8(), -1);
    }

    #[test]
    fn validation_examples() {
        let ok = [pt(0, 0), pt(1, 0), pt(0, 1), pt(3, 4)];
        assert_eq!(validate_general_position(&ok), Ok(()));
        let bad = [pt(0, 0), pt(1, 1), pt(2, 2), pt(0, 5)];
        assert_eq!(validate_general_position(&bad), Err(Violation::Collinear(0, 1, 2)));
        let dup = [pt(0, 0), pt(0, 0), pt(1, 2), pt(5, 5)];
        assert_eq!(validate_general_position(&dup), Err(Violation::Duplicate(0, 1)));
    }

    #[test]
    fn replacement_check_reports_sorted_indices() {
        let set = PointSet::from_i64(&[(0, 0), (4, 1), (1, 3), (7, 7)]).unwrap();
        assert_eq!(
            set.with_replacement(3, pt(0, 0)).unwrap_err(),
            Violation::Duplicate(0, 3)
        );
        assert_eq!(
            set.with_replacement(1, pt(2, 6)).unwrap_err(),
            Violation::Collinear(0, 1, 2)
        );
        assert!(set.with_replacement(1, pt(5, 0)).is_ok());
    }

    #[test]
    fn too_few_points() {
        assert_eq!(
            PointSet::from_i64(&[(0, 0), (1, 0)]).unwrap_err(),
            PointSetError::TooFewPoints(2)
        );
    }

    #[test]
    fn gate_is_inclusive() {
        let gate = FIXED_WIDTH_GATE;
        let at = PointSet::from_i64(&[(0, 0), (gate, 1), (1, gate)]).unwrap();
        assert_eq!(select_arithmetic_path(&at), ArithmeticPath::FixedWidth128);
        let neg = PointSet::from_i64(&[(0, 0), (-gate, 1), (1, -gate)]).unwrap();
        assert_eq!(select_arithmetic_path(&neg), ArithmeticPath::FixedWidth128);
        let past = PointSet::new(vec![pt(0, 0), Point::new(gate as i128 + 1, 1), pt(1, 2)]).unwrap();
        assert_eq!(select_arithmetic_path(&past), ArithmeticPath::ArbitraryPrecision);
        let small = PointSet::from_i64(&[(0, 0), (10_000_000_000, 3), (-7, 10_000_000_000)]).unwrap();
        assert_eq!(small.arithmetic_path(), ArithmeticPath::FixedWidth128);
    }

    #[test]
    fn doubling_examples() {
        let set = PointSet::from_i64(&[(1, 2), (3, 4), (5, 1)]).unwrap();
        let expected = PointSet::from_i64(&[(2, 4), (6, 8), (10, 2)]).unwrap();
        assert_eq!(set.doubled(), expected);

        let mut s = set.clone();
        for _ in 0..62 {
            s = double_coordinates(&s);
        }
        assert_eq!(s.arithmetic_path(), ArithmeticPath::ArbitraryPrecision);
        assert_eq!(s.max_abs_coordinate(), BigInt::from(5) << 62u32);
    }

    #[test]
    fn extreme_fixed_width_determinant_does_not_overflow() {
        let g = FIXED_WIDTH_GATE;
        let corners = [(-g, -g), (g, -g), (g, g), (-g, g)];
        for &a in &corners {
            for &b in &corners {
                for &c in &corners {
                    let [p, q, r] = [a, b, c].map(|(x, y)| FastPoint { x, y });
                    let slow = orientation(
                        &pt(p.x, p.y),
                        &pt(q.x, q.y),
                        &pt(r.x, r.y),
                    );
                    assert_eq!(orientation_fixed(p, q, r), slow);
                }
            }
        }
    }

    fn gate_coord() -> impl Strategy<Value = i64> {
        -FIXED_WIDTH_GATE..=FIXED_WIDTH_GATE
    }

    proptest! {
        #[test]
        fn antisymmetric(p in (any::<i32>(), any::<i32>()), q in (any::<i32>(), any::<i32>()), r in (any::<i32>(), any::<i32>())) {
            let (p, q, r) = (pt(p.0.into(), p.1.into()), pt(q.0.into(), q.1.into()), pt(r.0.into(), r.1.into()));
            prop_assert_eq!(orientation(&p, &q, &r), orientation(&p, &r, &q).reversed());
        }

        #[test]
        fn translation_and_doubling_invariant(
            p in (any::<i32>(), any::<i32>()),
            q in (any::<i32>(), any::<i32>()),
            r in (any::<i32>(), any::<i32>()),
            d in (any::<i64>(), any::<i64>()),
        ) {
            let (p, q, r) = (pt(p.0.into(), p.1.into()), pt(q.0.into(), q.1.into()), pt(r.0.into(), r.1.into()));
            let (dx, dy) = (BigInt::from(d.0), BigInt::from(d.1));
            let base = orientation(&p, &q, &r);
            prop_assert_eq!(orientation(&p.translated(&dx, &dy), &q.translated(&dx, &dy), &r.translated(&dx, &dy)), base);
            let dbl = |a: &Point| Point { x: &a.x * 2, y: &a.y * 2 };
            prop_assert_eq!(orientation(&dbl(&p), &dbl(&q), &dbl(&r)), base);
        }

        #[test]
        fn fixed_width_matches_bigint(
            a in (gate_coord(), gate_coord()),
            b in (gate_coord(), gate_coord()),
            c in (gate_coord(), gate_coord()),
        ) {
            let [p, q, r] = [a, b, c].map(|(x, y)| FastPoint { x, y });
            prop_assert_eq!(
                orientation_fixed(p, q, r),
                orientation(&pt(a.0, a.1), &pt(b.0, b.1), &pt(c.0, c.1))
            );
        }
    }
}
