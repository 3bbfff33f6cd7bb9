//! Exact evaluation of the recursive-construction coefficient.
//!
//! An `m`-point set with `cr` crossings, `m` odd, yields drawings of `K_n`
//! with at most
//!
//! ```text
//! (24 cr + 3m³ − 7m² + (30/7) m) / m⁴ · C(n, 4) + Θ(n³)
//! ```
//!
//! crossings. [`construction_bound`] returns the coefficient of `C(n, 4)` as
//! a reduced fraction; the `Θ(n³)` term is not modelled.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("the construction needs an odd number of points, got m = {0}")]
    EvenM(u64),
    #[error("the construction needs m >= 3, got m = {0}")]
    MTooSmall(u64),
    #[error("crossing count {cr} is outside 0..=C({m}, 4) = {max}")]
    CrossingsOutOfRange { m: u64, cr: u64, max: u64 },
    #[error("malformed decimal constant {0:?}")]
    MalformedDecimal(String),
}

/// A reduced fraction with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalBound {
    numerator: BigInt,
    denominator: BigInt,
}

impl RationalBound {
    /// Reduces `numerator / denominator`. Panics on a zero denominator.
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Self {
        let (mut num, mut den) = (numerator.into(), denominator.into());
        assert!(!den.is_zero(), "zero denominator");
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        RationalBound {
            numerator: num / &g,
            denominator: den / &g,
        }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    /// Digits after the decimal point are truncated, not rounded.
    pub fn decimal_expansion(&self, digits: usize) -> String {
        let negative = self.numerator.is_negative();
        let num = self.numerator.abs();
        let (int_part, mut rem) = num.div_rem(&self.denominator);
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        out.push_str(&int_part.to_string());
        if digits > 0 {
            out.push('.');
            let ten = BigInt::from(10);
            for _ in 0..digits {
                rem *= &ten;
                let (d, r) = rem.div_rem(&self.denominator);
                out.push_str(&d.to_string());
                rem = r;
            }
        }
        out
    }

    /// Parses a plain decimal literal such as `0.380473` into its exact value.
    pub fn from_decimal(text: &str) -> Result<Self, BoundError> {
        let bad = || BoundError::MalformedDecimal(text.to_string());
        let (sign, body) = match text.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, text),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{int_part}{frac_part}");
        let num: BigInt = if digits.is_empty() {
            BigInt::zero()
        } else {
            digits.parse().map_err(|_| bad())?
        };
        let den = BigInt::from(10).pow(frac_part.len() as u32);
        Ok(RationalBound::new(num * sign, den))
    }

    /// Exact comparison by cross-multiplication.
    pub fn cmp_exact(&self, other: &RationalBound) -> Ordering {
        (&self.numerator * &other.denominator).cmp(&(&other.numerator * &self.denominator))
    }
}

impl PartialOrd for RationalBound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RationalBound {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cmp_exact(other)
    }
}

impl fmt::Display for RationalBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

/// `C(m, 4)`.
pub fn max_crossings(m: u64) -> u64 {
    if m < 4 {
        return 0;
    }
    m * (m - 1) * (m - 2) * (m - 3) / 24
}

/// `(168 cr + 21m³ − 49m² + 30m) / (7m⁴)`, reduced.
pub fn construction_bound(m: u64, cr: u64) -> Result<RationalBound, BoundError> {
    if m < 3 {
        return Err(BoundError::MTooSmall(m));
    }
    if m.is_multiple_of(2) {
        return Err(BoundError::EvenM(m));
    }
    let max = max_crossings(m);
    if cr > max {
        return Err(BoundError::CrossingsOutOfRange { m, cr, max });
    }
    let mm = BigInt::from(m);
    let m2 = &mm * &mm;
    let m3 = &m2 * &mm;
    let num = BigInt::from(168) * cr + BigInt::from(21) * &m3 - BigInt::from(49) * &m2 + BigInt::from(30) * &mm;
    let den = BigInt::from(7) * &m3 * &mm;
    Ok(RationalBound::new(num, den))
}

/// The published decimal constants a bound is measured against.
pub const REFERENCE_CONSTANTS: [(&str, &str); 4] = [
    ("lower bound", "0.379972"),
    ("conjectured lower bound", "0.380029"),
    ("improved upper bound", "0.380473"),
    ("previous upper bound", "0.380488"),
];

/// The coefficient obtained from the 75-point set with 450492 crossings.
pub fn headline_constant() -> RationalBound {
    RationalBound::new(9_363_184, 24_609_375)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantComparison {
    pub name: &'static str,
    pub decimal: &'static str,
    /// How the bound compares to the constant.
    pub ordering: Ordering,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    pub bound: RationalBound,
    pub decimal: String,
    pub comparisons: Vec<ConstantComparison>,
}

impl ComparisonReport {
    pub fn ordering_against(&self, decimal: &str) -> Option<Ordering> {
        self.comparisons
            .iter()
            .find(|c| c.decimal == decimal)
            .map(|c| c.ordering)
    }
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "bound: {} ~ {}", self.bound, self.decimal)?;
        for c in &self.comparisons {
            let rel = match c.ordering {
                Ordering::Less => "<",
                Ordering::Equal => "=",
                Ordering::Greater => ">",
            };
            writeln!(f, "  bound {rel} {} ({})", c.decimal, c.name)?;
        }
        Ok(())
    }
}

pub fn compare_constants(bound: &RationalBound, digits: usize) -> ComparisonReport {
    let comparisons = REFERENCE_CONSTANTS
        .iter()
        .map(|&(name, decimal)| {
            let constant = RationalBound::from_decimal(decimal).expect("reference constants are valid");
            ConstantComparison {
                name,
                decimal,
                ordering: bound.cmp_exact(&constant),
            }
        })
        .collect();
    ComparisonReport {
        bound: bound.clone(),
        decimal: bound.decimal_expansion(digits),
        comparisons,
    }
}
