//! Exact crossing numbers of straight-line drawings of complete graphs.
//!
//! Two segments of a straight-line drawing of `K_n` cross exactly when their
//! four endpoints are in convex position, so the crossing count of a point
//! set is its number of convex 4-subsets. This crate provides
//!
//! * exact integer predicates and general-position checks ([`geometry`]),
//! * an `O(n² log n)` counter based on angular sweeps ([`counter`]),
//! * an independent `O(n⁴)` brute-force reference ([`oracle`]),
//! * a seeded local search for low-crossing sets ([`search`]),
//! * rational evaluation of the asymptotic coefficient a set implies
//!   ([`bounds`]),
//! * the point-set text format, vendored data and SVG output ([`io`]).
//!
//! ```
//! use rectcross::{count_crossings, io, oracle_count};
//!
//! let set = io::appendix_set();
//! assert_eq!(set.len(), 75);
//! assert_eq!(count_crossings(&set).unwrap(), 450_492);
//! # assert_eq!(oracle_count(&set).unwrap(), 450_492);
//! ```
//!
//! No floating point is used by any geometric computation. When all
//! coordinates satisfy `|c| <= 2^62` determinants are evaluated in `i128`;
//! otherwise in arbitrary precision.

pub mod bounds;
pub mod counter;
pub mod geometry;
pub mod io;
pub mod oracle;
pub mod search;

pub use bounds::{compare_constants, construction_bound, RationalBound};
pub use counter::{
    angular_orders, apex_halfplane_counts, count_crossings, count_patterns, CountError, PatternTally,
};
pub use geometry::{
    double_coordinates, orientation, select_arithmetic_path, validate_general_position,
    ArithmeticPath, Orientation, Point, PointSet, Violation,
};
pub use oracle::{classify_pattern, is_convex_quadruple, oracle_count, oracle_pattern_tally};
pub use search::{run, SearchConfig, SearchTrace};

// The guide's code blocks are compiled and run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/predicates.md")]
    mod predicates {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/oracle.md")]
    mod oracle {}
    #[doc = include_str!("../../../book/src/search.md")]
    mod search {}
    #[doc = include_str!("../../../book/src/bounds.md")]
    mod bounds {}
    #[doc = include_str!("../../../book/src/file-format.md")]
    mod file_format {}
}
