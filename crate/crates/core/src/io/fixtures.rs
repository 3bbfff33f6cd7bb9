use crate::geometry::PointSet;
use crate::io::format::parse_pointset;

/// The published 75-point set, in canonical text form.
pub const APPENDIX_TEXT: &str = include_str!("../../data/appendix75.txt");

/// Its crossing count.
pub const APPENDIX_COUNT: u64 = 450_492;

pub fn appendix_set() -> PointSet {
    parse_pointset(APPENDIX_TEXT).expect("vendored fixture parses")
}
