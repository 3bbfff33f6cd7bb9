//! Text formats, vendored data and rendering.

pub mod fixtures;
pub mod format;
pub mod records;
pub mod svg;

pub use fixtures::{appendix_set, APPENDIX_COUNT, APPENDIX_TEXT};
pub use format::{format_checkpoint, parse_points, parse_pointset, serialize_pointset, ParseError};
pub use records::{verify_records, RecordEntry, RecordOutcome, RecordReport, RecordTable};
pub use svg::render_svg;
