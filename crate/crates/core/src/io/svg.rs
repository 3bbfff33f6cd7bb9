use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::geometry::PointSet;

/// Side of the square view box, in user units.
pub const VIEW_SIZE: i64 = 10_000;
const MARGIN: i64 = 250;

/// Straight-line drawing of the complete graph on `set`.
///
/// Coordinates are mapped into the view box with exact integer arithmetic
/// (uniform scale, y axis pointing up), so the output depends only on the
/// input.
pub fn render_svg(set: &PointSet) -> String {
    let pts = set.points();
    let min_x = pts.iter().map(|p| &p.x).min().cloned().unwrap_or_default();
    let max_x = pts.iter().map(|p| &p.x).max().cloned().unwrap_or_default();
    let min_y = pts.iter().map(|p| &p.y).min().cloned().unwrap_or_default();
    let max_y = pts.iter().map(|p| &p.y).max().cloned().unwrap_or_default();
    let mut span = (&max_x - &min_x).max(&max_y - &min_y);
    if span.is_zero() {
        span = BigInt::from(1);
    }
    let inner = BigInt::from(VIEW_SIZE - 2 * MARGIN);
    let scale = |offset: BigInt| -> i64 { (offset * &inner / &span).to_i64().unwrap_or(0) };
    let screen: Vec<(i64, i64)> = pts
        .iter()
        .map(|p| {
            let sx = MARGIN + scale(&p.x - &min_x);
            let sy = VIEW_SIZE - MARGIN - scale(&p.y - &min_y);
            (sx, sy)
        })
        .collect();

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="1000" height="1000" viewBox="0 0 {VIEW_SIZE} {VIEW_SIZE}">"#
    );
    let _ = writeln!(out, r#"<rect width="{VIEW_SIZE}" height="{VIEW_SIZE}" fill="white"/>"#);
    let _ = writeln!(out, r#"<g stroke="black" stroke-width="4" stroke-opacity="0.35">"#);
    for (i, &(x1, y1)) in screen.iter().enumerate() {
        for &(x2, y2) in &screen[i + 1..] {
            let _ = writeln!(out, r#"<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
        }
    }
    out.push_str("</g>\n<g fill=\"crimson\">\n");
    for &(x, y) in &screen {
        let _ = writeln!(out, r#"<circle cx="{x}" cy="{y}" r="40"/>"#);
    }
    out.push_str("</g>\n</svg>\n");
    out
}
