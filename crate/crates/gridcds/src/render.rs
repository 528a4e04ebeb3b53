//! Presentational renderings of cell sets.
//!
//! ASCII output is the `#`/`.` grid body; SVG draws one circle per grid
//! cell, filled for members, over light grid lines.

use crate::set::VertexSet;
use std::fmt::Write;

pub fn to_ascii(set: &VertexSet) -> String {
    set.to_ascii_body()
}

const CELL: usize = 24;
const RADIUS: usize = 7;

pub fn to_svg(set: &VertexSet) -> String {
    let dims = set.dims();
    let width = dims.m * CELL + CELL;
    let height = dims.n * CELL + CELL;
    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(svg, r#"<rect width="{width}" height="{height}" fill="white"/>"#).unwrap();
    for i in 1..=dims.n {
        let y = i * CELL;
        writeln!(
            svg,
            r##"<line x1="{}" y1="{y}" x2="{}" y2="{y}" stroke="#ccc"/>"##,
            CELL,
            dims.m * CELL
        )
        .unwrap();
    }
    for j in 1..=dims.m {
        let x = j * CELL;
        writeln!(
            svg,
            r##"<line x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="#ccc"/>"##,
            CELL,
            dims.n * CELL
        )
        .unwrap();
    }
    for v in dims.cells() {
        let (cx, cy) = (v.j * CELL, v.i * CELL);
        let fill = if set.contains(v) { "black" } else { "white" };
        writeln!(
            svg,
            r#"<circle cx="{cx}" cy="{cy}" r="{RADIUS}" fill="{fill}" stroke="black"/>"#
        )
        .unwrap();
    }
    svg.push_str("</svg>\n");
    svg
}
