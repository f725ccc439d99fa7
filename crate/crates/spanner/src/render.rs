//! Deterministic SVG rendering of geometric graphs.
//!
//! Output bytes are a pure function of the input: fixed float formatting,
//! edges in sorted order, no timestamps or random ids. The y-axis is
//! flipped so larger y draws higher, matching the usual mathematical
//! orientation.

use std::fmt::Write as _;

use crate::graph::GeometricGraph;

/// Overlay data: edges to emphasize (gadget bases) and point labels (p, q).
#[derive(Debug, Clone, Default)]
pub struct RenderStyle {
    pub highlight_edges: Vec<(usize, usize)>,
    pub labels: Vec<(usize, String)>,
}

const WIDTH: f64 = 900.0;
const MARGIN: f64 = 40.0;

fn fmt(v: f64) -> String {
    format!("{v:.3}")
}

pub fn render_svg(g: &GeometricGraph, style: &RenderStyle) -> String {
    let pts: Vec<(f64, f64)> = g
        .points()
        .iter()
        .map(|p| (p.x.to_f64(), p.y.to_f64()))
        .collect();
    let (mut min_x, mut max_x, mut min_y, mut max_y) = (0.0f64, 1.0f64, 0.0f64, 1.0f64);
    if !pts.is_empty() {
        min_x = pts.iter().map(|p| p.0).fold(f64::INFINITY, f64::min);
        max_x = pts.iter().map(|p| p.0).fold(f64::NEG_INFINITY, f64::max);
        min_y = pts.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
        max_y = pts.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    }
    let span_x = (max_x - min_x).max(1e-9);
    let span_y = (max_y - min_y).max(1e-9);
    let scale = (WIDTH - 2.0 * MARGIN) / span_x;
    let height = span_y * scale + 2.0 * MARGIN;
    let tx = |x: f64| MARGIN + (x - min_x) * scale;
    // Flip y: larger y is drawn toward the top of the image.
    let ty = |y: f64| MARGIN + (max_y - y) * scale;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        fmt(WIDTH),
        fmt(height),
        fmt(WIDTH),
        fmt(height)
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);

    let highlighted = |i: usize, j: usize| {
        style
            .highlight_edges
            .iter()
            .any(|&(a, b)| (a, b) == (i, j) || (b, a) == (i, j))
    };
    for (i, j) in g.edges() {
        let (stroke, width) = if highlighted(i, j) {
            ("#d62728", "3")
        } else {
            ("#333333", "1.5")
        };
        let _ = writeln!(
            out,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{stroke}" stroke-width="{width}"/>"#,
            fmt(tx(pts[i].0)),
            fmt(ty(pts[i].1)),
            fmt(tx(pts[j].0)),
            fmt(ty(pts[j].1))
        );
    }
    for &(x, y) in &pts {
        let _ = writeln!(
            out,
            r##"<circle cx="{}" cy="{}" r="3" fill="#1f77b4"/>"##,
            fmt(tx(x)),
            fmt(ty(y))
        );
    }
    for (idx, label) in &style.labels {
        if let Some(&(x, y)) = pts.get(*idx) {
            let _ = writeln!(
                out,
                r##"<text x="{}" y="{}" font-size="14" font-family="monospace" fill="#111111">{}</text>"##,
                fmt(tx(x) + 6.0),
                fmt(ty(y) - 6.0),
                label
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
