//! SVG rendering of an arrangement: all points, spanned lines clipped to a
//! bounding box, ordinary points highlighted.
//!
//! Infinite points are removed by euclideanizing first, so everything has
//! affine coordinates. Layout only uses floating point for presentation;
//! the analysis stays exact. Fixed-precision formatting keeps the output
//! byte-deterministic for a given input.

use triline::{Configuration, ProjLine, ProjPoint};

const SIZE: f64 = 600.0;
const MARGIN: f64 = 40.0;

fn affine(p: &ProjPoint) -> (f64, f64) {
    let x: f64 = p.x().to_string().parse().expect("decimal");
    let y: f64 = p.y().to_string().parse().expect("decimal");
    let z: f64 = p.z().to_string().parse().expect("decimal");
    (x / z, y / z)
}

/// Clip `ax + by + c = 0` to the axis-aligned box, returning the two
/// extreme intersection points, if the line crosses the box.
fn clip(l: &ProjLine, x0: f64, y0: f64, x1: f64, y1: f64) -> Option<((f64, f64), (f64, f64))> {
    let a: f64 = l.a().to_string().parse().expect("decimal");
    let b: f64 = l.b().to_string().parse().expect("decimal");
    let c: f64 = l.c().to_string().parse().expect("decimal");
    let mut hits: Vec<(f64, f64)> = Vec::new();
    if b != 0.0 {
        for x in [x0, x1] {
            let y = -(a * x + c) / b;
            if y >= y0 - 1e-9 && y <= y1 + 1e-9 {
                hits.push((x, y));
            }
        }
    }
    if a != 0.0 {
        for y in [y0, y1] {
            let x = -(b * y + c) / a;
            if x >= x0 - 1e-9 && x <= x1 + 1e-9 {
                hits.push((x, y));
            }
        }
    }
    hits.sort_by(|p, q| p.partial_cmp(q).expect("finite"));
    hits.dedup_by(|p, q| (p.0 - q.0).abs() < 1e-9 && (p.1 - q.1).abs() < 1e-9);
    if hits.len() < 2 {
        None
    } else {
        Some((hits[0], hits[hits.len() - 1]))
    }
}

pub fn render(config: &Configuration) -> Result<String, String> {
    let (_, flat) = config.euclideanize();
    let report = flat.incidence_report().map_err(|e| e.to_string())?;
    let coords: Vec<(f64, f64)> = flat.points().iter().map(affine).collect();
    let (mut min_x, mut min_y, mut max_x, mut max_y) =
        (f64::INFINITY, f64::INFINITY, f64::NEG_INFINITY, f64::NEG_INFINITY);
    for &(x, y) in &coords {
        min_x = min_x.min(x);
        min_y = min_y.min(y);
        max_x = max_x.max(x);
        max_y = max_y.max(y);
    }
    let span = (max_x - min_x).max(max_y - min_y).max(1.0);
    let pad = span * 0.08;
    let (x0, y0, x1, y1) = (min_x - pad, min_y - pad, max_x + pad, max_y + pad);
    let scale = (SIZE - 2.0 * MARGIN) / span.max((x1 - x0).max(y1 - y0));
    // y flips so the picture matches the usual orientation
    let sx = |x: f64| MARGIN + (x - x0) * scale;
    let sy = |y: f64| SIZE - MARGIN - (y - y0) * scale;

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{SIZE}\" height=\"{SIZE}\" \
         viewBox=\"0 0 {SIZE} {SIZE}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    for line in &report.spanned {
        if let Some(((ax, ay), (bx, by))) = clip(line, x0, y0, x1, y1) {
            svg.push_str(&format!(
                "<line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" \
                 stroke=\"#888\" stroke-width=\"1\"/>\n",
                sx(ax),
                sy(ay),
                sx(bx),
                sy(by)
            ));
        }
    }
    for (p, &(x, y)) in flat.points().iter().zip(&coords) {
        let ordinary = report.ordinary_points.contains(p);
        let (radius, fill) = if ordinary { (5.0, "#c00") } else { (3.5, "#005") };
        svg.push_str(&format!(
            "<circle cx=\"{:.3}\" cy=\"{:.3}\" r=\"{radius}\" fill=\"{fill}\"/>\n",
            sx(x),
            sy(y)
        ));
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
