//! Plain-text point files.
//!
//! One point per line: `x y z` homogeneous or `x y` affine (z = 1).
//! Integers are unbounded decimal with optional leading `-`. Blank lines
//! and `#` comments are ignored. Duplicate points (after canonicalization)
//! are an error, reported with both line numbers.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use triline::{Configuration, ProjPoint};

pub fn parse(text: &str) -> Result<Configuration, String> {
    let mut points: Vec<ProjPoint> = Vec::new();
    let mut seen: BTreeMap<ProjPoint, usize> = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let int = |s: &str| -> Result<BigInt, String> {
            s.parse::<BigInt>()
                .map_err(|_| format!("line {lineno}: not an integer: {s:?}"))
        };
        let point = match fields.as_slice() {
            [x, y] => ProjPoint::new(int(x)?, int(y)?, 1),
            [x, y, z] => ProjPoint::new(int(x)?, int(y)?, int(z)?),
            _ => {
                return Err(format!(
                    "line {lineno}: expected 2 or 3 integers, found {}",
                    fields.len()
                ))
            }
        }
        .map_err(|e| format!("line {lineno}: {e}"))?;
        if let Some(&first) = seen.get(&point) {
            return Err(format!(
                "line {lineno}: duplicate point {point} (first seen at line {first})"
            ));
        }
        seen.insert(point.clone(), lineno);
        points.push(point);
    }
    if points.len() < 3 {
        return Err(format!(
            "need at least 3 points, found {}",
            points.len()
        ));
    }
    Configuration::new(points).map_err(|e| e.to_string())
}

pub fn serialize(config: &Configuration, header: &[String]) -> String {
    let mut out = String::new();
    for line in header {
        out.push_str("# ");
        out.push_str(line);
        out.push('\n');
    }
    for p in config.points() {
        if p.z() == &BigInt::from(1) {
            out.push_str(&format!("{} {}\n", p.x(), p.y()));
        } else {
            out.push_str(&format!("{} {} {}\n", p.x(), p.y(), p.z()));
        }
    }
    out
}
