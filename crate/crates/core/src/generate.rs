//! Configuration generators: the two counterexample families with
//! `t < ceil(n/2)` on n = 4k+1 points, and seeded random inputs for
//! property tests.
//!
//! Both families pick their extra infinite point from a short candidate
//! list and accept the first one that passes a brute-force bound check at
//! construction time. An unverified family is never returned.

use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::incidence::Configuration;
use crate::projective::ProjPoint;

/// Three-row family: k points on each of two outer horizontal lines,
/// 2k-1 points on the middle one, the shared horizontal direction, and one
/// more infinite point. n = 4k+1 and `t < ceil(n/2)` (checked).
pub fn aikn_fig2(k: u32) -> Result<Configuration> {
    if k < 2 {
        return Err(Error::InvalidParams);
    }
    let k = i64::from(k);
    let mut base: Vec<ProjPoint> = Vec::with_capacity(4 * k as usize);
    for i in 0..k {
        base.push(ProjPoint::finite(2 * i, 0));
    }
    for i in 0..=(2 * k - 2) {
        base.push(ProjPoint::finite(i, 1));
    }
    for i in 0..k {
        base.push(ProjPoint::finite(2 * i, 2));
    }
    base.push(ProjPoint::at_infinity(1, 0).expect("nonzero"));
    checked_family(base, &[(0, 1), (1, 1), (1, -1)])
}

/// Fan family on three pairwise non-concurrent lines: a vertical line and
/// two diagonals crossed by a fan of lines through the origin, plus one
/// infinite point. n = 4k+1 and `t < ceil(n/2)` (checked).
pub fn aikn_fig1(k: u32) -> Result<Configuration> {
    if k < 2 {
        return Err(Error::InvalidParams);
    }
    let l = i64::from(k) - 1;
    let mut base: Vec<ProjPoint> = Vec::new();
    base.push(ProjPoint::finite(0, 0));
    base.push(ProjPoint::finite(0, l));
    base.push(ProjPoint::finite(0, -l));
    // fan line through the origin with slope j/(2l) hits the diagonals
    // x + y = l and x - y = l at these points, homogenized
    for j in -l..=l {
        for fwd in [true, false] {
            let z = if fwd { 2 * l + j } else { 2 * l - j };
            let p = ProjPoint::new(2 * l * l, j * l, z).expect("z > 0");
            if !base.contains(&p) {
                base.push(p);
            }
        }
    }
    if base.len() != 4 * k as usize {
        return Err(Error::FamilyCheckFailed);
    }
    checked_family(base, &[(0, 1), (1, -1), (1, 1)])
}

/// Append the first candidate infinite direction for which the bound
/// `t < ceil(n/2)` verifies by brute force.
fn checked_family(base: Vec<ProjPoint>, candidates: &[(i64, i64)]) -> Result<Configuration> {
    for &(dx, dy) in candidates {
        let extra = ProjPoint::at_infinity(dx, dy).expect("nonzero");
        if base.contains(&extra) {
            continue;
        }
        let mut points = base.clone();
        points.push(extra);
        let config = Configuration::new(points)?;
        let report = config.incidence_report()?;
        if !report.dirac_holds() {
            return Ok(config);
        }
    }
    Err(Error::FamilyCheckFailed)
}

/// Seeded random configuration on three distinct lines through a random
/// finite apex, with the given number of points per line. The apex itself
/// is appended iff `include_apex`.
pub fn random_concurrent(
    counts: (usize, usize, usize),
    include_apex: bool,
    seed: u64,
) -> Result<Configuration> {
    let (a, b, c) = counts;
    let populated = [a, b, c].iter().filter(|&&x| x > 0).count();
    if a + b + c < 3 || populated < 2 {
        return Err(Error::InvalidParams);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let apex = (rng.random_range(-20i64..=20), rng.random_range(-20i64..=20));
    // three pairwise non-parallel directions
    let mut dirs: Vec<(i64, i64)> = Vec::with_capacity(3);
    while dirs.len() < 3 {
        let d = (rng.random_range(-5i64..=5), rng.random_range(-5i64..=5));
        if d == (0, 0) {
            continue;
        }
        if dirs.iter().any(|&(x, y)| x * d.1 - y * d.0 == 0) {
            continue;
        }
        dirs.push(d);
    }
    let mut points: Vec<ProjPoint> = Vec::with_capacity(a + b + c + 1);
    for (line, want) in dirs.iter().zip([a, b, c]) {
        let mut params: Vec<i64> = Vec::with_capacity(want);
        while params.len() < want {
            let t = rng.random_range(-50i64..=50);
            if t != 0 && !params.contains(&t) {
                params.push(t);
            }
        }
        for t in params {
            points.push(ProjPoint::finite(apex.0 + t * line.0, apex.1 + t * line.1));
        }
    }
    if include_apex {
        points.push(ProjPoint::finite(apex.0, apex.1));
    }
    Configuration::new(points)
}

/// Seeded random non-collinear set of `n` distinct integer points with
/// coordinates in `[-bound, bound]`.
pub fn random_general(n: usize, bound: i64, seed: u64) -> Result<Configuration> {
    if n < 3 || bound < 2 {
        return Err(Error::InvalidParams);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let mut points: Vec<ProjPoint> = Vec::with_capacity(n);
        let mut draws = 0usize;
        while points.len() < n {
            draws += 1;
            if draws > 100 * n {
                break;
            }
            let p = ProjPoint::finite(
                rng.random_range(-bound..=bound),
                rng.random_range(-bound..=bound),
            );
            if !points.contains(&p) {
                points.push(p);
            }
        }
        if points.len() < n {
            continue;
        }
        let config = Configuration::new(points)?;
        if !config.is_collinear() {
            return Ok(config);
        }
    }
    Err(Error::GenerationExhausted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::ProjLine;
    use alloc::vec::Vec;

    #[test]
    fn small_k_is_rejected() {
        assert_eq!(aikn_fig2(1).err(), Some(Error::InvalidParams));
        assert_eq!(aikn_fig1(0).err(), Some(Error::InvalidParams));
    }

    #[test]
    fn three_row_family_sizes_and_bounds() {
        for (k, t) in [(2u32, 4usize), (3, 6), (4, 8)] {
            let config = aikn_fig2(k).unwrap();
            assert_eq!(config.len(), 4 * k as usize + 1);
            let report = config.incidence_report().unwrap();
            assert_eq!(report.t, t);
            assert!(report.t < report.threshold);
            assert!(!report.dirac_holds());
        }
    }

    #[test]
    fn three_row_family_structure() {
        let config = aikn_fig2(4).unwrap();
        assert_eq!(config.len(), 17);
        let infinite: Vec<&ProjPoint> =
            config.points().iter().filter(|p| p.is_infinite()).collect();
        assert_eq!(infinite.len(), 2);
        assert!(config.contains(&ProjPoint::at_infinity(1, 0).unwrap()));
        assert!(config.contains(&ProjPoint::at_infinity(0, 1).unwrap()));
        // removing the second infinite point leaves everything on the three
        // horizontal rows, which share the direction (1 : 0 : 0)
        let rows = [
            ProjLine::new(0, 1, 0).unwrap(),
            ProjLine::new(0, 1, -1).unwrap(),
            ProjLine::new(0, 1, -2).unwrap(),
        ];
        for p in config.points() {
            if p == &ProjPoint::at_infinity(0, 1).unwrap() {
                continue;
            }
            assert!(rows.iter().any(|r| p.on(r)));
        }
    }

    #[test]
    fn fan_family_sizes_and_bounds() {
        for (k, t) in [(2u32, 4usize), (3, 6), (4, 8)] {
            let config = aikn_fig1(k).unwrap();
            assert_eq!(config.len(), 4 * k as usize + 1);
            let report = config.incidence_report().unwrap();
            assert_eq!(report.t, t);
            assert!(!report.dirac_holds());
        }
    }

    #[test]
    fn fan_family_carriers_are_not_concurrent() {
        let k = 4u32;
        let l = i64::from(k) - 1;
        let config = aikn_fig1(k).unwrap();
        let carriers = [
            ProjLine::new(1, 0, 0).unwrap(),
            ProjLine::new(1, 1, -l).unwrap(),
            ProjLine::new(1, -1, -l).unwrap(),
        ];
        for p in config.points() {
            assert!(carriers.iter().any(|c| p.on(c)));
        }
        let meets = [
            carriers[0].meet(&carriers[1]).unwrap(),
            carriers[0].meet(&carriers[2]).unwrap(),
            carriers[1].meet(&carriers[2]).unwrap(),
        ];
        assert_ne!(meets[0], meets[1]);
        assert_ne!(meets[0], meets[2]);
        assert_ne!(meets[1], meets[2]);
    }

    #[test]
    fn random_concurrent_contract() {
        assert_eq!(
            random_concurrent((5, 0, 0), false, 1).err(),
            Some(Error::InvalidParams)
        );
        let config = random_concurrent((3, 3, 3), false, 1).unwrap();
        assert_eq!(config.len(), 9);
        assert!(config.detect_concurrent_structure().unwrap().is_some());
        let with_apex = random_concurrent((1, 1, 1), true, 7).unwrap();
        assert_eq!(with_apex.len(), 4);
        assert!(with_apex.verify_dirac().unwrap().0);
    }

    #[test]
    fn random_concurrent_is_seed_deterministic() {
        let a = random_concurrent((4, 2, 3), true, 99).unwrap();
        let b = random_concurrent((4, 2, 3), true, 99).unwrap();
        assert_eq!(a, b);
        let c = random_concurrent((4, 2, 3), true, 100).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn random_general_contract() {
        assert_eq!(random_general(2, 10, 0).err(), Some(Error::InvalidParams));
        assert_eq!(random_general(5, 1, 0).err(), Some(Error::InvalidParams));
        let tri = random_general(3, 2, 0).unwrap();
        assert_eq!(tri.len(), 3);
        assert!(!tri.is_collinear());
        let a = random_general(10, 100, 42).unwrap();
        let b = random_general(10, 100, 42).unwrap();
        assert_eq!(a, b);
        a.incidence_report().unwrap();
    }
}
