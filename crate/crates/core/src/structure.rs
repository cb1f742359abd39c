//! Detection of configurations distributed on three concurrent lines, and
//! the half-line decomposition around the apex.
//!
//! The six half-lines are ordered cyclically around the apex. When the apex
//! or any point is infinite, an internal euclideanizing transform gives the
//! cyclic order a concrete affine meaning; the transform is part of the
//! structure so the witness search can work in that frame.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::incidence::Configuration;
use crate::projective::{
    affine_between, direction_candidates, euclideanize, half_line_side, ProjLine, ProjPoint,
    ProjTransform,
};

/// One of the six open half-lines around the apex: a carrier-line index plus
/// the side reported by `half_line_side` in the structure's affine frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HalfLine {
    pub line_index: usize,
    pub side: i8,
}

/// An apex `A` and three distinct lines through it covering a configuration,
/// with the cyclically ordered half-lines and their nearest anchor points.
#[derive(Debug, Clone)]
pub struct ConcurrentStructure {
    apex: ProjPoint,
    lines: [ProjLine; 3],
    apex_in_set: bool,
    to_affine: ProjTransform,
    half_lines: [HalfLine; 6],
    anchors: [Option<ProjPoint>; 6],
}

impl ConcurrentStructure {
    /// Validate and assemble the structure for `config` around `apex`.
    pub fn build(config: &Configuration, apex: ProjPoint, lines: [ProjLine; 3]) -> Result<Self> {
        if config.is_collinear() {
            return Err(Error::CollinearInput);
        }
        if lines[0] == lines[1] || lines[0] == lines[2] || lines[1] == lines[2] {
            return Err(Error::StructureMismatch);
        }
        if !lines.iter().all(|l| apex.on(l)) {
            return Err(Error::StructureMismatch);
        }
        for p in config.points() {
            if p != &apex && !lines.iter().any(|l| p.on(l)) {
                return Err(Error::StructureMismatch);
            }
        }
        let apex_in_set = config.contains(&apex);
        let frame = AffineFrame::build(config, &apex, &lines)?;
        let inverse = frame.to_affine.inverse();
        let anchors = frame.anchor_indices().map(|slot| {
            slot.map(|idx| config.points()[idx].clone())
        });
        // anchors are elements of the configuration, so mapping back through
        // the inverse is exact
        debug_assert!(anchors.iter().flatten().all(|p| config.contains(p)));
        let _ = inverse;
        Ok(ConcurrentStructure {
            apex,
            lines,
            apex_in_set,
            to_affine: frame.to_affine.clone(),
            half_lines: frame.half_lines,
            anchors,
        })
    }

    pub fn apex(&self) -> &ProjPoint {
        &self.apex
    }

    pub fn lines(&self) -> &[ProjLine; 3] {
        &self.lines
    }

    pub fn apex_in_set(&self) -> bool {
        self.apex_in_set
    }

    /// Transform mapping the configuration and apex into an all-finite frame
    /// (identity when everything is already finite).
    pub fn to_affine(&self) -> &ProjTransform {
        &self.to_affine
    }

    /// The six half-lines in cyclic order around the apex, in the affine frame.
    pub fn half_lines(&self) -> &[HalfLine; 6] {
        &self.half_lines
    }

    /// Nearest configuration point on each half-line, aligned with
    /// `half_lines`, in original coordinates.
    pub fn anchors(&self) -> &[Option<ProjPoint>; 6] {
        &self.anchors
    }

    pub(crate) fn affine_frame(&self, config: &Configuration) -> Result<AffineFrame> {
        AffineFrame::build(config, &self.apex, &self.lines)
    }
}

/// Working data in the all-finite frame: apex, carrier lines, the cyclic ray
/// order, and each point's ray assignment.
pub(crate) struct AffineFrame {
    pub to_affine: ProjTransform,
    pub apex: ProjPoint,
    pub lines: [ProjLine; 3],
    pub half_lines: [HalfLine; 6],
    pub points: Vec<ProjPoint>,
    /// Half-line slot (index into `half_lines`) per configuration point;
    /// `None` marks the apex itself.
    pub ray_of: Vec<Option<usize>>,
}

impl AffineFrame {
    fn build(config: &Configuration, apex: &ProjPoint, lines: &[ProjLine; 3]) -> Result<Self> {
        let to_affine = if !apex.is_infinite()
            && config.points().iter().all(|p| !p.is_infinite())
        {
            ProjTransform::identity()
        } else {
            let mut all: Vec<ProjPoint> = config.points().to_vec();
            if !config.contains(apex) {
                all.push(apex.clone());
            }
            euclideanize(&all).0
        };
        let apex_a = to_affine.apply(apex);
        let lines_a = [
            to_affine.apply_dual(&lines[0]),
            to_affine.apply_dual(&lines[1]),
            to_affine.apply_dual(&lines[2]),
        ];
        // six rays, sorted counterclockwise from the positive x-axis
        let mut rays: Vec<(usize, i8)> = Vec::with_capacity(6);
        for i in 0..3 {
            rays.push((i, 1));
            rays.push((i, -1));
        }
        let dir_of = |&(i, side): &(usize, i8)| -> (BigInt, BigInt) {
            let l = &lines_a[i];
            let (dx, dy) = (l.b().clone(), -l.a().clone());
            if side > 0 {
                (dx, dy)
            } else {
                (-dx, -dy)
            }
        };
        rays.sort_by(|r1, r2| angular_cmp(&dir_of(r1), &dir_of(r2)));
        let half_lines: [HalfLine; 6] = core::array::from_fn(|k| HalfLine {
            line_index: rays[k].0,
            side: rays[k].1,
        });
        let points: Vec<ProjPoint> = config.points().iter().map(|p| to_affine.apply(p)).collect();
        let mut ray_of: Vec<Option<usize>> = Vec::with_capacity(points.len());
        for (orig, img) in config.points().iter().zip(&points) {
            if orig == apex {
                ray_of.push(None);
                continue;
            }
            let line_index = lines
                .iter()
                .position(|l| orig.on(l))
                .ok_or(Error::StructureMismatch)?;
            let side = half_line_side(&apex_a, &lines_a[line_index], img)
                .map_err(|_| Error::StructureMismatch)?;
            let slot = half_lines
                .iter()
                .position(|h| h.line_index == line_index && h.side == side)
                .expect("all six rays are present");
            ray_of.push(Some(slot));
        }
        Ok(AffineFrame {
            to_affine,
            apex: apex_a,
            lines: lines_a,
            half_lines,
            points,
            ray_of,
        })
    }

    /// Index of the configuration point nearest the apex on each half-line.
    pub fn anchor_indices(&self) -> [Option<usize>; 6] {
        let mut anchors: [Option<usize>; 6] = [None; 6];
        for (idx, slot) in self.ray_of.iter().enumerate() {
            let Some(slot) = *slot else { continue };
            match anchors[slot] {
                None => anchors[slot] = Some(idx),
                Some(best) => {
                    let closer = affine_between(&self.apex, &self.points[idx], &self.points[best])
                        .expect("points on a common ray are finite and collinear");
                    if closer {
                        anchors[slot] = Some(idx);
                    }
                }
            }
        }
        anchors
    }
}

/// Counterclockwise comparison of nonzero direction vectors, starting at the
/// positive x-axis.
fn angular_cmp(d1: &(BigInt, BigInt), d2: &(BigInt, BigInt)) -> core::cmp::Ordering {
    let half = |d: &(BigInt, BigInt)| -> u8 {
        if d.1.is_positive() || (d.1.is_zero() && d.0.is_positive()) {
            0
        } else {
            1
        }
    };
    half(d1).cmp(&half(d2)).then_with(|| {
        let cross = &d1.0 * &d2.1 - &d1.1 * &d2.0;
        // positive cross product puts d1 strictly before d2
        BigInt::zero().cmp(&cross)
    })
}

impl Configuration {
    /// Search for a point `A` and three lines through it covering the
    /// configuration.
    ///
    /// Candidate apexes are meets of pairs of spanned lines, examined in
    /// tiers: heavy-heavy pairs (lines with at least three points), then
    /// heavy-any pairs, then all pairs for small inputs. Within the first
    /// tier that yields a valid structure, the lexicographically least
    /// `(apex, lines)` wins.
    pub fn detect_concurrent_structure(&self) -> Result<Option<ConcurrentStructure>> {
        if self.is_collinear() {
            return Err(Error::CollinearInput);
        }
        let pair_counts = self.line_pair_counts();
        let all: Vec<&ProjLine> = pair_counts.keys().collect();
        let heavy: Vec<&ProjLine> = pair_counts
            .iter()
            .filter(|(_, &c)| c >= 3)
            .map(|(l, _)| l)
            .collect();

        let mut tiers: Vec<Vec<(&ProjLine, &ProjLine)>> = Vec::new();
        let mut tier1 = Vec::new();
        for i in 0..heavy.len() {
            for j in (i + 1)..heavy.len() {
                tier1.push((heavy[i], heavy[j]));
            }
        }
        tiers.push(tier1);
        let mut tier2 = Vec::new();
        for h in &heavy {
            for l in &all {
                if l != h {
                    tier2.push((*h, *l));
                }
            }
        }
        tiers.push(tier2);
        if self.len() <= 60 {
            let mut tier3 = Vec::new();
            for i in 0..all.len() {
                for j in (i + 1)..all.len() {
                    tier3.push((all[i], all[j]));
                }
            }
            tiers.push(tier3);
        }

        for tier in tiers {
            let mut candidates: BTreeSet<ProjPoint> = BTreeSet::new();
            for (l, m) in tier {
                if let Ok(p) = l.meet(m) {
                    candidates.insert(p);
                }
            }
            let mut best: Option<(ProjPoint, [ProjLine; 3])> = None;
            for apex in candidates {
                let Some(lines) = self.concurrent_cover(&apex) else { continue };
                let key = (apex, lines);
                if best.as_ref().is_none_or(|b| key < *b) {
                    best = Some(key);
                }
            }
            if let Some((apex, lines)) = best {
                return Ok(Some(ConcurrentStructure::build(self, apex, lines)?));
            }
        }
        Ok(None)
    }

    fn line_pair_counts(&self) -> BTreeMap<ProjLine, usize> {
        let mut counts = BTreeMap::new();
        let pts = self.points();
        for i in 0..pts.len() {
            for j in (i + 1)..pts.len() {
                let line = pts[i].join(&pts[j]).expect("points are distinct");
                *counts.entry(line).or_insert(0) += 1;
            }
        }
        counts
    }

    /// Three sorted lines through `apex` covering the configuration, padded
    /// with an arbitrary extra line when fewer than three are needed.
    fn concurrent_cover(&self, apex: &ProjPoint) -> Option<[ProjLine; 3]> {
        let mut groups: BTreeSet<ProjLine> = BTreeSet::new();
        for p in self.points() {
            if p == apex {
                continue;
            }
            groups.insert(apex.join(p).expect("p differs from apex"));
            if groups.len() > 3 {
                return None;
            }
        }
        let mut lines: Vec<ProjLine> = groups.into_iter().collect();
        while lines.len() < 3 {
            lines.push(extra_line_through(apex, &lines));
        }
        lines.sort();
        Some([lines[0].clone(), lines[1].clone(), lines[2].clone()])
    }
}

/// Deterministic smallest line through `apex` distinct from the given ones.
fn extra_line_through(apex: &ProjPoint, avoid: &[ProjLine]) -> ProjLine {
    let vertical_dir = ProjPoint::at_infinity(0, 1).expect("nonzero");
    if apex.is_infinite() {
        // lines through an infinite apex: vary a finite anchor point
        for c in 0i64.. {
            let anchor = if apex == &vertical_dir {
                ProjPoint::finite(c, 0)
            } else {
                ProjPoint::finite(0, c)
            };
            let line = apex.join(&anchor).expect("finite point differs from infinite apex");
            if !avoid.contains(&line) {
                return line;
            }
        }
        unreachable!("distinct anchors give fresh lines");
    }
    for (u, v) in direction_candidates() {
        let dir = ProjPoint::new(u, v, 0).expect("nonzero direction");
        let line = apex.join(&dir).expect("finite apex differs from direction");
        if !avoid.contains(&line) {
            return line;
        }
    }
    unreachable!("infinitely many directions through a finite apex")
}
