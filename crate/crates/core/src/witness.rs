//! Constructive search for an ordinary point of a configuration distributed
//! on three concurrent lines.
//!
//! The search replays a case analysis over the six half-lines around the
//! apex instead of scanning for the argmax: that global scan lives in the
//! incidence analyzer and serves as the oracle in tests. Every returned
//! witness carries the case path taken, and the final count is recomputed
//! independently; a disagreement is surfaced as `CertificateMismatch`,
//! never hidden.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::incidence::Configuration;
use crate::projective::{affine_between, half_line_side, ProjLine, ProjPoint, ProjTransform};
use crate::structure::{AffineFrame, ConcurrentStructure};

/// One step of the case path taken by the search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProofStep {
    /// All points lie on three pairwise non-adjacent half-lines;
    /// `heavy_first` records whether the first populated one held at least
    /// `ceil(n/2)` points.
    NonSuccessive { heavy_first: bool },
    /// Two adjacent populated half-lines found, starting at this cyclic slot.
    Successive { start: usize },
    /// Neither adjacent carrier line is spanned; both anchors are ordinary.
    BothUnspanned,
    /// The first carrier holds no point besides its anchor.
    LoneAnchorOnFirst { equal_cardinality: bool },
    /// The second carrier holds no point besides its anchor.
    LoneAnchorOnSecond { equal_cardinality: bool },
    /// The anchor chord crosses the forward half-line of the third carrier;
    /// `removed` points were deleted before recursing.
    CaseA { crossing: ProjPoint, removed: usize },
    /// Mirror image of `CaseA`: the chord crosses the backward half-line.
    CaseB { crossing: ProjPoint, removed: usize },
    /// The anchor chord is parallel to the third carrier.
    CaseC { first_branch: bool },
    /// No point lies strictly between the apex and the chord crossing.
    EmptySegment { second_anchor: bool },
}

/// An ordinary point together with its exact incidence count and the case
/// path that produced it.
#[derive(Debug, Clone)]
pub struct WitnessResult {
    pub point: ProjPoint,
    pub count: usize,
    pub trace: Vec<ProofStep>,
}

/// Execute the constructive case analysis and return an ordinary point.
///
/// The structure must cover the configuration. The returned count is the
/// independently recomputed number of spanned lines through the witness and
/// is always at least `ceil(n/2)`.
pub fn find_ordinary_point(
    config: &Configuration,
    structure: &ConcurrentStructure,
) -> Result<WitnessResult> {
    if config.is_collinear() {
        return Err(Error::CollinearInput);
    }
    let lines = structure.lines();
    if lines[0] == lines[1]
        || lines[0] == lines[2]
        || lines[1] == lines[2]
        || !lines.iter().all(|l| structure.apex().on(l))
    {
        return Err(Error::StructureMismatch);
    }
    let frame = structure.affine_frame(config)?;
    let search = Search {
        frame: &frame,
        back: frame.to_affine.inverse(),
    };
    let active: Vec<usize> = (0..config.len()).collect();
    let mut trace = Vec::new();
    let idx = search.dispatch(&active, &mut trace)?;
    let point = config.points()[idx].clone();
    let count = config.lines_through(&point);
    if count < config.threshold() {
        return Err(Error::CertificateMismatch("witness count below the threshold"));
    }
    Ok(WitnessResult { point, count, trace })
}

/// Role slots of the proof labeling: indexes into the cyclic half-line
/// order for (p1, q1, r1, p2, q2, r2).
type Labeling = [usize; 6];

struct Search<'a> {
    frame: &'a AffineFrame,
    back: ProjTransform,
}

impl Search<'_> {
    fn is_apex(&self, idx: usize) -> bool {
        self.frame.ray_of[idx].is_none()
    }

    fn slot_of(&self, idx: usize) -> Option<usize> {
        self.frame.ray_of[idx]
    }

    fn line_of_slot(&self, slot: usize) -> usize {
        self.frame.half_lines[slot].line_index
    }

    fn point(&self, idx: usize) -> &ProjPoint {
        &self.frame.points[idx]
    }

    /// Point lies on the given carrier line (the apex is on all three).
    fn on_carrier(&self, idx: usize, line_index: usize) -> bool {
        match self.slot_of(idx) {
            None => true,
            Some(slot) => self.line_of_slot(slot) == line_index,
        }
    }

    fn carrier_population(&self, active: &[usize], line_index: usize) -> usize {
        active.iter().filter(|&&i| self.on_carrier(i, line_index)).count()
    }

    fn ray_population(&self, active: &[usize], slot: usize) -> usize {
        active.iter().filter(|&&i| self.slot_of(i) == Some(slot)).count()
    }

    /// Nearest active point to the apex on a half-line.
    fn anchor(&self, active: &[usize], slot: usize) -> Option<usize> {
        let mut best: Option<usize> = None;
        for &i in active {
            if self.slot_of(i) != Some(slot) {
                continue;
            }
            best = Some(match best {
                None => i,
                Some(b) => {
                    let closer = affine_between(&self.frame.apex, self.point(i), self.point(b))
                        .expect("ray points are finite and collinear with the apex");
                    if closer {
                        i
                    } else {
                        b
                    }
                }
            });
        }
        best
    }

    /// A line is ordinary for the active set iff exactly two active points
    /// lie on it.
    fn is_ordinary(&self, active: &[usize], line: &ProjLine) -> bool {
        let mut on = 0;
        for &i in active {
            if self.point(i).on(line) {
                on += 1;
                if on > 2 {
                    return false;
                }
            }
        }
        on == 2
    }

    fn dispatch(&self, active: &[usize], trace: &mut Vec<ProofStep>) -> Result<usize> {
        let mut used = [false; 6];
        for &i in active {
            if let Some(slot) = self.slot_of(i) {
                used[slot] = true;
            }
        }
        for start in [0usize, 1] {
            let triple = [start, start + 2, start + 4];
            let covered = (0..6).all(|s| !used[s] || triple.contains(&s));
            if covered {
                return self.case_non_successive(active, triple, trace);
            }
        }
        for start in 0..6 {
            if used[start] && used[(start + 1) % 6] {
                trace.push(ProofStep::Successive { start });
                let labeling: Labeling = core::array::from_fn(|r| (start + r) % 6);
                return self.case_successive(active, labeling, trace, false);
            }
        }
        Err(Error::CertificateMismatch(
            "non-collinear set without successive pair or alternating cover",
        ))
    }

    /// The set fits on three pairwise non-adjacent half-lines: every spanned
    /// line except the carriers is ordinary, so one of the first two
    /// populated anchors does the job.
    fn case_non_successive(
        &self,
        active: &[usize],
        triple: [usize; 3],
        trace: &mut Vec<ProofStep>,
    ) -> Result<usize> {
        let populated: Vec<usize> = triple
            .iter()
            .copied()
            .filter(|&s| self.ray_population(active, s) > 0)
            .collect();
        if populated.len() < 2 {
            return Err(Error::CertificateMismatch(
                "fewer than two populated half-lines in a non-collinear set",
            ));
        }
        let n = active.len();
        let first = populated[0];
        let second = populated[1];
        let heavy_first = self.ray_population(active, first) >= ceil_half(n as i64);
        trace.push(ProofStep::NonSuccessive { heavy_first });
        let winner = if heavy_first { second } else { first };
        self.anchor(active, winner)
            .ok_or(Error::CertificateMismatch("populated half-line lost its anchor"))
    }

    /// Two adjacent populated half-lines: run the shortcuts, then classify
    /// the anchor chord against the third carrier. `mirrored` tracks whether
    /// the labeling has been reflected, for trace tagging only.
    fn case_successive(
        &self,
        active: &[usize],
        lab: Labeling,
        trace: &mut Vec<ProofStep>,
        mirrored: bool,
    ) -> Result<usize> {
        let lp = self.line_of_slot(lab[0]);
        let lq = self.line_of_slot(lab[1]);
        let lr = self.line_of_slot(lab[2]);
        let p1_anchor = self
            .anchor(active, lab[0])
            .ok_or(Error::CertificateMismatch("first half-line is not populated"))?;
        let q1_anchor = self
            .anchor(active, lab[1])
            .ok_or(Error::CertificateMismatch("second half-line is not populated"))?;
        let on_p = self.carrier_population(active, lp);
        let on_q = self.carrier_population(active, lq);
        if on_p == 1 && on_q == 1 {
            trace.push(ProofStep::BothUnspanned);
            return Ok(p1_anchor);
        }
        if on_p == 1 {
            // q is spanned and the apex is outside the set, so the carrier
            // cardinalities decide which anchor is ordinary
            let equal = self.carrier_population(active, lq)
                == self.carrier_population(active, lr);
            trace.push(ProofStep::LoneAnchorOnFirst { equal_cardinality: equal });
            return Ok(if equal { q1_anchor } else { p1_anchor });
        }
        if on_q == 1 {
            let equal = self.carrier_population(active, lp)
                == self.carrier_population(active, lr);
            trace.push(ProofStep::LoneAnchorOnSecond { equal_cardinality: equal });
            return Ok(if equal { p1_anchor } else { q1_anchor });
        }
        // both carriers spanned: classify the anchor chord against r
        let chord = self
            .point(p1_anchor)
            .join(self.point(q1_anchor))
            .expect("anchors are distinct");
        let crossing = chord
            .meet(&self.frame.lines[lr])
            .expect("the chord never equals a carrier");
        if crossing.is_infinite() {
            return self.case_parallel_chord(active, lab, p1_anchor, q1_anchor, trace);
        }
        let side = half_line_side(&self.frame.apex, &self.frame.lines[lr], &crossing)
            .map_err(|_| Error::CertificateMismatch("chord crossing collapsed into the apex"))?;
        if side == self.frame.half_lines[lab[2]].side {
            self.case_crossing_chord(active, lab, crossing, trace, mirrored)
        } else {
            let reflected: Labeling = [lab[1], lab[0], lab[5], lab[4], lab[3], lab[2]];
            self.case_crossing_chord(active, reflected, crossing, trace, !mirrored)
        }
    }

    /// Cases (a)/(b): the chord meets the forward half-line of the third
    /// carrier at `crossing`. Deletes the open-segment points and their
    /// projections, then recurses; the witness is always one of the two
    /// anchors.
    fn case_crossing_chord(
        &self,
        active: &[usize],
        lab: Labeling,
        crossing: ProjPoint,
        trace: &mut Vec<ProofStep>,
        mirrored: bool,
    ) -> Result<usize> {
        let n = active.len();
        let lp = self.line_of_slot(lab[0]);
        let lq = self.line_of_slot(lab[1]);
        let lr = self.line_of_slot(lab[2]);
        let p1_anchor = self.anchor(active, lab[0]).expect("checked by caller");
        let q1_anchor = self.anchor(active, lab[1]).expect("checked by caller");
        let segment: Vec<usize> = active
            .iter()
            .copied()
            .filter(|&i| {
                !self.is_apex(i)
                    && self.line_of_slot(self.slot_of(i).expect("not apex")) == lr
                    && affine_between(&self.frame.apex, self.point(i), &crossing)
                        .expect("carrier points are finite and collinear")
            })
            .collect();
        let removed = segment.len();
        if removed == 0 {
            // no point strictly between apex and crossing: one counting
            // branch fires; check the ordinary-chord fact along the way
            for &s in active {
                if self.is_apex(s)
                    || s == p1_anchor
                    || s == q1_anchor
                    || self.point(s) == &crossing
                    || !(self.on_carrier(s, lp) || self.on_carrier(s, lr))
                {
                    continue;
                }
                let line = self.point(q1_anchor).join(self.point(s)).expect("distinct");
                if !self.is_ordinary(active, &line) {
                    return Err(Error::CertificateMismatch(
                        "second-anchor chord to the first/third carrier is not ordinary",
                    ));
                }
            }
            let excluded = |&i: &usize| {
                self.is_apex(i)
                    || i == p1_anchor
                    || i == q1_anchor
                    || self.point(i) == &crossing
            };
            let on_p_or_r = active
                .iter()
                .filter(|i| !excluded(i) && (self.on_carrier(**i, lp) || self.on_carrier(**i, lr)))
                .count();
            let on_q = active
                .iter()
                .filter(|i| !excluded(i) && self.on_carrier(**i, lq))
                .count();
            let needed = ceil_half(n as i64 - 4);
            let (second_anchor, winner) = if on_p_or_r >= needed {
                (true, q1_anchor)
            } else if on_q >= needed {
                (false, p1_anchor)
            } else {
                return Err(Error::CertificateMismatch(
                    "both empty-segment counting branches failed",
                ));
            };
            trace.push(ProofStep::EmptySegment { second_anchor });
            return Ok(winner);
        }
        // delete the segment points and, where the projection through the
        // second anchor hits the first carrier, their images
        let mut drop: Vec<usize> = segment.clone();
        for &t in &segment {
            let line = self.point(q1_anchor).join(self.point(t)).expect("distinct");
            let image = line
                .meet(&self.frame.lines[lp])
                .expect("the projection line never equals the first carrier");
            if image.is_infinite() {
                continue; // projection parallel to the carrier: deleted without image
            }
            if let Some(&hit) = active.iter().find(|&&i| self.point(i) == &image) {
                drop.push(hit);
            }
        }
        drop.sort_unstable();
        drop.dedup();
        let reduced: Vec<usize> = active.iter().copied().filter(|i| !drop.contains(i)).collect();
        if reduced.len() + 2 * removed < n || reduced.len() >= n {
            return Err(Error::CertificateMismatch("deletion bookkeeping out of bounds"));
        }
        let step = if mirrored {
            ProofStep::CaseB {
                crossing: self.back.apply(&crossing),
                removed,
            }
        } else {
            ProofStep::CaseA {
                crossing: self.back.apply(&crossing),
                removed,
            }
        };
        trace.push(step);
        let witness = self.case_successive(&reduced, lab, trace, mirrored)?;
        if witness != p1_anchor && witness != q1_anchor {
            return Err(Error::CertificateMismatch(
                "recursive witness escaped the anchor pair",
            ));
        }
        Ok(witness)
    }

    /// Case (c): the chord is parallel to the third carrier. Both
    /// anchor-to-half-line pencils are ordinary, so a majority count over
    /// the two covering unions picks the witness.
    fn case_parallel_chord(
        &self,
        active: &[usize],
        lab: Labeling,
        p1_anchor: usize,
        q1_anchor: usize,
        trace: &mut Vec<ProofStep>,
    ) -> Result<usize> {
        let lp = self.line_of_slot(lab[0]);
        let lq = self.line_of_slot(lab[1]);
        for (anchor, slot, what) in [
            (p1_anchor, lab[2], "first-anchor line to the forward half-line"),
            (q1_anchor, lab[5], "second-anchor line to the backward half-line"),
        ] {
            for &s in active {
                if self.slot_of(s) != Some(slot) {
                    continue;
                }
                let line = self.point(anchor).join(self.point(s)).expect("distinct");
                if !self.is_ordinary(active, &line) {
                    return Err(Error::CertificateMismatch(what));
                }
            }
        }
        let n = active.len();
        let needed = ceil_half(n as i64 - 1);
        let count_union = |line_index: usize, slot: usize| {
            active
                .iter()
                .filter(|&&i| {
                    !self.is_apex(i)
                        && (self.on_carrier(i, line_index) || self.slot_of(i) == Some(slot))
                })
                .count()
        };
        if count_union(lq, lab[2]) >= needed {
            trace.push(ProofStep::CaseC { first_branch: true });
            Ok(p1_anchor)
        } else if count_union(lp, lab[5]) >= needed {
            trace.push(ProofStep::CaseC { first_branch: false });
            Ok(q1_anchor)
        } else {
            Err(Error::CertificateMismatch("both parallel-chord branches failed"))
        }
    }
}

/// `ceil(m / 2)` clamped at zero.
fn ceil_half(m: i64) -> usize {
    if m <= 0 {
        0
    } else {
        ((m + 1) / 2) as usize
    }
}
