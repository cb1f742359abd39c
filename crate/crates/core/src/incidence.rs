//! Spanned-line enumeration and incidence counting.
//!
//! This is the brute-force side of the artifact: exact, quadratic in the
//! number of points, and the oracle against which the constructive witness
//! search is checked.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::projective::{collinear, euclideanize, ProjLine, ProjPoint, ProjTransform};

/// A finite set of at least three pairwise distinct projective points, in a
/// stable caller-chosen order. Collinearity is a queried property, not an
/// invariant: fully collinear inputs are rejected by the operations that
/// need non-collinearity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    points: Vec<ProjPoint>,
}

impl Configuration {
    pub fn new(points: Vec<ProjPoint>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::InvalidConfiguration);
        }
        let distinct: BTreeSet<&ProjPoint> = points.iter().collect();
        if distinct.len() != points.len() {
            return Err(Error::InvalidConfiguration);
        }
        Ok(Configuration { points })
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.points.contains(p)
    }

    /// `ceil(n / 2)`, the ordinary-point threshold for this configuration.
    pub fn threshold(&self) -> usize {
        (self.points.len() + 1) / 2
    }

    pub fn is_collinear(&self) -> bool {
        let first = &self.points[0];
        let second = &self.points[1];
        self.points[2..].iter().all(|p| collinear(first, second, p))
    }

    /// Image of the configuration under an invertible transform.
    pub fn transformed(&self, t: &ProjTransform) -> Configuration {
        Configuration {
            points: self.points.iter().map(|p| t.apply(p)).collect(),
        }
    }

    /// A transform moving every point off the line at infinity, with the
    /// transformed configuration. Incidence structure is preserved exactly.
    pub fn euclideanize(&self) -> (ProjTransform, Configuration) {
        let (t, points) = euclideanize(&self.points);
        (t, Configuration { points })
    }

    /// All lines spanned by the configuration, deduplicated canonically.
    pub fn spanned_lines(&self) -> Result<BTreeSet<ProjLine>> {
        Ok(self.incidence_report()?.spanned)
    }

    /// Number of distinct spanned lines through `p` (which need not be a
    /// member of the configuration).
    pub fn lines_through(&self, p: &ProjPoint) -> usize {
        let mut dirs: Vec<ProjLine> = Vec::with_capacity(self.points.len());
        for q in &self.points {
            if q != p {
                dirs.push(p.join(q).expect("distinct points"));
            }
        }
        dirs.sort_unstable();
        if self.contains(p) {
            dirs.dedup();
            dirs.len()
        } else {
            // only lines holding >= 2 configuration points are spanned
            let mut spanned = 0;
            let mut run = 1;
            for i in 1..=dirs.len() {
                if i < dirs.len() && dirs[i] == dirs[i - 1] {
                    run += 1;
                } else {
                    if run >= 2 {
                        spanned += 1;
                    }
                    run = 1;
                }
            }
            spanned
        }
    }

    /// Full exact incidence report: spanned lines, per-point counts, `t`,
    /// and the ordinary classifications.
    pub fn incidence_report(&self) -> Result<IncidenceReport> {
        if self.is_collinear() {
            return Err(Error::CollinearInput);
        }
        let n = self.points.len();
        let mut ids: BTreeMap<ProjLine, u32> = BTreeMap::new();
        let mut pair_count: Vec<u32> = Vec::new();
        let mut per_point_ids: Vec<Vec<u32>> = alloc::vec![Vec::with_capacity(n - 1); n];
        for i in 0..n {
            for j in (i + 1)..n {
                let line = self.points[i].join(&self.points[j]).expect("points are distinct");
                let next = pair_count.len() as u32;
                let id = *ids.entry(line).or_insert(next);
                if id == next {
                    pair_count.push(0);
                }
                pair_count[id as usize] += 1;
                per_point_ids[i].push(id);
                per_point_ids[j].push(id);
            }
        }
        let counts: Vec<usize> = per_point_ids
            .into_iter()
            .map(|mut v| {
                v.sort_unstable();
                v.dedup();
                v.len()
            })
            .collect();
        let t = counts.iter().copied().max().expect("n >= 3");
        let threshold = self.threshold();
        let ordinary_points: Vec<ProjPoint> = self
            .points
            .iter()
            .zip(&counts)
            .filter(|(_, &c)| c >= threshold)
            .map(|(p, _)| p.clone())
            .collect();
        let ordinary_lines: Vec<ProjLine> = ids
            .iter()
            .filter(|(_, &id)| pair_count[id as usize] == 1)
            .map(|(l, _)| l.clone())
            .collect();
        let spanned: BTreeSet<ProjLine> = ids.into_keys().collect();
        Ok(IncidenceReport {
            points: self.points.clone(),
            counts,
            spanned,
            t,
            threshold,
            ordinary_points,
            ordinary_lines,
        })
    }

    /// The Dirac bound check `t(X) >= ceil(n/2)`, with every point attaining
    /// the threshold as witness.
    pub fn verify_dirac(&self) -> Result<(bool, Vec<ProjPoint>)> {
        let report = self.incidence_report()?;
        Ok((report.t >= report.threshold, report.ordinary_points))
    }
}

/// Per-point incidence counts and classifications for one configuration.
#[derive(Debug, Clone)]
pub struct IncidenceReport {
    points: Vec<ProjPoint>,
    counts: Vec<usize>,
    /// The spanned-line set, canonically ordered.
    pub spanned: BTreeSet<ProjLine>,
    /// Maximum per-point count.
    pub t: usize,
    /// `ceil(n / 2)`.
    pub threshold: usize,
    /// Points with count at least the threshold, in configuration order.
    pub ordinary_points: Vec<ProjPoint>,
    /// Spanned lines through exactly two configuration points.
    pub ordinary_lines: Vec<ProjLine>,
}

impl IncidenceReport {
    pub fn n(&self) -> usize {
        self.points.len()
    }

    /// `(point, spanned-line count)` pairs in configuration order.
    pub fn counts(&self) -> impl Iterator<Item = (&ProjPoint, usize)> {
        self.points.iter().zip(self.counts.iter().copied())
    }

    pub fn count_of(&self, p: &ProjPoint) -> Option<usize> {
        self.points.iter().position(|q| q == p).map(|i| self.counts[i])
    }

    /// The per-point counts as a sorted multiset.
    pub fn count_multiset(&self) -> Vec<usize> {
        let mut m = self.counts.clone();
        m.sort_unstable();
        m
    }

    pub fn dirac_holds(&self) -> bool {
        self.t >= self.threshold
    }
}
