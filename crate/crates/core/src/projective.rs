//! Exact homogeneous-coordinate primitives over unbounded integers.
//!
//! Points and lines are kept in a canonical form (coprime coordinates, first
//! nonzero coordinate positive), so projective equality is plain `==` and
//! sets deduplicate for free. Every predicate is exact: no floating point
//! anywhere, and results are invariant under scaling any input by a nonzero
//! integer.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

fn canonical_triple(mut x: BigInt, mut y: BigInt, mut z: BigInt) -> Result<(BigInt, BigInt, BigInt)> {
    if x.is_zero() && y.is_zero() && z.is_zero() {
        return Err(Error::InvalidHomogeneous);
    }
    let g = x.gcd(&y).gcd(&z);
    x /= &g;
    y /= &g;
    z /= &g;
    let lead_negative = if !x.is_zero() {
        x.is_negative()
    } else if !y.is_zero() {
        y.is_negative()
    } else {
        z.is_negative()
    };
    if lead_negative {
        x = -x;
        y = -y;
        z = -z;
    }
    Ok((x, y, z))
}

/// A point of the projective plane over the rationals, stored as a canonical
/// integer triple `(x : y : z)`. `z = 0` encodes a point at infinity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint {
    x: BigInt,
    y: BigInt,
    z: BigInt,
}

/// A line `{(x, y, z) : ax + by + cz = 0}`, stored canonically like a point.
/// The line at infinity is exactly `[0 : 0 : 1]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjLine {
    a: BigInt,
    b: BigInt,
    c: BigInt,
}

impl ProjPoint {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>) -> Result<Self> {
        let (x, y, z) = canonical_triple(x.into(), y.into(), z.into())?;
        Ok(ProjPoint { x, y, z })
    }

    /// The finite point `(x, y)`.
    pub fn finite(x: impl Into<BigInt>, y: impl Into<BigInt>) -> Self {
        ProjPoint::new(x, y, 1).expect("z = 1 is never the zero triple")
    }

    /// The point at infinity in direction `(dx, dy)`.
    pub fn at_infinity(dx: impl Into<BigInt>, dy: impl Into<BigInt>) -> Result<Self> {
        ProjPoint::new(dx, dy, 0)
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn z(&self) -> &BigInt {
        &self.z
    }

    pub fn is_infinite(&self) -> bool {
        self.z.is_zero()
    }

    /// The line through two distinct points.
    pub fn join(&self, other: &ProjPoint) -> Result<ProjLine> {
        if self == other {
            return Err(Error::DegenerateJoin);
        }
        let (a, b, c) = cross(
            (&self.x, &self.y, &self.z),
            (&other.x, &other.y, &other.z),
        );
        ProjLine::new(a, b, c)
    }

    /// Exact incidence test `ax + by + cz = 0`.
    pub fn on(&self, line: &ProjLine) -> bool {
        (&line.a * &self.x + &line.b * &self.y + &line.c * &self.z).is_zero()
    }
}

impl ProjLine {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Result<Self> {
        let (a, b, c) = canonical_triple(a.into(), b.into(), c.into())?;
        Ok(ProjLine { a, b, c })
    }

    /// The line at infinity `[0 : 0 : 1]`.
    pub fn at_infinity() -> Self {
        ProjLine::new(0, 0, 1).expect("nonzero triple")
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn c(&self) -> &BigInt {
        &self.c
    }

    /// The intersection point of two distinct lines. Parallel finite lines
    /// meet at a point with `z = 0`.
    pub fn meet(&self, other: &ProjLine) -> Result<ProjPoint> {
        if self == other {
            return Err(Error::DegenerateMeet);
        }
        let (x, y, z) = cross(
            (&self.a, &self.b, &self.c),
            (&other.a, &other.b, &other.c),
        );
        ProjPoint::new(x, y, z)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.x, self.y, self.z)
    }
}

impl fmt::Display for ProjLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.a, self.b, self.c)
    }
}

fn cross(
    p: (&BigInt, &BigInt, &BigInt),
    q: (&BigInt, &BigInt, &BigInt),
) -> (BigInt, BigInt, BigInt) {
    (
        p.1 * q.2 - p.2 * q.1,
        p.2 * q.0 - p.0 * q.2,
        p.0 * q.1 - p.1 * q.0,
    )
}

/// True iff the 3x3 determinant of the three coordinate triples vanishes.
pub fn collinear(p: &ProjPoint, q: &ProjPoint, r: &ProjPoint) -> bool {
    let (a, b, c) = cross((&p.x, &p.y, &p.z), (&q.x, &q.y, &q.z));
    (a * &r.x + b * &r.y + c * &r.z).is_zero()
}

/// An invertible projective transform, stored as a 3x3 integer matrix acting
/// on point coordinates. Lines transform through the adjugate so that
/// incidence is preserved exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjTransform {
    m: [[BigInt; 3]; 3],
}

impl ProjTransform {
    pub fn new(rows: [[impl Into<BigInt>; 3]; 3]) -> Result<Self> {
        let m = rows.map(|row| row.map(Into::into));
        let t = ProjTransform { m };
        if t.determinant().is_zero() {
            return Err(Error::SingularTransform);
        }
        Ok(t)
    }

    pub fn identity() -> Self {
        ProjTransform::new([[1, 0, 0], [0, 1, 0], [0, 0, 1]]).expect("identity is invertible")
    }

    pub fn determinant(&self) -> BigInt {
        let m = &self.m;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    fn adjugate(&self) -> [[BigInt; 3]; 3] {
        let m = &self.m;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| -> BigInt {
            &m[r0][c0] * &m[r1][c1] - &m[r0][c1] * &m[r1][c0]
        };
        [
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ]
    }

    /// The inverse transform, up to projective scale (the adjugate matrix).
    pub fn inverse(&self) -> ProjTransform {
        let t = ProjTransform { m: self.adjugate() };
        debug_assert!(!t.determinant().is_zero());
        t
    }

    /// Image of a point, in canonical form.
    pub fn apply(&self, p: &ProjPoint) -> ProjPoint {
        let m = &self.m;
        let row = |i: usize| &m[i][0] * &p.x + &m[i][1] * &p.y + &m[i][2] * &p.z;
        ProjPoint::new(row(0), row(1), row(2)).expect("invertible transform has trivial kernel")
    }

    /// Image of a line under the point map, via the transposed adjugate.
    pub fn apply_dual(&self, l: &ProjLine) -> ProjLine {
        let adj = self.adjugate();
        let col = |j: usize| &adj[0][j] * &l.a + &adj[1][j] * &l.b + &adj[2][j] * &l.c;
        ProjLine::new(col(0), col(1), col(2)).expect("invertible transform has trivial kernel")
    }
}

/// Compare `p` and `q` along one affine axis (0 = x, 1 = y) by exact
/// cross-multiplication. Both points must be finite.
pub(crate) fn cmp_affine_coord(p: &ProjPoint, q: &ProjPoint, axis: usize) -> Ordering {
    debug_assert!(!p.is_infinite() && !q.is_infinite());
    let (pa, qa) = if axis == 0 { (&p.x, &q.x) } else { (&p.y, &q.y) };
    let d = pa * &q.z - qa * &p.z;
    if (&p.z * &q.z).is_negative() {
        d.cmp(&BigInt::zero()).reverse()
    } else {
        d.cmp(&BigInt::zero())
    }
}

/// True iff `t` lies strictly inside the open segment from `a` to `b`.
///
/// All three points must be finite and collinear, with `a != b`; endpoint
/// hits are `false`. The comparison cross-multiplies the dominant coordinate,
/// so no rational normalization is performed.
pub fn affine_between(a: &ProjPoint, t: &ProjPoint, b: &ProjPoint) -> Result<bool> {
    if a.is_infinite() || t.is_infinite() || b.is_infinite() || a == b {
        return Err(Error::NotOnSegmentLine);
    }
    if !collinear(a, t, b) {
        return Err(Error::NotOnSegmentLine);
    }
    let axis = if cmp_affine_coord(a, b, 0) != Ordering::Equal { 0 } else { 1 };
    let (lo, hi) = if cmp_affine_coord(a, b, axis) == Ordering::Less {
        (a, b)
    } else {
        (b, a)
    };
    Ok(cmp_affine_coord(lo, t, axis) == Ordering::Less
        && cmp_affine_coord(t, hi, axis) == Ordering::Less)
}

/// Which of the two open half-lines of `line` (relative to the finite apex)
/// contains `s`: `+1` or `-1`, stable under coordinate scaling.
///
/// A point at infinity on the line sits on the half-line reached by moving
/// away from the apex in its canonical direction.
pub fn half_line_side(apex: &ProjPoint, line: &ProjLine, s: &ProjPoint) -> Result<i8> {
    if apex.is_infinite() || !apex.on(line) || !s.on(line) || s == apex {
        return Err(Error::InvalidHalfLineQuery);
    }
    if s.is_infinite() {
        // Proxy one canonical direction step away from the apex.
        let proxy = ProjPoint::new(
            &apex.x + &s.x * &apex.z,
            &apex.y + &s.y * &apex.z,
            apex.z.clone(),
        )
        .expect("apex is finite");
        return half_line_side(apex, line, &proxy);
    }
    // Sign of the dot product of (s - apex) with the direction (b, -a).
    let dx = &s.x * &apex.z - &apex.x * &s.z;
    let dy = &s.y * &apex.z - &apex.y * &s.z;
    let mut v = &line.b * dx - &line.a * dy;
    if (&s.z * &apex.z).is_negative() {
        v = -v;
    }
    debug_assert!(!v.is_zero(), "distinct points on a line cannot project to zero");
    Ok(if v.is_negative() { -1 } else { 1 })
}

/// Candidate coprime directions in a fixed deterministic order, as `(u, v)`
/// pairs with the canonical sign.
pub(crate) fn direction_candidates() -> impl Iterator<Item = (BigInt, BigInt)> {
    (1i64..).flat_map(|s| {
        let mut out: Vec<(i64, i64)> = Vec::new();
        for u in 0..=s {
            for v in -s..=s {
                if u.max(v.abs()) != s {
                    continue;
                }
                if u.gcd(&v) != 1 {
                    continue;
                }
                // canonical sign: first nonzero positive
                if u > 0 || (u == 0 && v > 0) {
                    out.push((u, v));
                }
            }
        }
        out.sort();
        out.into_iter().map(|(u, v)| (BigInt::from(u), BigInt::from(v)))
    })
}

/// A projective transform sending every listed point off the line at
/// infinity, together with the transformed points.
///
/// Searches lines with infinite point not in the input, at integer offsets
/// `c = 1, 2, ...`, until one avoids every point, then maps that line to the
/// line at infinity. Returns the identity when all points are already finite.
pub fn euclideanize(points: &[ProjPoint]) -> (ProjTransform, Vec<ProjPoint>) {
    if points.iter().all(|p| !p.is_infinite()) {
        return (ProjTransform::identity(), points.to_vec());
    }
    for (u, v) in direction_candidates() {
        let dir = ProjPoint::new(u.clone(), v.clone(), 0).expect("candidate direction is nonzero");
        if points.contains(&dir) {
            continue;
        }
        // Lines with normal (v, -u) all pass through (u : v : 0).
        for c in 1i64.. {
            let line = ProjLine::new(v.clone(), -u.clone(), BigInt::from(-c))
                .expect("normal is nonzero");
            if points.iter().any(|p| p.on(&line)) {
                continue;
            }
            let t = transform_to_infinity(&line);
            let image: Vec<ProjPoint> = points.iter().map(|p| t.apply(p)).collect();
            debug_assert!(image.iter().all(|p| !p.is_infinite()));
            return (t, image);
        }
        unreachable!("finitely many points exclude finitely many offsets");
    }
    unreachable!("finitely many points exclude finitely many directions");
}

/// An integer transform whose dual maps `line` to the line at infinity.
fn transform_to_infinity(line: &ProjLine) -> ProjTransform {
    let l = [line.a.clone(), line.b.clone(), line.c.clone()];
    let lead = l.iter().position(|v| !v.is_zero()).expect("canonical line is nonzero");
    let mut rows: Vec<[BigInt; 3]> = Vec::new();
    for i in 0..3 {
        if i != lead {
            let mut e = [BigInt::zero(), BigInt::zero(), BigInt::zero()];
            e[i] = BigInt::from(1);
            rows.push(e);
        }
    }
    rows.push(l);
    let t = ProjTransform {
        m: [rows[0].clone(), rows[1].clone(), rows[2].clone()],
    };
    debug_assert!(!t.determinant().is_zero());
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64, z: i64) -> ProjPoint {
        ProjPoint::new(x, y, z).unwrap()
    }

    fn ln(a: i64, b: i64, c: i64) -> ProjLine {
        ProjLine::new(a, b, c).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(pt(2, 4, 6), pt(1, 2, 3));
        assert_eq!(pt(-1, 0, 2), pt(1, 0, -2));
        assert_eq!(pt(0, -5, 0), pt(0, 1, 0));
        assert_eq!(ProjPoint::new(0, 0, 0), Err(Error::InvalidHomogeneous));
    }

    #[test]
    fn canonicalize_is_idempotent() {
        let p = pt(-6, 9, -12);
        assert_eq!(ProjPoint::new(p.x().clone(), p.y().clone(), p.z().clone()).unwrap(), p);
    }

    #[test]
    fn join_examples() {
        // y = 0 through two finite points on the x-axis
        assert_eq!(pt(0, 0, 1).join(&pt(1, 0, 1)).unwrap(), ln(0, 1, 0));
        // two infinite points span the line at infinity
        assert_eq!(pt(1, 0, 0).join(&pt(0, 1, 0)).unwrap(), ProjLine::at_infinity());
        // generic case, verified by incidence of both inputs
        let p = pt(0, 3, 1);
        let q = pt(6, -3, 1);
        let l = p.join(&q).unwrap();
        assert!(p.on(&l) && q.on(&l));
        assert_eq!(l, ln(1, 1, -3));
        assert_eq!(p.join(&p), Err(Error::DegenerateJoin));
        assert_eq!(q.join(&p).unwrap(), l);
    }

    #[test]
    fn meet_examples() {
        // y = 0 meets x = 0 at the origin
        assert_eq!(ln(0, 1, 0).meet(&ln(1, 0, 0)).unwrap(), pt(0, 0, 1));
        // parallel lines meet at infinity
        assert_eq!(ln(0, 1, 0).meet(&ln(0, 1, -1)).unwrap(), pt(1, 0, 0));
        let l = ln(0, 1, 0);
        assert_eq!(l.meet(&l), Err(Error::DegenerateMeet));
    }

    #[test]
    fn incidence_examples() {
        assert!(pt(1, 2, 1).on(&ln(0, 1, -2)));
        assert!(pt(1, 0, 0).on(&ProjLine::at_infinity()));
        assert!(!pt(1, 1, 1).on(&ln(1, 0, 0)));
    }

    #[test]
    fn collinear_examples() {
        assert!(collinear(&pt(0, 0, 1), &pt(1, 0, 1), &pt(2, 0, 1)));
        assert!(!collinear(&pt(0, 0, 1), &pt(1, 0, 1), &pt(0, 1, 1)));
        // a finite pair with the matching direction at infinity is collinear
        assert!(collinear(&pt(0, 0, 1), &pt(1, 1, 1), &pt(1, 1, 0)));
        assert!(!collinear(&pt(0, 0, 1), &pt(1, 1, 1), &pt(1, 0, 0)));
    }

    #[test]
    fn transform_identity_and_scaling() {
        let p = pt(3, -5, 7);
        assert_eq!(ProjTransform::identity().apply(&p), p);
        let scale = ProjTransform::new([[2, 0, 0], [0, 2, 0], [0, 0, 2]]).unwrap();
        assert_eq!(scale.apply(&p), p);
        assert_eq!(
            ProjTransform::new([[1, 2, 3], [2, 4, 6], [0, 0, 1]]),
            Err(Error::SingularTransform)
        );
    }

    #[test]
    fn transform_preserves_incidence_and_collinearity() {
        let shear = ProjTransform::new([[1, 3, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
        let (p, q, r) = (pt(0, 0, 1), pt(2, 1, 1), pt(4, 2, 1));
        assert!(collinear(&p, &q, &r));
        assert!(collinear(&shear.apply(&p), &shear.apply(&q), &shear.apply(&r)));
        let l = p.join(&q).unwrap();
        assert!(shear.apply(&p).on(&shear.apply_dual(&l)));
        assert!(shear.apply(&q).on(&shear.apply_dual(&l)));
    }

    #[test]
    fn inverse_round_trips_points() {
        let t = ProjTransform::new([[2, 1, 0], [-1, 3, 2], [0, 1, 1]]).unwrap();
        let inv = t.inverse();
        for p in [pt(0, 0, 1), pt(5, -7, 3), pt(1, 2, 0)] {
            assert_eq!(inv.apply(&t.apply(&p)), p);
        }
    }

    #[test]
    fn affine_between_examples() {
        let a = pt(0, 0, 1);
        let b = pt(4, 0, 1);
        assert!(affine_between(&a, &pt(2, 0, 1), &b).unwrap());
        assert!(!affine_between(&a, &b, &b).unwrap());
        assert!(!affine_between(&a, &pt(5, 0, 1), &b).unwrap());
        assert!(!affine_between(&a, &a, &b).unwrap());
        assert_eq!(affine_between(&a, &pt(1, 1, 1), &b), Err(Error::NotOnSegmentLine));
        assert_eq!(affine_between(&a, &pt(1, 0, 0), &b), Err(Error::NotOnSegmentLine));
        // vertical segment exercises the y-axis comparison
        assert!(affine_between(&pt(1, -2, 1), &pt(1, 0, 1), &pt(1, 3, 1)).unwrap());
    }

    #[test]
    fn half_line_side_examples() {
        let origin = pt(0, 0, 1);
        let x_axis = ln(0, 1, 0);
        let plus = half_line_side(&origin, &x_axis, &pt(1, 0, 1)).unwrap();
        let minus = half_line_side(&origin, &x_axis, &pt(-1, 0, 1)).unwrap();
        assert_eq!(plus, -minus);
        assert_eq!(
            half_line_side(&origin, &x_axis, &pt(2, 0, 1)).unwrap(),
            half_line_side(&origin, &x_axis, &pt(5, 0, 1)).unwrap()
        );
        // infinite point follows its canonical direction away from the apex
        assert_eq!(half_line_side(&origin, &x_axis, &pt(1, 0, 0)).unwrap(), plus);
        assert_eq!(
            half_line_side(&origin, &x_axis, &origin),
            Err(Error::InvalidHalfLineQuery)
        );
        assert_eq!(
            half_line_side(&origin, &x_axis, &pt(1, 1, 1)),
            Err(Error::InvalidHalfLineQuery)
        );
    }

    #[test]
    fn half_line_side_is_scale_stable() {
        let apex = pt(1, 2, 1);
        let s = pt(3, 2, 1);
        let line = apex.join(&s).unwrap();
        let side = half_line_side(&apex, &line, &s).unwrap();
        // same geometric data with scaled raw coordinates
        let apex2 = ProjPoint::new(-2, -4, -2).unwrap();
        let s2 = ProjPoint::new(9, 6, 3).unwrap();
        assert_eq!(half_line_side(&apex2, &line, &s2).unwrap(), side);
    }

    #[test]
    fn euclideanize_identity_on_finite_input() {
        let pts = [pt(0, 0, 1), pt(1, 0, 1), pt(0, 1, 1)];
        let (t, image) = euclideanize(&pts);
        assert_eq!(t, ProjTransform::identity());
        assert_eq!(image, pts.to_vec());
    }

    #[test]
    fn euclideanize_clears_both_axis_directions() {
        // both (1:0:0) and (0:1:0) present, so neither axis-parallel family works
        let pts = [pt(0, 0, 1), pt(1, 0, 1), pt(0, 1, 1), pt(1, 0, 0), pt(0, 1, 0)];
        let (t, image) = euclideanize(&pts);
        assert!(image.iter().all(|p| !p.is_infinite()));
        // incidence is preserved through the matching dual map
        let l = pts[0].join(&pts[3]).unwrap();
        assert!(image[0].on(&t.apply_dual(&l)));
        assert!(image[3].on(&t.apply_dual(&l)));
    }
}
