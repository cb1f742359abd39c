//! Property tests for the projective kernel invariants.

use proptest::prelude::*;
use triline::{Configuration, ProjPoint, ProjTransform};

fn triple() -> impl Strategy<Value = (i64, i64, i64)> {
    (-40i64..=40, -40i64..=40, -40i64..=40).prop_filter("nonzero", |&(x, y, z)| {
        x != 0 || y != 0 || z != 0
    })
}

fn finite_point() -> impl Strategy<Value = ProjPoint> {
    (-30i64..=30, -30i64..=30).prop_map(|(x, y)| ProjPoint::finite(x, y))
}

fn transform() -> impl Strategy<Value = ProjTransform> {
    proptest::array::uniform3(proptest::array::uniform3(-5i64..=5))
        .prop_filter_map("invertible", |rows| ProjTransform::new(rows).ok())
}

proptest! {
    #[test]
    fn canonical_form_is_scale_invariant((x, y, z) in triple(), lambda in -7i64..=7) {
        prop_assume!(lambda != 0);
        let p = ProjPoint::new(x, y, z).unwrap();
        let q = ProjPoint::new(lambda * x, lambda * y, lambda * z).unwrap();
        prop_assert_eq!(&p, &q);
        // idempotent: re-canonicalizing the canonical triple changes nothing
        let r = ProjPoint::new(p.x().clone(), p.y().clone(), p.z().clone()).unwrap();
        prop_assert_eq!(p, r);
    }

    #[test]
    fn join_is_incident_and_symmetric(p in finite_point(), q in finite_point()) {
        prop_assume!(p != q);
        let l = p.join(&q).unwrap();
        prop_assert!(p.on(&l));
        prop_assert!(q.on(&l));
        prop_assert_eq!(l, q.join(&p).unwrap());
    }

    #[test]
    fn meet_of_joins_recovers_the_common_point(
        p in finite_point(),
        q in finite_point(),
        r in finite_point(),
    ) {
        prop_assume!(p != q && p != r);
        let l = p.join(&q).unwrap();
        let m = p.join(&r).unwrap();
        prop_assume!(l != m);
        prop_assert_eq!(l.meet(&m).unwrap(), p);
    }

    #[test]
    fn transforms_preserve_incidence(
        t in transform(),
        p in finite_point(),
        q in finite_point(),
    ) {
        prop_assume!(p != q);
        let l = p.join(&q).unwrap();
        let l2 = t.apply_dual(&l);
        prop_assert!(t.apply(&p).on(&l2));
        prop_assert!(t.apply(&q).on(&l2));
        // and the inverse really inverts
        prop_assert_eq!(t.inverse().apply(&t.apply(&p)), p);
    }

    #[test]
    fn euclideanize_preserves_the_count_multiset(
        xs in proptest::collection::btree_set((-15i64..=15, -15i64..=15), 3..9),
        dir in (-3i64..=3, -3i64..=3),
    ) {
        prop_assume!(dir != (0, 0));
        let mut points: Vec<ProjPoint> =
            xs.iter().map(|&(x, y)| ProjPoint::finite(x, y)).collect();
        points.push(ProjPoint::at_infinity(dir.0, dir.1).unwrap());
        let config = Configuration::new(points).unwrap();
        prop_assume!(!config.is_collinear());
        let before = config.incidence_report().unwrap();
        let (_, image) = config.euclideanize();
        prop_assert!(image.points().iter().all(|p| !p.is_infinite()));
        let after = image.incidence_report().unwrap();
        prop_assert_eq!(before.count_multiset(), after.count_multiset());
        prop_assert_eq!(before.spanned.len(), after.spanned.len());
        prop_assert_eq!(before.t, after.t);
    }

    #[test]
    fn spanned_structure_is_projectively_invariant(
        xs in proptest::collection::btree_set((-10i64..=10, -10i64..=10), 3..8),
        t in transform(),
    ) {
        let points: Vec<ProjPoint> =
            xs.iter().map(|&(x, y)| ProjPoint::finite(x, y)).collect();
        let config = Configuration::new(points).unwrap();
        prop_assume!(!config.is_collinear());
        let before = config.incidence_report().unwrap();
        let image = config.transformed(&t);
        let after = image.incidence_report().unwrap();
        prop_assert_eq!(before.spanned.len(), after.spanned.len());
        prop_assert_eq!(before.count_multiset(), after.count_multiset());
        // per-point counts travel with the points
        for (p, c) in before.counts() {
            prop_assert_eq!(after.count_of(&t.apply(p)), Some(c));
        }
    }
}
