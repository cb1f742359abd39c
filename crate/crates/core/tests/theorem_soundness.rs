//! End-to-end soundness of the constructive witness search against the
//! brute-force oracle, over seeded random concurrent configurations.

use triline::{find_ordinary_point, generate, Configuration, ProjTransform};

fn small_transform(seed: u64) -> ProjTransform {
    // seeded LCG over a tiny coefficient range; retry until invertible
    let mut state = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
    let mut next = || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        ((state >> 33) % 11) as i64 - 5
    };
    loop {
        let rows = [
            [next(), next(), next()],
            [next(), next(), next()],
            [next(), next(), next()],
        ];
        if let Ok(t) = ProjTransform::new(rows) {
            return t;
        }
    }
}

fn check(config: &Configuration) {
    let structure = config
        .detect_concurrent_structure()
        .unwrap()
        .expect("generated on three concurrent lines");
    let witness = find_ordinary_point(config, &structure).unwrap();
    let report = config.incidence_report().unwrap();
    assert!(witness.count >= config.threshold());
    assert_eq!(report.count_of(&witness.point), Some(witness.count));
    assert!(report.dirac_holds());
}

#[test]
fn random_concurrent_configurations_have_a_witness() {
    for seed in 0..60u64 {
        let a = 1 + (seed % 5) as usize;
        let b = 1 + (seed / 5 % 5) as usize;
        let c = (seed / 25 % 4) as usize;
        let (a, b, c) = if a + b + c < 3 { (a + 1, b + 1, c) } else { (a, b, c) };
        let include_apex = seed % 2 == 0;
        let config = generate::random_concurrent((a, b, c), include_apex, seed).unwrap();
        check(&config);
    }
}

#[test]
fn witness_survives_projective_distortion() {
    for seed in 0..25u64 {
        let config = generate::random_concurrent((3, 3, 2), seed % 3 == 0, seed).unwrap();
        let distorted = config.transformed(&small_transform(seed));
        // distortion may push points to infinity; the search euclideanizes
        // internally through the structure's affine frame
        check(&distorted);
    }
}

#[test]
fn counterexample_families_sit_below_the_threshold() {
    for k in 2..=6u32 {
        for config in [generate::aikn_fig1(k).unwrap(), generate::aikn_fig2(k).unwrap()] {
            let report = config.incidence_report().unwrap();
            assert_eq!(report.n(), 4 * k as usize + 1);
            assert!(report.t < report.threshold);
        }
    }
}
