mod common;

use common::RootSystem;
use gimforge::classify::{classify, Family};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random root sets generating a whole finite system: the label must follow
/// from the number of roots of each length.
fn check(family: Family, rank: usize, trials: usize, seed: u64) {
    let rs = RootSystem::new(family, rank);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let doubled = usize::from(matches!(family, Family::BC | Family::A1));
    for _ in 0..trials {
        let n = rank + doubled + rng.gen_range(0..=2);
        let xs = rs.random_generating_set(n, &mut rng);
        let m = rs.gim_of(&xs);
        let report = classify(&m).unwrap_or_else(|e| panic!("{m}: {e}"));
        assert_eq!(Some(report.label), rs.expected_label(&xs), "{m}");
        assert!(report.complete);
    }
}

#[test]
fn simply_laced() {
    check(Family::A, 4, 20, 1);
    check(Family::D, 4, 20, 2);
    check(Family::D, 5, 10, 3);
    check(Family::E6, 6, 8, 4);
}

#[test]
fn exceptional_promotions() {
    check(Family::E7, 7, 4, 5);
    check(Family::E8, 8, 3, 6);
}

#[test]
fn two_lengths() {
    check(Family::B, 3, 20, 7);
    check(Family::C, 3, 20, 8);
    check(Family::C, 4, 10, 9);
    check(Family::F4, 4, 15, 10);
    check(Family::G2, 2, 20, 11);
}

#[test]
fn three_lengths() {
    check(Family::A1, 1, 20, 12);
    check(Family::BC, 2, 20, 13);
    check(Family::BC, 3, 15, 14);
}
