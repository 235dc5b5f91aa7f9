//! The local characterisation of weakly meet posets breaks for the finite
//! and connected systems once a subset has no upper bound. These tests pin
//! the smallest instances and the failure counts, with the hypotheses and
//! conclusion re-evaluated by the oracle.

mod common;

use common::*;
use zdt::claims::{check_claim, run_claim};
use zdt::enumerate::{enumerate_posets, EnumMode};
use zdt::io::parse_poset;
use zdt::{fixtures, SubsetSystem};

use SubsetSystem::*;

#[test]
fn three_point_antichain_under_finite() {
    let p = fixtures::antichain(3);
    let oz = OZ::of(&p, Finite);
    assert!(oz.lower_hereditary());
    assert!(oz.locally_weakly_meet());
    assert!(!oz.weakly_meet());
    // {e1,e2} has no upper bound, so its cut is everything, and e3 lies in
    // it while being incomparable to both.
    let d = bit(0) | bit(1);
    assert_eq!(oz.p.ub(d), 0);
    assert_eq!(oz.p.cut(d), oz.p.full());
    assert!(check_claim("thm-local-wmc", &p, Finite)
        .unwrap()
        .outcome()
        .fails());
    for z in [Singletons, Chains, Directed] {
        assert!(!check_claim("thm-local-wmc", &p, z)
            .unwrap()
            .outcome()
            .fails());
    }
}

#[test]
fn connected_needs_a_comparable_pair() {
    let p = parse_poset("poset P\nelements a b c\norder c<b\nend\n").unwrap();
    for id in ["prop-up-cont", "thm-down-equiv"] {
        assert!(
            check_claim(id, &p, Finite).unwrap().outcome().fails(),
            "{id}"
        );
    }
    let sizes: Vec<usize> = (1..=4).collect();
    let r = run_claim("thm-local-wmc", &sizes, EnumMode::UpToIso, &[Connected], 1).unwrap();
    let fails: Vec<usize> = r.iter().map(|r| r.fails).collect();
    assert_eq!(fails, [0, 0, 0, 3]);
}

/// Failures per size for the three affected claims, up to iso.
#[test]
fn failure_counts() {
    let table: &[(&str, SubsetSystem, [usize; 5])] = &[
        ("thm-local-wmc", Finite, [0, 0, 2, 8, 29]),
        ("thm-local-wmc", Connected, [0, 0, 0, 3, 24]),
        ("prop-up-cont", Finite, [0, 0, 1, 4, 14]),
        ("prop-up-cont", Connected, [0, 0, 0, 2, 12]),
        ("thm-down-equiv", Finite, [0, 0, 1, 4, 14]),
        ("thm-down-equiv", Connected, [0, 0, 0, 2, 12]),
    ];
    let sizes: Vec<usize> = (1..=5).collect();
    for &(id, z, want) in table {
        let got: Vec<usize> = run_claim(id, &sizes, EnumMode::UpToIso, &[z], 4)
            .unwrap()
            .iter()
            .map(|r| r.fails)
            .collect();
        assert_eq!(got, want, "{id} {z}");
    }
    for z in [Singletons, Chains, Directed] {
        for id in ["thm-local-wmc", "prop-up-cont", "thm-down-equiv"] {
            let r = run_claim(id, &sizes, EnumMode::UpToIso, &[z], 4).unwrap();
            assert!(r.iter().all(|r| r.fails == 0), "{id} {z}");
        }
    }
}

#[test]
fn oracle_reproduces_local_counts() {
    for (z, want) in [(Finite, [0, 0, 2, 8, 29]), (Connected, [0, 0, 0, 3, 24])] {
        let got: Vec<usize> = (1..=5)
            .map(|n| {
                enumerate_posets(n, EnumMode::UpToIso)
                    .unwrap()
                    .iter()
                    .map(|p| OZ::of(p, z))
                    .filter(|oz| {
                        oz.lower_hereditary() && oz.weakly_meet() != oz.locally_weakly_meet()
                    })
                    .count()
            })
            .collect();
        assert_eq!(got, want, "{z}");
    }
}
