//! Structural invariants on random small posets.

mod common;

use proptest::prelude::*;

use common::{to_mask, OZ};
use zdt::continuity::{Beneath, WayBelow};
use zdt::topology::ZScott;
use zdt::{ElemSet, FinitePoset, SubsetSystem};

/// Random order on `n ≤ 6` points: pick any set of pairs `i<j` with `i`
/// before `j` in index order, then close transitively.
fn poset() -> impl Strategy<Value = FinitePoset> {
    (1usize..=6).prop_flat_map(|n| {
        let m = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), m).prop_map(move |bits| {
            let labels: Vec<String> = (0..n).map(|i| format!("p{i}")).collect();
            let mut pairs = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        pairs.push((labels[i].clone(), labels[j].clone()));
                    }
                    k += 1;
                }
            }
            FinitePoset::from_order_pairs(&labels, &pairs).unwrap()
        })
    })
}

fn system() -> impl Strategy<Value = SubsetSystem> {
    prop::sample::select(SubsetSystem::ALL.to_vec())
}

fn subset(p: &FinitePoset, bits: u64) -> ElemSet {
    ElemSet::from_bits(p.len(), bits & ((1u64 << p.len()) - 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cut_is_a_closure_onto_lower_sets(p in poset(), a in any::<u64>(), b in any::<u64>()) {
        let (e, f) = (subset(&p, a), subset(&p, b));
        let ce = p.cut(&e);
        prop_assert!(e.is_subset(&ce));
        prop_assert_eq!(p.cut(&ce), ce.clone());
        prop_assert!(p.is_lower(&ce));
        if e.is_subset(&f) {
            prop_assert!(ce.is_subset(&p.cut(&f)));
        }
        let cu = p.cut(&e.union(&f));
        prop_assert!(ce.is_subset(&cu) && p.cut(&f).is_subset(&cu));
    }

    #[test]
    fn closure_and_interior(p in poset(), z in system(), a in any::<u64>()) {
        let zs = ZScott::new(&p, z).unwrap();
        let m = subset(&p, a);
        let c = zs.closure(&m);
        prop_assert!(m.is_subset(&c));
        prop_assert!(zs.is_closed(&c));
        prop_assert_eq!(zs.closure(&c), c.clone());
        prop_assert!(p.down_set(&m).is_subset(&c));
        let i = zs.interior(&m);
        prop_assert!(i.is_subset(&m));
        prop_assert!(zs.is_open(&i));
    }

    #[test]
    fn beneath_sits_inside_the_order(p in poset(), z in system()) {
        let b = Beneath::of(&p, z).unwrap();
        let n = p.len();
        for (x, y) in b.pairs() {
            prop_assert!(p.leq(x, y));
            for x2 in (0..n).filter(|&u| p.leq(u, x)) {
                for y2 in (0..n).filter(|&v| p.leq(y, v)) {
                    prop_assert!(b.beneath(x2, y2));
                }
            }
        }
        if let Some(bot) = p.bottom() {
            prop_assert!((0..n).all(|y| b.beneath(bot, y)));
        }
        for y in 0..n {
            prop_assert!(p.is_lower(b.beneath_set(y)));
        }
    }

    #[test]
    fn way_below_sits_inside_the_order(p in poset(), z in system()) {
        let w = WayBelow::of(&p, z).unwrap();
        let n = p.len();
        for x in 0..n {
            for y in (0..n).filter(|&y| w.below(y, x)) {
                prop_assert!(p.leq(y, x));
                for u in (0..n).filter(|&u| p.leq(u, y)) {
                    prop_assert!(w.below(u, x));
                }
            }
        }
    }

    /// Finite contains every other system and singletons sit in all of
    /// them; so Γ shrinks from singletons to finite.
    #[test]
    fn systems_are_nested(p in poset(), z in system()) {
        let fin = SubsetSystem::Finite.members(&p).unwrap();
        let sing = SubsetSystem::Singletons.members(&p).unwrap();
        let zm = z.members(&p).unwrap();
        prop_assert!(zm.iter().all(|s| fin.contains(s)));
        prop_assert!(sing.iter().all(|s| zm.contains(s)));
        let g_fin = ZScott::new(&p, SubsetSystem::Finite).unwrap().gamma().unwrap();
        let g_z = ZScott::new(&p, z).unwrap().gamma().unwrap();
        let g_sing = ZScott::new(&p, SubsetSystem::Singletons).unwrap().gamma().unwrap();
        prop_assert!(g_fin.iter().all(|a| g_z.contains(a)));
        prop_assert!(g_z.iter().all(|a| g_sing.contains(a)));
    }

    #[test]
    fn closed_sets_agree_with_oracle(p in poset(), z in system()) {
        let zs = ZScott::new(&p, z).unwrap();
        let mut lib: Vec<u64> = zs.gamma().unwrap().iter().map(to_mask).collect();
        lib.sort();
        prop_assert_eq!(lib, OZ::of(&p, z).gamma());
    }
}
