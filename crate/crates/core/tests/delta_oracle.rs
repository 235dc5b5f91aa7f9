//! δ(P) against the oracle: closed sets ordered by inclusion, then the
//! compact elements of that lattice computed from scratch.

mod common;

use common::*;
use zdt::enumerate::{enumerate_posets, EnumMode};
use zdt::lattice::DeltaObject;
use zdt::monad::is_delta_cpo;
use zdt::SubsetSystem;

#[test]
fn delta_objects_match_oracle() {
    let mut corpus = Vec::new();
    for n in 1..=3 {
        corpus.extend(enumerate_posets(n, EnumMode::Labeled).unwrap());
    }
    corpus.extend(enumerate_posets(4, EnumMode::UpToIso).unwrap());
    for p in &corpus {
        for z in SubsetSystem::ALL {
            let gamma = OZ::of(p, z).gamma();
            let lat = OPoset::from_relation(gamma.len(), |i, j| gamma[i] & !gamma[j] == 0);
            let k = OZ::new(lat, z).compacts();
            let want: Vec<Mask> = members(k, gamma.len())
                .into_iter()
                .map(|i| gamma[i])
                .collect();

            let d = DeltaObject::new(p, z).unwrap();
            let mut got: Vec<Mask> = d.elements().iter().map(to_mask).collect();
            got.sort();
            assert_eq!(got, want, "{z} {p:?}");

            let o = OPoset::from(p);
            let cpo = want.iter().all(|&a| o.sup(a).is_some());
            assert_eq!(is_delta_cpo(p, z).unwrap(), cpo, "{z} {p:?}");
        }
    }
}
