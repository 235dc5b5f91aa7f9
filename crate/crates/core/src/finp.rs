//! The poset `Fin P` of finitely generated nonempty upper sets.

use crate::elemset::ElemSet;
use crate::error::{cap_check, Error, Result};
use crate::poset::FinitePoset;

/// Default cap on the base size for [`fin_poset`].
pub const FIN_BASE_CAP: usize = 12;

/// `Fin P`: every nonempty upper set of `P`, ordered by reverse inclusion.
#[derive(Clone, Debug)]
pub struct FinP {
    sets: Vec<ElemSet>,
    poset: FinitePoset,
}

impl FinP {
    /// The members, in canonical set order. Index `i` here is element `i`
    /// of [`FinP::poset`].
    pub fn sets(&self) -> &[ElemSet] {
        &self.sets
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    /// Element index of the upper set `s`.
    pub fn index_of(&self, s: &ElemSet) -> Option<usize> {
        self.sets.binary_search(s).ok()
    }
}

/// Builds `Fin P` with the default base cap.
pub fn fin_poset(p: &FinitePoset) -> Result<FinP> {
    fin_poset_capped(p, FIN_BASE_CAP)
}

pub fn fin_poset_capped(p: &FinitePoset, cap: usize) -> Result<FinP> {
    if p.is_empty() {
        return Err(Error::EmptyInput);
    }
    cap_check("Fin P base", p.len(), cap)?;
    let sets = upper_sets(p)?
        .into_iter()
        .filter(|s| !s.is_empty())
        .collect::<Vec<_>>();
    cap_check("Fin P carrier", sets.len(), crate::poset::CARRIER_CAP)?;
    let labels = sets
        .iter()
        .map(|s| format!("up{}", p.fmt_set(&p.minimal(s))))
        .collect();
    let poset = FinitePoset::from_relation(labels, |i, j| sets[j].is_subset(&sets[i]))?
        .with_name(format!("Fin({})", p.name()));
    Ok(FinP { sets, poset })
}

/// Cap on the number of lower or upper sets any routine will materialize.
pub const DOWNSET_CAP: usize = 1 << 20;

/// All lower sets of `p` in canonical order, including `∅` and the carrier.
pub fn lower_sets(p: &FinitePoset) -> Result<Vec<ElemSet>> {
    // Walk a linear extension; an element may join once everything strictly
    // below it has joined.
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&i| (p.down_of(i).len(), i));
    fn go(
        p: &FinitePoset,
        order: &[usize],
        k: usize,
        cur: &mut ElemSet,
        out: &mut Vec<ElemSet>,
    ) -> Result<()> {
        if k == order.len() {
            cap_check("lower-set enumeration", out.len() + 1, DOWNSET_CAP)?;
            out.push(cur.clone());
            return Ok(());
        }
        let i = order[k];
        go(p, order, k + 1, cur, out)?;
        if p.down_of(i).iter().all(|j| j == i || cur.contains(j)) {
            cur.insert(i);
            go(p, order, k + 1, cur, out)?;
            cur.remove(i);
        }
        Ok(())
    }
    let mut out = Vec::new();
    let mut cur = p.empty_set();
    go(p, &order, 0, &mut cur, &mut out)?;
    out.sort();
    Ok(out)
}

/// All upper sets of `p` in canonical order.
pub fn upper_sets(p: &FinitePoset) -> Result<Vec<ElemSet>> {
    let mut v: Vec<ElemSet> = lower_sets(p)?.into_iter().map(|s| s.complement()).collect();
    v.sort();
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn finp_anti2() {
        let p = fixtures::anti2();
        let f = fin_poset(&p).unwrap();
        assert_eq!(f.sets().len(), 3);
        let all = f.index_of(&p.carrier()).unwrap();
        assert_eq!(f.poset().bottom(), Some(all));
    }

    #[test]
    fn finp_chain3_is_chain() {
        let p = fixtures::chain3();
        let f = fin_poset(&p).unwrap();
        assert_eq!(f.sets().len(), 3);
        assert!(f.poset().is_chain(&f.poset().carrier()));
        assert_eq!(f.poset().bottom(), f.index_of(&p.carrier()));
    }

    #[test]
    fn finp_one_and_cap() {
        assert_eq!(fin_poset(&fixtures::one()).unwrap().sets().len(), 1);
        let big = fixtures::antichain(13);
        assert!(matches!(
            fin_poset(&big),
            Err(Error::SizeCapExceeded { .. })
        ));
    }

    #[test]
    fn lower_sets_counts() {
        assert_eq!(lower_sets(&fixtures::chain3()).unwrap().len(), 4);
        assert_eq!(lower_sets(&fixtures::anti2()).unwrap().len(), 4);
        assert_eq!(lower_sets(&fixtures::diamond()).unwrap().len(), 6);
        assert_eq!(lower_sets(&fixtures::vee().dual()).unwrap().len(), 5);
    }
}
