//! Canonically ordered families of element sets.

use crate::elemset::ElemSet;
use crate::error::Result;
use crate::poset::FinitePoset;

/// A duplicate-free family of subsets of one carrier, sorted in canonical
/// set order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SetFamily {
    universe: usize,
    sets: Vec<ElemSet>,
}

impl SetFamily {
    pub fn new<I: IntoIterator<Item = ElemSet>>(universe: usize, sets: I) -> Self {
        let mut sets: Vec<ElemSet> = sets.into_iter().collect();
        debug_assert!(sets.iter().all(|s| s.universe() == universe));
        sets.sort();
        sets.dedup();
        SetFamily { universe, sets }
    }

    pub fn empty(universe: usize) -> Self {
        SetFamily {
            universe,
            sets: Vec::new(),
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn sets(&self) -> &[ElemSet] {
        &self.sets
    }

    pub fn into_sets(self) -> Vec<ElemSet> {
        self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn contains(&self, s: &ElemSet) -> bool {
        self.sets.binary_search(s).is_ok()
    }

    /// Position of `s` in canonical order.
    pub fn index_of(&self, s: &ElemSet) -> Option<usize> {
        self.sets.binary_search(s).ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ElemSet> {
        self.sets.iter()
    }

    /// Complements of every member.
    pub fn complements(&self) -> SetFamily {
        SetFamily::new(self.universe, self.sets.iter().map(|s| s.complement()))
    }

    /// Pairwise closure under `op`, to a fixpoint.
    pub fn closed_under(&self, op: impl Fn(&ElemSet, &ElemSet) -> ElemSet) -> SetFamily {
        let mut all: std::collections::BTreeSet<ElemSet> = self.sets.iter().cloned().collect();
        let mut frontier: Vec<ElemSet> = self.sets.clone();
        while let Some(x) = frontier.pop() {
            let existing: Vec<ElemSet> = all.iter().cloned().collect();
            for y in &existing {
                let z = op(&x, y);
                if all.insert(z.clone()) {
                    frontier.push(z);
                }
            }
        }
        SetFamily {
            universe: self.universe,
            sets: all.into_iter().collect(),
        }
    }

    pub fn is_intersection_closed(&self) -> bool {
        self.sets
            .iter()
            .all(|a| self.sets.iter().all(|b| self.contains(&a.intersection(b))))
    }

    pub fn is_union_closed(&self) -> bool {
        self.sets
            .iter()
            .all(|a| self.sets.iter().all(|b| self.contains(&a.union(b))))
    }

    /// The least member containing `m`, if the family has one.
    pub fn least_containing(&self, m: &ElemSet) -> Option<&ElemSet> {
        let mut acc: Option<ElemSet> = None;
        for s in self.sets.iter().filter(|s| m.is_subset(s)) {
            acc = Some(match acc {
                None => s.clone(),
                Some(a) => a.intersection(s),
            });
        }
        acc.and_then(|a| self.sets.get(self.index_of(&a)?))
    }

    /// The members ordered by inclusion, labelled by their rendering in `base`.
    pub fn inclusion_poset(&self, base: &FinitePoset) -> Result<FinitePoset> {
        let labels = self.sets.iter().map(|s| base.fmt_set(s)).collect();
        FinitePoset::inclusion_order(labels, &self.sets)
    }

    /// One rendered set per line.
    pub fn render(&self, base: &FinitePoset) -> String {
        let mut out = String::new();
        for s in &self.sets {
            out.push_str(&base.fmt_set(s));
            out.push('\n');
        }
        out
    }
}

impl<'a> IntoIterator for &'a SetFamily {
    type Item = &'a ElemSet;
    type IntoIter = std::slice::Iter<'a, ElemSet>;

    fn into_iter(self) -> Self::IntoIter {
        self.sets.iter()
    }
}
