//! Finite posets and the basic order-theoretic operators on them.

use std::collections::HashMap;
use std::fmt;

use crate::elemset::ElemSet;
use crate::error::{cap_check, Error, Result};

/// Largest carrier any [`FinitePoset`] may have, including derived posets
/// such as set families ordered by inclusion.
pub const CARRIER_CAP: usize = 4096;

/// A finite partially ordered set.
///
/// The order is stored twice, as principal filters (`up[i] = ↑i`) and as
/// principal ideals (`down[i] = ↓i`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinitePoset {
    name: String,
    labels: Vec<String>,
    up: Vec<ElemSet>,
    down: Vec<ElemSet>,
}

impl FinitePoset {
    /// Builds a poset from labels and asserted `x ≤ y` pairs, closing the
    /// relation reflexively and transitively.
    pub fn from_order_pairs<S: AsRef<str>>(labels: &[S], pairs: &[(S, S)]) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| Error::UnknownLabel(s.to_string()))
        };
        let idx_pairs = pairs
            .iter()
            .map(|(a, b)| Ok((lookup(a.as_ref())?, lookup(b.as_ref())?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_index_pairs(labels, &idx_pairs)
    }

    pub(crate) fn from_index_pairs(labels: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        cap_check("poset carrier", n, CARRIER_CAP)?;
        let mut up: Vec<ElemSet> = (0..n).map(|i| ElemSet::singleton(n, i)).collect();
        for &(a, b) in pairs {
            up[a].insert(b);
        }
        // Warshall-style closure on rows.
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        for i in 0..n {
            for j in up[i].iter() {
                if j != i && up[j].contains(i) {
                    return Err(Error::AntisymmetryViolation(
                        labels[i].clone(),
                        labels[j].clone(),
                    ));
                }
            }
        }
        Ok(Self::from_up_rows(labels, up))
    }

    /// Builds a poset from an explicit relation, checking all three axioms.
    pub fn from_relation<F: Fn(usize, usize) -> bool>(labels: Vec<String>, leq: F) -> Result<Self> {
        let n = labels.len();
        cap_check("poset carrier", n, CARRIER_CAP)?;
        let up: Vec<ElemSet> = (0..n)
            .map(|i| ElemSet::from_indices(n, (0..n).filter(|&j| leq(i, j))))
            .collect();
        for i in 0..n {
            if !up[i].contains(i) {
                return Err(Error::InvalidOrder(format!(
                    "`{}` is not below itself",
                    labels[i]
                )));
            }
            for j in up[i].iter() {
                if j != i && up[j].contains(i) {
                    return Err(Error::AntisymmetryViolation(
                        labels[i].clone(),
                        labels[j].clone(),
                    ));
                }
                if !up[j].is_subset(&up[i]) {
                    return Err(Error::InvalidOrder(format!(
                        "not transitive through `{}` ≤ `{}`",
                        labels[i], labels[j]
                    )));
                }
            }
        }
        Ok(Self::from_up_rows(labels, up))
    }

    /// Orders a list of distinct sets by inclusion.
    pub fn inclusion_order(labels: Vec<String>, sets: &[ElemSet]) -> Result<Self> {
        Self::from_relation(labels, |i, j| sets[i].is_subset(&sets[j]))
    }

    fn from_up_rows(labels: Vec<String>, up: Vec<ElemSet>) -> Self {
        let n = labels.len();
        let mut down: Vec<ElemSet> = (0..n).map(|_| ElemSet::empty(n)).collect();
        for (i, row) in up.iter().enumerate() {
            for j in row.iter() {
                down[j].insert(i);
            }
        }
        FinitePoset {
            name: "P".to_string(),
            labels,
            up,
            down,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// `↑i`.
    pub fn up_of(&self, i: usize) -> &ElemSet {
        &self.up[i]
    }

    /// `↓i`.
    pub fn down_of(&self, i: usize) -> &ElemSet {
        &self.down[i]
    }

    pub fn empty_set(&self) -> ElemSet {
        ElemSet::empty(self.len())
    }

    pub fn carrier(&self) -> ElemSet {
        ElemSet::full(self.len())
    }

    pub fn singleton(&self, i: usize) -> ElemSet {
        ElemSet::singleton(self.len(), i)
    }

    /// Resolves labels into a set.
    pub fn set_of(&self, labels: &[&str]) -> Result<ElemSet> {
        let mut s = self.empty_set();
        for l in labels {
            s.insert(
                self.index_of(l)
                    .ok_or_else(|| Error::UnknownLabel(l.to_string()))?,
            );
        }
        Ok(s)
    }

    /// Renders a set as `{a,b}` with members in index order.
    pub fn fmt_set(&self, s: &ElemSet) -> String {
        let parts: Vec<&str> = s.iter().map(|i| self.label(i)).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn up_set(&self, a: &ElemSet) -> ElemSet {
        let mut s = self.empty_set();
        for i in a {
            s.union_with(&self.up[i]);
        }
        s
    }

    pub fn down_set(&self, a: &ElemSet) -> ElemSet {
        let mut s = self.empty_set();
        for i in a {
            s.union_with(&self.down[i]);
        }
        s
    }

    /// `A^u`; the upper bounds of the empty set are the whole carrier.
    pub fn upper_bounds(&self, a: &ElemSet) -> ElemSet {
        let mut s = self.carrier();
        for i in a {
            s.intersect_with(&self.up[i]);
        }
        s
    }

    /// `A^l`.
    pub fn lower_bounds(&self, a: &ElemSet) -> ElemSet {
        let mut s = self.carrier();
        for i in a {
            s.intersect_with(&self.down[i]);
        }
        s
    }

    /// The cut `E^δ = E^ul`.
    pub fn cut(&self, e: &ElemSet) -> ElemSet {
        self.lower_bounds(&self.upper_bounds(e))
    }

    /// The cut of `E` relative to `A`: `{p ∈ A : p ≤ m for all m ∈ E^u ∩ A}`.
    pub fn relative_cut(&self, e: &ElemSet, a: &ElemSet) -> Result<ElemSet> {
        if !e.is_subset(a) {
            return Err(Error::NotASubset);
        }
        let ub = self.upper_bounds(e).intersection(a);
        Ok(self.lower_bounds(&ub).intersection(a))
    }

    pub fn is_upper(&self, a: &ElemSet) -> bool {
        self.up_set(a) == *a
    }

    pub fn is_lower(&self, a: &ElemSet) -> bool {
        self.down_set(a) == *a
    }

    /// The least element of `s`, if any.
    pub fn least_in(&self, s: &ElemSet) -> Option<usize> {
        s.iter().find(|&i| s.is_subset(&self.up[i]))
    }

    /// The greatest element of `s`, if any.
    pub fn greatest_in(&self, s: &ElemSet) -> Option<usize> {
        s.iter().find(|&i| s.is_subset(&self.down[i]))
    }

    pub fn sup_of(&self, a: &ElemSet) -> Option<usize> {
        self.least_in(&self.upper_bounds(a))
    }

    pub fn inf_of(&self, a: &ElemSet) -> Option<usize> {
        self.greatest_in(&self.lower_bounds(a))
    }

    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        self.sup_of(&ElemSet::from_indices(self.len(), [x, y]))
    }

    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.inf_of(&ElemSet::from_indices(self.len(), [x, y]))
    }

    pub fn bottom(&self) -> Option<usize> {
        self.least_in(&self.carrier())
    }

    pub fn top(&self) -> Option<usize> {
        self.greatest_in(&self.carrier())
    }

    /// Minimal members of `a`.
    pub fn minimal(&self, a: &ElemSet) -> ElemSet {
        ElemSet::from_indices(
            self.len(),
            a.iter()
                .filter(|&i| self.down[i].intersection(a).len() == 1),
        )
    }

    /// Maximal members of `a`.
    pub fn maximal(&self, a: &ElemSet) -> ElemSet {
        ElemSet::from_indices(
            self.len(),
            a.iter().filter(|&i| self.up[i].intersection(a).len() == 1),
        )
    }

    /// `min(↑F)`: the minimal elements of a nonempty `F`.
    pub fn min_of_upset(&self, f: &ElemSet) -> Result<ElemSet> {
        if f.is_empty() {
            return Err(Error::EmptyInput);
        }
        Ok(self.minimal(f))
    }

    pub fn is_antichain(&self, a: &ElemSet) -> bool {
        a.iter().all(|i| self.up[i].intersection(a).len() == 1)
    }

    pub fn is_chain(&self, a: &ElemSet) -> bool {
        let v: Vec<usize> = a.iter().collect();
        v.iter()
            .enumerate()
            .all(|(k, &i)| v[k + 1..].iter().all(|&j| self.comparable(i, j)))
    }

    /// Nonempty, and every pair has a lower bound inside the set.
    pub fn is_filtered(&self, a: &ElemSet) -> bool {
        if a.is_empty() {
            return false;
        }
        let v: Vec<usize> = a.iter().collect();
        v.iter().all(|&i| {
            v.iter()
                .all(|&j| self.down[i].intersection(&self.down[j]).intersects(a))
        })
    }

    /// Nonempty, and every pair has an upper bound inside the set.
    pub fn is_directed(&self, a: &ElemSet) -> bool {
        if a.is_empty() {
            return false;
        }
        let v: Vec<usize> = a.iter().collect();
        v.iter().all(|&i| {
            v.iter()
                .all(|&j| self.up[i].intersection(&self.up[j]).intersects(a))
        })
    }

    /// Nonempty, and connected in the comparability graph restricted to the set.
    pub fn is_connected_set(&self, a: &ElemSet) -> bool {
        let Some(start) = a.first() else { return false };
        let mut seen = self.singleton(start);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = self.empty_set();
            for i in frontier.iter() {
                next.union_with(&self.up[i].union(&self.down[i]));
            }
            next.intersect_with(a);
            frontier = next.difference(&seen);
            seen.union_with(&frontier);
        }
        seen == *a
    }

    /// The order-dual poset, same labels.
    pub fn dual(&self) -> FinitePoset {
        FinitePoset {
            name: format!("{}_dual", self.name),
            labels: self.labels.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// The subposet on `a` with the restricted order.
    pub fn restrict(&self, a: &ElemSet) -> Subposet {
        let embed: Vec<usize> = a.iter().collect();
        let labels = embed.iter().map(|&i| self.labels[i].clone()).collect();
        let m = embed.len();
        let up = embed
            .iter()
            .map(|&i| ElemSet::from_indices(m, (0..m).filter(|&k| self.leq(i, embed[k]))))
            .collect();
        let poset = FinitePoset::from_up_rows(labels, up).with_name(format!("{}|{}", self.name, m));
        Subposet {
            parent_len: self.len(),
            carrier: a.clone(),
            poset,
            embed,
        }
    }

    /// `↓x` as a subposet.
    pub fn principal_down_subposet(&self, x: usize) -> Result<Subposet> {
        if x >= self.len() {
            return Err(Error::UnknownElement(x));
        }
        Ok(self.restrict(&self.down[x].clone()))
    }

    /// Cover pairs `(x, y)` with `x < y` and nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in self.up[x].iter() {
                if y != x && self.up[x].intersection(&self.down[y]).len() == 2 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// All pairs `x < y`.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|x| {
                self.up[x]
                    .iter()
                    .filter(move |&y| y != x)
                    .map(move |y| (x, y))
            })
            .collect()
    }

    /// Applies a relabeling permutation: element `i` of `self` becomes
    /// element `perm[i]` of the result.
    pub fn permuted(&self, perm: &[usize], labels: Vec<String>) -> FinitePoset {
        let n = self.len();
        let mut up = vec![ElemSet::empty(n); n];
        for i in 0..n {
            for j in self.up[i].iter() {
                up[perm[i]].insert(perm[j]);
            }
        }
        FinitePoset::from_up_rows(labels, up).with_name(self.name.clone())
    }
}

impl fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let covers: Vec<String> = self
            .covers()
            .iter()
            .map(|&(a, b)| format!("{}<{}", self.labels[a], self.labels[b]))
            .collect();
        write!(
            f,
            "{}[{}; {}]",
            self.name,
            self.labels.join(" "),
            covers.join(" ")
        )
    }
}

/// A subset of a poset carrying the restricted order.
#[derive(Clone, Debug)]
pub struct Subposet {
    parent_len: usize,
    carrier: ElemSet,
    poset: FinitePoset,
    embed: Vec<usize>,
}

impl Subposet {
    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn carrier(&self) -> &ElemSet {
        &self.carrier
    }

    /// Parent index of a subposet element.
    pub fn embed(&self, i: usize) -> usize {
        self.embed[i]
    }

    pub fn embedding(&self) -> &[usize] {
        &self.embed
    }

    /// Subposet index of a parent element, if it lies in the carrier.
    pub fn local(&self, parent: usize) -> Option<usize> {
        self.embed.binary_search(&parent).ok()
    }

    /// Maps a subposet set into the parent.
    pub fn lift(&self, s: &ElemSet) -> ElemSet {
        ElemSet::from_indices(self.parent_len, s.iter().map(|i| self.embed[i]))
    }

    /// Restricts a parent set to the carrier, in subposet indices.
    pub fn pull(&self, s: &ElemSet) -> ElemSet {
        ElemSet::from_indices(
            self.embed.len(),
            (0..self.embed.len()).filter(|&k| s.contains(self.embed[k])),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn transitive_closure_and_cycles() {
        let p = FinitePoset::from_order_pairs(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert!(p.leq(0, 2));
        let anti = FinitePoset::from_order_pairs::<&str>(&["a", "b"], &[]).unwrap();
        assert!(!anti.comparable(0, 1));
        let cyc = FinitePoset::from_order_pairs(&["a", "b"], &[("a", "b"), ("b", "a")]);
        assert!(matches!(cyc, Err(Error::AntisymmetryViolation(..))));
        let dup = FinitePoset::from_order_pairs::<&str>(&["a", "a"], &[]);
        assert_eq!(dup.unwrap_err(), Error::DuplicateLabel("a".into()));
        let unk = FinitePoset::from_order_pairs(&["a"], &[("a", "z")]);
        assert_eq!(unk.unwrap_err(), Error::UnknownLabel("z".into()));
    }

    #[test]
    fn up_down_and_bounds() {
        let c3 = fixtures::chain3();
        assert_eq!(
            c3.up_set(&c3.set_of(&["b"]).unwrap()),
            c3.set_of(&["b", "c"]).unwrap()
        );
        assert!(c3.up_set(&c3.empty_set()).is_empty());
        let vee = fixtures::vee();
        assert_eq!(vee.down_set(&vee.set_of(&["c"]).unwrap()), vee.carrier());
        assert_eq!(
            vee.upper_bounds(&vee.set_of(&["a", "b"]).unwrap()),
            vee.set_of(&["c"]).unwrap()
        );
        let anti = fixtures::anti2();
        assert!(anti.upper_bounds(&anti.carrier()).is_empty());
        assert_eq!(anti.upper_bounds(&anti.empty_set()), anti.carrier());
    }

    #[test]
    fn cut_examples() {
        let c3 = fixtures::chain3();
        let ab = c3.set_of(&["a", "b"]).unwrap();
        assert_eq!(c3.cut(&ab), ab);
        let anti = fixtures::anti2();
        assert_eq!(anti.cut(&anti.carrier()), anti.carrier());
        let twin = fixtures::twin();
        let ab = twin.set_of(&["a", "b"]).unwrap();
        assert_eq!(twin.cut(&ab), ab);
        // ∅^u = carrier, so cut(∅) is the set of bottoms.
        let dia = fixtures::diamond();
        assert_eq!(dia.cut(&dia.empty_set()), dia.set_of(&["0"]).unwrap());
    }

    #[test]
    fn relative_cut_examples() {
        let c3 = fixtures::chain3();
        let a = c3.set_of(&["a"]).unwrap();
        let ab = c3.set_of(&["a", "b"]).unwrap();
        assert_eq!(c3.relative_cut(&a, &ab).unwrap(), a);
        assert_eq!(c3.relative_cut(&ab, &a), Err(Error::NotASubset));
        for x in 0..3 {
            let s = c3.singleton(x);
            assert_eq!(c3.relative_cut(&s, &s).unwrap(), s);
        }
    }

    #[test]
    fn sups_and_infs() {
        let dia = fixtures::diamond();
        assert_eq!(
            dia.sup_of(&dia.set_of(&["a", "b"]).unwrap()),
            dia.index_of("1")
        );
        let twin = fixtures::twin();
        assert_eq!(twin.sup_of(&twin.set_of(&["a", "b"]).unwrap()), None);
        let lam = fixtures::lambda();
        assert_eq!(lam.sup_of(&lam.empty_set()), lam.index_of("0"));
    }

    #[test]
    fn minimal_elements() {
        let c3 = fixtures::chain3();
        assert_eq!(
            c3.min_of_upset(&c3.set_of(&["a", "b"]).unwrap()).unwrap(),
            c3.set_of(&["a"]).unwrap()
        );
        assert_eq!(c3.min_of_upset(&c3.empty_set()), Err(Error::EmptyInput));
        let anti = fixtures::anti2();
        assert_eq!(anti.min_of_upset(&anti.carrier()).unwrap(), anti.carrier());
        let vee = fixtures::vee();
        assert_eq!(
            vee.min_of_upset(&vee.set_of(&["a", "c"]).unwrap()).unwrap(),
            vee.set_of(&["a"]).unwrap()
        );
    }

    #[test]
    fn principal_down_subposets() {
        let vee = fixtures::vee();
        let sub = vee
            .principal_down_subposet(vee.index_of("c").unwrap())
            .unwrap();
        assert_eq!(sub.poset().len(), 3);
        assert_eq!(sub.poset().covers().len(), 2);
        let c3 = fixtures::chain3();
        let sub = c3.principal_down_subposet(1).unwrap();
        assert_eq!(sub.poset().len(), 2);
        assert!(sub.poset().leq(0, 1));
        let fan = fixtures::fan3();
        let sub = fan
            .principal_down_subposet(fan.index_of("a").unwrap())
            .unwrap();
        assert_eq!(sub.poset().len(), 1);
        assert_eq!(
            c3.principal_down_subposet(7).unwrap_err(),
            Error::UnknownElement(7)
        );
        // order embedding
        let sub = fan
            .principal_down_subposet(fan.index_of("t").unwrap())
            .unwrap();
        for i in 0..sub.poset().len() {
            for j in 0..sub.poset().len() {
                assert_eq!(sub.poset().leq(i, j), fan.leq(sub.embed(i), sub.embed(j)));
            }
        }
    }

    #[test]
    fn dual_and_restrict() {
        let c3 = fixtures::chain3();
        let d = c3.dual();
        assert!(d.leq(2, 1) && d.leq(1, 0));
        assert_eq!(d.dual().up_of(0), c3.up_of(0));
        let dia = fixtures::diamond();
        let r = dia.restrict(&dia.set_of(&["0", "a", "1"]).unwrap());
        assert!(r.poset().is_chain(&r.poset().carrier()));
    }

    #[test]
    fn filtered_sets() {
        let c3 = fixtures::chain3();
        assert!(c3.is_filtered(&c3.set_of(&["b", "c"]).unwrap()));
        assert!(!c3.is_filtered(&c3.empty_set()));
        let lad = fixtures::ladder(3, 2);
        let bottom_chain = lad.set_of(&["n1", "n2", "n3"]).unwrap();
        let ub = lad.upper_bounds(&bottom_chain).difference(&bottom_chain);
        assert_eq!(ub.len(), 4);
        assert!(!lad.is_filtered(&ub));
    }
}
