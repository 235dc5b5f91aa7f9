//! Z-Scott subbasic families, the generated topology, closures, the lower
//! topology, and lower-hereditariness.

use crate::elemset::ElemSet;
use crate::error::Result;
use crate::family::SetFamily;
use crate::finp;
use crate::map::MonotoneMap;
use crate::poset::FinitePoset;
use crate::system::SubsetSystem;

/// The subbasic closed sets `Γ^Z(P)` of one poset, kept implicitly.
///
/// A set is in `Γ^Z(P)` iff it is a lower set and, for every generator
/// `M = max S` with `M ⊆ A`, also `M^δ ⊆ A`. Only generators whose cut
/// escapes `↓M` give a real constraint; they are stored as `rules`.
#[derive(Clone, Debug)]
pub struct ZScott {
    poset: FinitePoset,
    system: SubsetSystem,
    generators: Vec<ElemSet>,
    cuts: Vec<ElemSet>,
    rules: Vec<(ElemSet, ElemSet)>,
}

impl ZScott {
    pub fn new(p: &FinitePoset, z: SubsetSystem) -> Result<Self> {
        let generators = z.generators(p)?;
        let cuts: Vec<ElemSet> = generators.iter().map(|m| p.cut(m)).collect();
        let rules = generators
            .iter()
            .zip(&cuts)
            .filter(|(m, c)| !c.is_subset(&p.down_set(m)))
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Ok(ZScott {
            poset: p.clone(),
            system: z,
            generators,
            cuts,
            rules,
        })
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn system(&self) -> SubsetSystem {
        self.system
    }

    /// `{max S : S ∈ Z(P)}` with their cuts.
    pub fn generators(&self) -> impl Iterator<Item = (&ElemSet, &ElemSet)> {
        self.generators.iter().zip(&self.cuts)
    }

    /// True when `Γ^Z(P)` is exactly the family of lower sets.
    pub fn is_alexandrov(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn is_closed(&self, a: &ElemSet) -> bool {
        self.poset.is_lower(a)
            && self
                .rules
                .iter()
                .all(|(m, c)| !m.is_subset(a) || c.is_subset(a))
    }

    pub fn is_open(&self, u: &ElemSet) -> bool {
        self.is_closed(&u.complement())
    }

    /// `cl_{σ^Z(P)}(M)`: the least subbasic closed set containing `M`.
    pub fn closure(&self, m: &ElemSet) -> ElemSet {
        let mut cur = self.poset.down_set(m);
        loop {
            let mut changed = false;
            for (g, c) in &self.rules {
                if g.is_subset(&cur) && !c.is_subset(&cur) {
                    cur.union_with(c);
                    changed = true;
                }
            }
            if !changed {
                return cur;
            }
        }
    }

    /// `int_{σ^Z(P)}(M)`: the union of subbasic open sets inside `M`.
    pub fn interior(&self, m: &ElemSet) -> ElemSet {
        self.closure(&m.complement()).complement()
    }

    /// `Γ^Z(P)` in canonical order.
    pub fn gamma(&self) -> Result<SetFamily> {
        let lower = finp::lower_sets(&self.poset)?;
        Ok(SetFamily::new(
            self.poset.len(),
            lower.into_iter().filter(|a| self.is_closed(a)),
        ))
    }

    /// `σ^Z(P)` in canonical order.
    pub fn sigma(&self) -> Result<SetFamily> {
        Ok(self.gamma()?.complements())
    }

    /// `Γ_Z(P)`: closed sets of the topology generated by `Γ^Z(P)`.
    pub fn gamma_topology(&self) -> Result<SetFamily> {
        let base = self.gamma()?;
        if self.is_alexandrov() {
            return Ok(base);
        }
        Ok(generate_closed(base))
    }

    pub fn sigma_topology(&self) -> Result<SetFamily> {
        Ok(self.gamma_topology()?.complements())
    }

    /// `cl_{σ_Z(P)}(M)`.
    pub fn closure_topological(&self, m: &ElemSet) -> Result<ElemSet> {
        if self.is_alexandrov() {
            return Ok(self.poset.down_set(m));
        }
        let fam = self.gamma_topology()?;
        Ok(fam
            .least_containing(m)
            .cloned()
            .unwrap_or_else(|| self.poset.carrier()))
    }

    /// `Γ^Z` of a subposet `A`, with members expressed as subsets of `P`.
    pub fn gamma_on(&self, a: &ElemSet) -> Result<SetFamily> {
        let sub = self.poset.restrict(a);
        let zs = ZScott::new(sub.poset(), self.system)?;
        Ok(SetFamily::new(
            self.poset.len(),
            zs.gamma()?.iter().map(|s| sub.lift(s)),
        ))
    }

    /// Whether `Γ^Z(A) = {B ∩ A : B ∈ Γ^Z(P)}` for every `A ∈ Γ^Z(P)`.
    pub fn is_lower_hereditary(&self) -> Result<bool> {
        Ok(self.lower_hereditary_witness()?.is_none())
    }

    /// The first `A ∈ Γ^Z(P)` whose own subbasis differs from the trace.
    pub fn lower_hereditary_witness(&self) -> Result<Option<ElemSet>> {
        let gamma = self.gamma()?;
        for a in gamma.iter() {
            let trace = SetFamily::new(self.poset.len(), gamma.iter().map(|b| b.intersection(a)));
            if self.gamma_on(a)? != trace {
                return Ok(Some(a.clone()));
            }
        }
        Ok(None)
    }
}

/// Closes a family of closed sets under finite unions and arbitrary
/// intersections, adding `∅` and the carrier.
pub fn generate_closed(base: SetFamily) -> SetFamily {
    let n = base.universe();
    let mut fam = SetFamily::new(
        n,
        base.iter()
            .cloned()
            .chain([ElemSet::empty(n), ElemSet::full(n)]),
    );
    loop {
        let next = fam
            .closed_under(|a, b| a.union(b))
            .closed_under(|a, b| a.intersection(b));
        if next == fam {
            return fam;
        }
        fam = next;
    }
}

/// Closed sets of the lower topology, generated by the principal filters.
pub fn lower_topology(p: &FinitePoset) -> SetFamily {
    generate_closed(SetFamily::new(
        p.len(),
        (0..p.len()).map(|i| p.up_of(i).clone()),
    ))
}

pub fn gamma_subbasis(p: &FinitePoset, z: SubsetSystem) -> Result<SetFamily> {
    ZScott::new(p, z)?.gamma()
}

pub fn sigma_subbasis(p: &FinitePoset, z: SubsetSystem) -> Result<SetFamily> {
    ZScott::new(p, z)?.sigma()
}

/// Preimages of subbasic closed sets are subbasic closed.
pub fn is_sigma_z_continuous(f: &MonotoneMap<'_>, z: SubsetSystem) -> Result<bool> {
    let dom = ZScott::new(f.dom(), z)?;
    let cod = ZScott::new(f.cod(), z)?;
    is_sigma_z_continuous_with(f, &dom, &cod)
}

pub fn is_sigma_z_continuous_with(f: &MonotoneMap<'_>, dom: &ZScott, cod: &ZScott) -> Result<bool> {
    Ok(cod.gamma()?.iter().all(|a| dom.is_closed(&f.preimage(a))))
}

/// `f(D^δ) ⊆ f(D)^δ` for every `D ∈ Z(P)`.
pub fn map_preserves_cuts(f: &MonotoneMap<'_>, z: SubsetSystem) -> Result<bool> {
    let (p, q) = (f.dom(), f.cod());
    Ok(z.generators(p)?
        .iter()
        .all(|m| f.image(&p.cut(m)).is_subset(&q.cut(&f.image(m)))))
}

/// `f(cl(A)) ⊆ cl(f(A))` for every `A ⊆ P`.
pub fn map_preserves_closures(f: &MonotoneMap<'_>, dom: &ZScott, cod: &ZScott) -> bool {
    dom.poset().carrier().subsets().all(|a| {
        f.image(&dom.closure(&a))
            .is_subset(&cod.closure(&f.image(&a)))
    })
}

/// The five conditions tied to lower-hereditariness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LhConditions {
    /// `Γ^Z(A)` is the trace family for every `A ∈ Γ^Z(P)`.
    pub lower_hereditary: bool,
    /// Every inclusion `↓x → P` is σ^Z-continuous.
    pub inclusions_continuous: bool,
    /// Relative cuts inside every `↓x` agree with cuts in `P`.
    pub principal_relative_cuts: bool,
    /// Relative cuts inside every `A ∈ Γ^Z(P)` agree with cuts in `P`.
    pub closed_relative_cuts: bool,
    /// `D^u` is filtered for every `D ∈ Z(P)`.
    pub upper_bounds_filtered: bool,
}

impl LhConditions {
    pub fn as_array(&self) -> [bool; 5] {
        [
            self.lower_hereditary,
            self.inclusions_continuous,
            self.principal_relative_cuts,
            self.closed_relative_cuts,
            self.upper_bounds_filtered,
        ]
    }

    /// `(5) ⇒ (1)` and `(1) ⇔ (2) ⇔ (3) ⇔ (4)`.
    pub fn pattern_holds(&self) -> bool {
        let c = self.as_array();
        (!c[4] || c[0]) && c[0] == c[1] && c[1] == c[2] && c[2] == c[3]
    }
}

/// Relative cuts inside `a` agree with cuts in `P` for every `D ∈ Z(a)`.
fn relative_cuts_agree(zs: &ZScott, a: &ElemSet) -> Result<bool> {
    let p = zs.poset();
    let sub = p.restrict(a);
    for m in zs.system().generators(sub.poset())? {
        let d = sub.lift(&m);
        if p.relative_cut(&d, a)? != p.cut(&d) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn lemma_lh_conditions(p: &FinitePoset, z: SubsetSystem) -> Result<LhConditions> {
    let zs = ZScott::new(p, z)?;
    let gamma = zs.gamma()?;
    let lower_hereditary = zs.is_lower_hereditary()?;
    let mut inclusions_continuous = true;
    let mut principal_relative_cuts = true;
    for x in 0..p.len() {
        let dx = p.down_of(x).clone();
        let sub = p.restrict(&dx);
        let local = ZScott::new(sub.poset(), z)?;
        if inclusions_continuous && !gamma.iter().all(|b| local.is_closed(&sub.pull(b))) {
            inclusions_continuous = false;
        }
        if principal_relative_cuts && !relative_cuts_agree(&zs, &dx)? {
            principal_relative_cuts = false;
        }
    }
    let mut closed_relative_cuts = true;
    for a in gamma.iter() {
        if !relative_cuts_agree(&zs, a)? {
            closed_relative_cuts = false;
            break;
        }
    }
    let upper_bounds_filtered = zs
        .generators()
        .all(|(m, _)| p.is_filtered(&p.upper_bounds(m)));
    Ok(LhConditions {
        lower_hereditary,
        inclusions_continuous,
        principal_relative_cuts,
        closed_relative_cuts,
        upper_bounds_filtered,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use SubsetSystem::*;

    fn fam(p: &FinitePoset, sets: &[&[&str]]) -> SetFamily {
        SetFamily::new(p.len(), sets.iter().map(|s| p.set_of(s).unwrap()))
    }

    #[test]
    fn gamma_examples() {
        let vee = fixtures::vee();
        assert_eq!(
            gamma_subbasis(&vee, Finite).unwrap(),
            fam(&vee, &[&[], &["a"], &["b"], &["a", "b", "c"]])
        );
        let one = fixtures::one();
        for z in SubsetSystem::ALL {
            assert_eq!(gamma_subbasis(&one, z).unwrap(), fam(&one, &[&[], &["x"]]));
        }
        let dia = fixtures::diamond();
        assert_eq!(gamma_subbasis(&dia, Directed).unwrap().len(), 6);
    }

    #[test]
    fn sigma_examples() {
        let fan = fixtures::fan3();
        assert_eq!(
            sigma_subbasis(&fan, Finite).unwrap(),
            fam(
                &fan,
                &[
                    &[],
                    &["a", "b", "t"],
                    &["a", "x", "t"],
                    &["b", "x", "t"],
                    &["a", "b", "x", "t"]
                ]
            )
        );
        let vee = fixtures::vee();
        assert_eq!(
            sigma_subbasis(&vee, Finite).unwrap(),
            fam(&vee, &[&[], &["a", "c"], &["b", "c"], &["a", "b", "c"]])
        );
    }

    #[test]
    fn topology_examples() {
        let vee = fixtures::vee();
        let zs = ZScott::new(&vee, Finite).unwrap();
        assert_eq!(
            zs.gamma_topology().unwrap(),
            fam(&vee, &[&[], &["a"], &["b"], &["a", "b"], &["a", "b", "c"]])
        );
        let ab = vee.set_of(&["a", "b"]).unwrap();
        assert_eq!(zs.closure(&ab), vee.carrier());
        assert_eq!(zs.closure_topological(&ab).unwrap(), ab);
        let c3 = fixtures::chain3();
        for z in SubsetSystem::ALL {
            let zs = ZScott::new(&c3, z).unwrap();
            assert_eq!(
                zs.closure(&c3.set_of(&["b"]).unwrap()),
                c3.set_of(&["a", "b"]).unwrap()
            );
            assert!(zs.closure(&c3.empty_set()).is_empty());
        }
    }

    #[test]
    fn interior_examples() {
        let fan = fixtures::fan3();
        let zs = ZScott::new(&fan, Finite).unwrap();
        assert!(zs.interior(&fan.set_of(&["x", "t"]).unwrap()).is_empty());
        let abt = fan.set_of(&["a", "b", "t"]).unwrap();
        assert_eq!(zs.interior(&abt), abt);
        assert_eq!(zs.interior(&fan.carrier()), fan.carrier());
    }

    #[test]
    fn lower_topology_examples() {
        let c3 = fixtures::chain3();
        assert_eq!(
            lower_topology(&c3),
            fam(&c3, &[&[], &["a", "b", "c"], &["b", "c"], &["c"]])
        );
        let anti = fixtures::anti2();
        assert_eq!(
            lower_topology(&anti),
            fam(&anti, &[&[], &["a"], &["b"], &["a", "b"]])
        );
        let vee = fixtures::vee();
        assert_eq!(
            lower_topology(&vee),
            fam(
                &vee,
                &[&[], &["c"], &["a", "c"], &["b", "c"], &["a", "b", "c"]]
            )
        );
    }

    #[test]
    fn continuity_examples() {
        let fan = fixtures::fan3();
        assert!(is_sigma_z_continuous(&MonotoneMap::identity(&fan), Finite).unwrap());
        let twin = fixtures::twin();
        let dia = fixtures::diamond();
        let f = MonotoneMap::from_labels(
            &twin,
            &dia,
            &[("a", "a"), ("b", "b"), ("c", "1"), ("d", "1")],
        )
        .unwrap();
        assert_eq!(
            map_preserves_cuts(&f, Finite).unwrap(),
            is_sigma_z_continuous(&f, Finite).unwrap()
        );
        let k = MonotoneMap::constant(&twin, &dia, 1).unwrap();
        assert!(map_preserves_cuts(&k, Finite).unwrap());
    }

    #[test]
    fn lower_hereditary_examples() {
        assert!(ZScott::new(&fixtures::diamond(), Finite)
            .unwrap()
            .is_lower_hereditary()
            .unwrap());
        for p in fixtures::all_named() {
            assert!(ZScott::new(&p, Directed)
                .unwrap()
                .is_lower_hereditary()
                .unwrap());
        }
    }

    #[test]
    fn lh_conditions_examples() {
        let lad = fixtures::ladder(3, 2);
        let c = lemma_lh_conditions(&lad, Finite).unwrap();
        assert!(c.principal_relative_cuts);
        assert!(!c.upper_bounds_filtered);
        assert!(c.pattern_holds());
        let d = lemma_lh_conditions(&fixtures::diamond(), Finite).unwrap();
        assert_eq!(d.as_array(), [true; 5]);
        let o = lemma_lh_conditions(&fixtures::one(), Chains).unwrap();
        assert_eq!(o.as_array(), [true; 5]);
    }
}
