//! `Γ^Z(P)` as an inclusion-ordered complete lattice, and its Z-compact
//! part `δ(P) = k_Z(Γ^Z(P))`.

use crate::continuity::Beneath;
use crate::elemset::ElemSet;
use crate::error::{cap_check, Error, Result};
use crate::family::SetFamily;
use crate::map::MonotoneMap;
use crate::poset::FinitePoset;
use crate::report::{Outcome, Witness};
use crate::system::SubsetSystem;
use crate::topology::ZScott;

/// Largest `Γ^Z(P)` turned into a poset.
pub const LATTICE_CAP: usize = 1024;

#[derive(Clone, Debug)]
pub struct GammaLattice {
    zs: ZScott,
    elements: SetFamily,
    poset: FinitePoset,
}

impl GammaLattice {
    pub fn new(p: &FinitePoset, z: SubsetSystem) -> Result<Self> {
        let zs = ZScott::new(p, z)?;
        let elements = zs.gamma()?;
        cap_check("gamma lattice", elements.len(), LATTICE_CAP)?;
        let labels = elements.iter().map(|s| p.fmt_set(s)).collect();
        let poset = FinitePoset::inclusion_order(labels, elements.sets())?
            .with_name(format!("Gamma({})", p.name()));
        Ok(GammaLattice {
            zs,
            elements,
            poset,
        })
    }

    pub fn base(&self) -> &FinitePoset {
        self.zs.poset()
    }

    pub fn system(&self) -> SubsetSystem {
        self.zs.system()
    }

    pub fn zscott(&self) -> &ZScott {
        &self.zs
    }

    pub fn elements(&self) -> &SetFamily {
        &self.elements
    }

    /// The lattice itself, one element per closed set.
    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn set(&self, i: usize) -> &ElemSet {
        &self.elements.sets()[i]
    }

    pub fn index_of(&self, s: &ElemSet) -> Option<usize> {
        self.elements.index_of(s)
    }

    /// Index of the least closed set containing `s ⊆ P`.
    pub fn closure_index(&self, s: &ElemSet) -> usize {
        self.index_of(&self.zs.closure(s))
            .expect("closures are members")
    }

    /// Lattice sup of the members indexed by `members`.
    pub fn sup(&self, members: &ElemSet) -> usize {
        let mut u = self.base().empty_set();
        for i in members {
            u.union_with(self.set(i));
        }
        self.closure_index(&u)
    }

    /// Index of `↓p`.
    pub fn principal(&self, p: usize) -> usize {
        self.index_of(self.base().down_of(p))
            .expect("principal ideals are closed")
    }

    /// Closure-system laws and agreement of [`GammaLattice::sup`] with the
    /// order-theoretic join on every pair.
    pub fn check_structure(&self) -> Outcome {
        let base = self.base();
        let fail = |what: &str| {
            Outcome::Fails(
                Witness::new(base)
                    .note("system", self.system().name())
                    .note("violation", what),
            )
        };
        if !self.elements.contains(&base.empty_set()) || !self.elements.contains(&base.carrier()) {
            return fail("empty set or carrier missing");
        }
        if !self.elements.is_intersection_closed() {
            return fail("not closed under intersection");
        }
        for i in 0..self.len() {
            for j in i..self.len() {
                let pair = ElemSet::from_indices(self.len(), [i, j]);
                if self.poset.sup_of(&pair) != Some(self.sup(&pair)) {
                    return fail(&format!(
                        "join of {} and {}",
                        base.fmt_set(self.set(i)),
                        base.fmt_set(self.set(j))
                    ));
                }
            }
        }
        Outcome::Holds
    }
}

/// The compact closed sets, ordered by inclusion.
#[derive(Clone, Debug)]
pub struct DeltaObject {
    lattice: GammaLattice,
    members: Vec<usize>,
    elements: SetFamily,
    poset: FinitePoset,
}

impl DeltaObject {
    pub fn new(p: &FinitePoset, z: SubsetSystem) -> Result<Self> {
        Self::from_lattice(GammaLattice::new(p, z)?)
    }

    pub fn from_lattice(lattice: GammaLattice) -> Result<Self> {
        let compacts = Beneath::of(lattice.poset(), lattice.system())?.compacts();
        let members: Vec<usize> = compacts.iter().collect();
        let sets: Vec<ElemSet> = members.iter().map(|&i| lattice.set(i).clone()).collect();
        let labels = members
            .iter()
            .map(|&i| lattice.poset().label(i).to_string())
            .collect();
        let poset = FinitePoset::inclusion_order(labels, &sets)?
            .with_name(format!("delta({})", lattice.base().name()));
        let elements = SetFamily::new(lattice.base().len(), sets);
        Ok(DeltaObject {
            lattice,
            members,
            elements,
            poset,
        })
    }

    pub fn base(&self) -> &FinitePoset {
        self.lattice.base()
    }

    pub fn system(&self) -> SubsetSystem {
        self.lattice.system()
    }

    pub fn lattice(&self) -> &GammaLattice {
        &self.lattice
    }

    pub fn elements(&self) -> &SetFamily {
        &self.elements
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn set(&self, i: usize) -> &ElemSet {
        &self.elements.sets()[i]
    }

    pub fn index_of(&self, s: &ElemSet) -> Option<usize> {
        self.elements.index_of(s)
    }

    /// Position of element `i` inside the ambient lattice.
    pub fn lattice_index(&self, i: usize) -> usize {
        self.members[i]
    }

    /// `η(p) = ↓p`. Fails with [`Error::NotCompact`] if some principal
    /// ideal is not compact.
    pub fn eta(&self) -> Result<MonotoneMap<'_>> {
        let p = self.base();
        let table = (0..p.len())
            .map(|x| {
                self.index_of(p.down_of(x))
                    .ok_or_else(|| Error::NotCompact(format!("↓{}", p.label(x))))
            })
            .collect::<Result<Vec<_>>>()?;
        MonotoneMap::new(p, &self.poset, table)
    }

    /// First member without a supremum in the base.
    pub fn missing_sup(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.base().sup_of(self.set(i)).is_none())
    }

    /// `ξ(A) = sup A`, defined when every member has a supremum.
    pub fn sup_map(&self) -> Option<MonotoneMap<'_>> {
        let p = self.base();
        let table = (0..self.len())
            .map(|i| p.sup_of(self.set(i)))
            .collect::<Option<Vec<_>>>()?;
        MonotoneMap::new(&self.poset, p, table).ok()
    }
}

/// `Γ^Z(f)(A)`: the least closed set of the codomain containing `f(A)`.
pub fn gamma_map<'a>(
    f: &MonotoneMap<'_>,
    lx: &'a GammaLattice,
    ly: &'a GammaLattice,
) -> Result<MonotoneMap<'a>> {
    if f.dom() != lx.base() || f.cod() != ly.base() {
        return Err(Error::InvalidOrder(
            "map does not match the lattices' base posets".into(),
        ));
    }
    let table = (0..lx.len())
        .map(|i| ly.closure_index(&f.image(lx.set(i))))
        .collect();
    MonotoneMap::new(lx.poset(), ly.poset(), table)
}

/// `δ(f)`, the restriction of `Γ^Z(f)` to compact elements. Fails with
/// [`Error::NotCompact`] when some compact set is sent outside `δ(Y)`.
pub fn delta_map<'a>(
    f: &MonotoneMap<'_>,
    dx: &'a DeltaObject,
    dy: &'a DeltaObject,
) -> Result<MonotoneMap<'a>> {
    if f.dom() != dx.base() || f.cod() != dy.base() {
        return Err(Error::InvalidOrder(
            "map does not match the delta objects' base posets".into(),
        ));
    }
    let zy = dy.lattice().zscott();
    let table = (0..dx.len())
        .map(|i| {
            let c = zy.closure(&f.image(dx.set(i)));
            dy.index_of(&c).ok_or_else(|| {
                Error::NotCompact(format!(
                    "{} ↦ {}",
                    dx.base().fmt_set(dx.set(i)),
                    dy.base().fmt_set(&c)
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    MonotoneMap::new(dx.poset(), dy.poset(), table)
}

/// For every subbasic closed family `𝒞` of the lattice `Γ^Z(P)`, the union
/// `⋃𝒞` is closed in `P` and is the lattice sup of `𝒞`.
pub fn union_sup_check(p: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    let lat = GammaLattice::new(p, z)?;
    let outer = ZScott::new(lat.poset(), z)?;
    for c in outer.gamma()?.iter() {
        let mut u = p.empty_set();
        for i in c {
            u.union_with(lat.set(i));
        }
        let sup = lat.set(lat.sup(c));
        if !lat.zscott().is_closed(&u) || *sup != u {
            return Ok(Outcome::Fails(
                Witness::new(p)
                    .note("system", z.name())
                    .note("family", lat.poset().fmt_set(c))
                    .note("union", p.fmt_set(&u))
                    .note("sup", p.fmt_set(sup)),
            ));
        }
    }
    Ok(Outcome::Holds)
}

/// `Γ^Z(P)` is δ_Z-prealgebraic as a poset.
pub fn gamma_prealgebraic(p: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    let lat = GammaLattice::new(p, z)?;
    Ok(match Beneath::of(lat.poset(), z)?.prealgebraicity() {
        Outcome::Fails(w) => {
            let mut out = Witness::new(p).note("system", z.name());
            out.notes.extend(w.notes);
            Outcome::Fails(out)
        }
        o => o,
    })
}
