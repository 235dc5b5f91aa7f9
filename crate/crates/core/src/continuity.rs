//! Z-way-below, Z-beneath, and the continuity properties built on them.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::family::SetFamily;
use crate::finp::{self, FinP};
use crate::poset::FinitePoset;
use crate::report::{Outcome, Witness};
use crate::system::SubsetSystem;
use crate::topology::{self, ZScott};

/// `≪_Z` on one poset. Element pairs are precomputed; set queries are
/// memoized by the up-closures of their arguments.
#[derive(Debug)]
pub struct WayBelow {
    zs: ZScott,
    dd: Vec<ElemSet>,
    memo: Mutex<HashMap<(ElemSet, ElemSet), bool>>,
}

impl WayBelow {
    pub fn new(zs: &ZScott) -> Self {
        let p = zs.poset();
        // y ≪ x iff y ∈ ↓M for every generator M with x ∈ M^δ.
        let mut dd: Vec<ElemSet> = (0..p.len()).map(|_| p.carrier()).collect();
        for (m, cut) in zs.generators() {
            let dm = p.down_set(m);
            for x in cut.iter() {
                dd[x].intersect_with(&dm);
            }
        }
        WayBelow {
            zs: zs.clone(),
            dd,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn of(p: &FinitePoset, z: SubsetSystem) -> Result<Self> {
        Ok(WayBelow::new(&ZScott::new(p, z)?))
    }

    pub fn zscott(&self) -> &ZScott {
        &self.zs
    }

    pub fn poset(&self) -> &FinitePoset {
        self.zs.poset()
    }

    /// `y ≪_Z x`.
    pub fn below(&self, y: usize, x: usize) -> bool {
        self.dd[x].contains(y)
    }

    /// `↟_Z x`.
    pub fn dd_set(&self, x: usize) -> &ElemSet {
        &self.dd[x]
    }

    /// `A ≪_Z B`.
    pub fn sets(&self, a: &ElemSet, b: &ElemSet) -> bool {
        let p = self.poset();
        let key = (p.up_set(a), p.up_set(b));
        if let Some(&v) = self.memo.lock().expect("memo lock").get(&key) {
            return v;
        }
        let (ua, ub) = &key;
        let v = self
            .zs
            .generators()
            .all(|(m, cut)| !cut.intersects(ub) || m.intersects(ua));
        self.memo.lock().expect("memo lock").insert(key, v);
        v
    }

    /// `⇑_Z A = {x : A ≪_Z x}`.
    pub fn uu_set(&self, a: &ElemSet) -> ElemSet {
        let p = self.poset();
        ElemSet::from_indices(
            p.len(),
            (0..p.len()).filter(|&x| self.sets(a, &p.singleton(x))),
        )
    }

    /// `⇟_Z A = {p : a ≪_Z p for some a ∈ A}`.
    pub fn wb_above(&self, a: &ElemSet) -> ElemSet {
        let p = self.poset();
        ElemSet::from_indices(p.len(), (0..p.len()).filter(|&x| self.dd[x].intersects(a)))
    }

    /// `ω_Z(x)`: every nonempty `F` with `F ≪_Z x`.
    pub fn omega(&self, x: usize) -> Result<SetFamily> {
        let p = self.poset();
        if p.len() > 20 {
            return Err(Error::SizeCapExceeded {
                what: "ω_Z subsets",
                size: p.len(),
                cap: 20,
            });
        }
        let sx = p.singleton(x);
        Ok(SetFamily::new(
            p.len(),
            p.carrier()
                .subsets()
                .filter(|f| !f.is_empty() && self.sets(f, &sx)),
        ))
    }

    /// `{↑F : F ∈ ω_Z(x)}`, as upper sets.
    pub fn omega_upsets(&self, x: usize) -> Result<Vec<ElemSet>> {
        let p = self.poset();
        let sx = p.singleton(x);
        Ok(finp::upper_sets(p)?
            .into_iter()
            .filter(|u| !u.is_empty() && self.sets(u, &sx))
            .collect())
    }
}

/// `↟_Z^x y`: way-below computed inside the subposet `↓x`, reported in `P`.
pub fn relative_dd_set(p: &FinitePoset, z: SubsetSystem, x: usize, y: usize) -> Result<ElemSet> {
    if x >= p.len() {
        return Err(Error::UnknownElement(x));
    }
    if y >= p.len() {
        return Err(Error::UnknownElement(y));
    }
    if !p.leq(y, x) {
        return Err(Error::NotBelow {
            x: p.label(x).to_string(),
            y: p.label(y).to_string(),
        });
    }
    let sub = p.principal_down_subposet(x)?;
    let wb = WayBelow::of(sub.poset(), z)?;
    let ly = sub.local(y).expect("y lies below x");
    Ok(sub.lift(wb.dd_set(ly)))
}

fn label_of(p: &FinitePoset, x: usize) -> String {
    p.label(x).to_string()
}

/// `x ∈ (↟_Z x)^δ` for every `x`.
pub fn weak_s_continuity(wb: &WayBelow) -> Outcome {
    let p = wb.poset();
    for x in 0..p.len() {
        if !p.cut(wb.dd_set(x)).contains(x) {
            return Outcome::Fails(
                Witness::new(p)
                    .note("x", label_of(p, x))
                    .note("dd(x)", p.fmt_set(wb.dd_set(x))),
            );
        }
    }
    Outcome::Holds
}

/// Weak s_Z-continuity plus `↟_Z x ∈ I_Z(P)` for every `x`.
pub fn s_continuity(wb: &WayBelow) -> Outcome {
    let weak = weak_s_continuity(wb);
    if !weak.holds() {
        return weak;
    }
    let p = wb.poset();
    let z = wb.zscott().system();
    for x in 0..p.len() {
        if !z.in_iz(p, wb.dd_set(x)) {
            return Outcome::Fails(
                Witness::new(p)
                    .note("x", label_of(p, x))
                    .note("dd(x) not in I_Z", p.fmt_set(wb.dd_set(x))),
            );
        }
    }
    Outcome::Holds
}

/// `↟_Z x ∈ I_Z(P)` for every `x`.
pub fn dd_in_iz(wb: &WayBelow) -> bool {
    let p = wb.poset();
    let z = wb.zscott().system();
    (0..p.len()).all(|x| z.in_iz(p, wb.dd_set(x)))
}

/// The ω_Z-family of `x` as an element set of `Fin P`.
fn omega_family(wb: &WayBelow, fin: &FinP, x: usize) -> ElemSet {
    let sx = wb.poset().singleton(x);
    ElemSet::from_indices(
        fin.sets().len(),
        (0..fin.sets().len()).filter(|&i| wb.sets(&fin.sets()[i], &sx)),
    )
}

/// For every `p`: `{↑F : F ∈ ω_Z(p)} ∈ Z(Fin P)` and its intersection is `↑p`.
pub fn quasicontinuity(wb: &WayBelow) -> Result<Outcome> {
    let p = wb.poset();
    let z = wb.zscott().system();
    let fin = finp::fin_poset(p)?;
    for x in 0..p.len() {
        let fam = omega_family(wb, &fin, x);
        let mut meet = p.carrier();
        for i in fam.iter() {
            meet.intersect_with(&fin.sets()[i]);
        }
        let member = z.contains(fin.poset(), &fam);
        if !member || meet != *p.up_of(x) {
            let rendered: Vec<String> = fam.iter().map(|i| p.fmt_set(&fin.sets()[i])).collect();
            return Ok(Outcome::Fails(
                Witness::new(p)
                    .note("p", label_of(p, x))
                    .note("omega family", format!("[{}]", rendered.join(" ")))
                    .note("in Z(Fin P)", member.to_string())
                    .note("intersection", p.fmt_set(&meet)),
            ));
        }
    }
    Ok(Outcome::Holds)
}

fn meet_check(zs: &ZScott, closure: impl Fn(&ElemSet) -> Result<ElemSet>) -> Result<Outcome> {
    let p = zs.poset();
    for (m, cut) in zs.generators() {
        let dm = p.down_set(m);
        for x in cut.iter() {
            let target = p.down_of(x).intersection(&dm);
            if !closure(&target)?.contains(x) {
                return Ok(Outcome::Fails(
                    Witness::new(p)
                        .note("x", label_of(p, x))
                        .note("D", p.fmt_set(m)),
                ));
            }
        }
    }
    Ok(Outcome::Holds)
}

/// `x ∈ D^δ` forces `x ∈ cl_{σ^Z}(↓x ∩ ↓D)`.
pub fn weakly_meet(zs: &ZScott) -> Outcome {
    meet_check(zs, |s| Ok(zs.closure(s))).expect("subbasic closure is total")
}

/// As [`weakly_meet`], with the closure of the generated topology.
pub fn meet(zs: &ZScott) -> Result<Outcome> {
    if zs.is_alexandrov() {
        return Ok(weakly_meet(zs));
    }
    let top = zs.gamma_topology()?;
    let n = zs.poset().len();
    meet_check(zs, |s| {
        Ok(top
            .least_containing(s)
            .cloned()
            .unwrap_or_else(|| ElemSet::full(n)))
    })
}

/// `↑(↓x ∩ U) ∈ σ^Z(P)` for every `x` and every `U ∈ σ^Z(P)`.
pub fn weakly_meet_via_upsets(zs: &ZScott) -> Result<Outcome> {
    let p = zs.poset();
    let sigma = zs.sigma()?;
    for x in 0..p.len() {
        for u in sigma.iter() {
            let v = p.up_set(&p.down_of(x).intersection(u));
            if !zs.is_open(&v) {
                return Ok(Outcome::Fails(
                    Witness::new(p)
                        .note("x", label_of(p, x))
                        .note("U", p.fmt_set(u)),
                ));
            }
        }
    }
    Ok(Outcome::Holds)
}

/// Every principal ideal `↓x`, as a poset, is weakly meet.
pub fn locally_weakly_meet(p: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    for x in 0..p.len() {
        let sub = p.principal_down_subposet(x)?;
        let local = ZScott::new(sub.poset(), z)?;
        if let Outcome::Fails(w) = weakly_meet(&local) {
            let mut wit = Witness::new(p).note("x", label_of(p, x));
            for (k, v) in w.notes {
                wit = wit.note(format!("inside ↓x: {k}"), v);
            }
            return Ok(Outcome::Fails(wit));
        }
    }
    Ok(Outcome::Holds)
}

/// For all `x ≰ y`: some `U ∈ σ^Z(P)` and lower-topology open `V` with
/// `x ∈ U`, `y ∈ V`, `U ∩ V = ∅`.
pub fn separation(zs: &ZScott) -> Result<Outcome> {
    let p = zs.poset();
    let sigma = zs.sigma()?;
    let lower_open = topology::lower_topology(p).complements();
    for x in 0..p.len() {
        for y in 0..p.len() {
            if p.leq(x, y) {
                continue;
            }
            let found = sigma
                .iter()
                .filter(|u| u.contains(x))
                .any(|u| lower_open.iter().any(|v| v.contains(y) && !v.intersects(u)));
            if !found {
                return Ok(Outcome::Fails(
                    Witness::new(p)
                        .note("x", label_of(p, x))
                        .note("y", label_of(p, y)),
                ));
            }
        }
    }
    Ok(Outcome::Holds)
}

/// `Z`-beneath on one poset, quantified over nonempty subbasic closed sets.
#[derive(Clone, Debug)]
pub struct Beneath {
    zs: ZScott,
    below: Vec<ElemSet>,
}

impl Beneath {
    pub fn new(zs: &ZScott) -> Result<Self> {
        let p = zs.poset();
        let n = p.len();
        let below = if zs.is_alexandrov() {
            // x ⊀ y iff the largest lower set avoiding x is nonempty and
            // its cut still reaches y.
            let avoid: Vec<ElemSet> = (0..n).map(|x| p.up_of(x).complement()).collect();
            let avoid_cut: Vec<Option<ElemSet>> = avoid
                .iter()
                .map(|l| (!l.is_empty()).then(|| p.cut(l)))
                .collect();
            (0..n)
                .map(|y| {
                    ElemSet::from_indices(
                        n,
                        (0..n).filter(|&x| !avoid_cut[x].as_ref().is_some_and(|c| c.contains(y))),
                    )
                })
                .collect()
        } else {
            let mut below: Vec<ElemSet> = (0..n).map(|_| p.carrier()).collect();
            for a in zs.gamma()?.iter().filter(|a| !a.is_empty()) {
                for y in p.cut(a).iter() {
                    below[y].intersect_with(a);
                }
            }
            below
        };
        Ok(Beneath {
            zs: zs.clone(),
            below,
        })
    }

    pub fn of(p: &FinitePoset, z: SubsetSystem) -> Result<Self> {
        Beneath::new(&ZScott::new(p, z)?)
    }

    pub fn poset(&self) -> &FinitePoset {
        self.zs.poset()
    }

    pub fn zscott(&self) -> &ZScott {
        &self.zs
    }

    /// `x ≺_Z y`.
    pub fn beneath(&self, x: usize, y: usize) -> bool {
        self.below[y].contains(x)
    }

    /// `{m : m ≺_Z y}`.
    pub fn beneath_set(&self, y: usize) -> &ElemSet {
        &self.below[y]
    }

    /// `k_Z(P)`.
    pub fn compacts(&self) -> ElemSet {
        let n = self.poset().len();
        ElemSet::from_indices(n, (0..n).filter(|&x| self.beneath(x, x)))
    }

    pub fn is_compact(&self, x: usize) -> bool {
        self.beneath(x, x)
    }

    /// `a ∈ {m : m ≺_Z a}^δ` for every `a`.
    pub fn delta_continuity(&self) -> Outcome {
        let p = self.poset();
        for a in 0..p.len() {
            if !p.cut(&self.below[a]).contains(a) {
                return Outcome::Fails(
                    Witness::new(p)
                        .note("a", label_of(p, a))
                        .note("beneath(a)", p.fmt_set(&self.below[a])),
                );
            }
        }
        Outcome::Holds
    }

    /// `x ∈ (k_Z(P) ∩ ↓x)^δ` for every `x`.
    pub fn prealgebraicity(&self) -> Outcome {
        let p = self.poset();
        let k = self.compacts();
        for x in 0..p.len() {
            let kx = k.intersection(p.down_of(x));
            if !p.cut(&kx).contains(x) {
                return Outcome::Fails(
                    Witness::new(p)
                        .note("x", label_of(p, x))
                        .note("compacts below x", p.fmt_set(&kx)),
                );
            }
        }
        Outcome::Holds
    }

    /// The pairs `x ≺_Z y` with `x ≠ y`, plus compact loops.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.poset().len();
        (0..n)
            .flat_map(|y| self.below[y].iter().map(move |x| (x, y)))
            .collect()
    }
}

/// Convenience wrappers answering yes/no.
pub fn is_weak_s_z_continuous(p: &FinitePoset, z: SubsetSystem) -> Result<bool> {
    Ok(weak_s_continuity(&WayBelow::of(p, z)?).holds())
}

pub fn is_s_z_continuous(p: &FinitePoset, z: SubsetSystem) -> Result<bool> {
    Ok(s_continuity(&WayBelow::of(p, z)?).holds())
}

pub fn is_s_z_quasicontinuous(p: &FinitePoset, z: SubsetSystem) -> Result<bool> {
    Ok(quasicontinuity(&WayBelow::of(p, z)?)?.holds())
}

pub fn is_weakly_meet(p: &FinitePoset, z: SubsetSystem) -> Result<bool> {
    Ok(weakly_meet(&ZScott::new(p, z)?).holds())
}

pub fn is_meet(p: &FinitePoset, z: SubsetSystem) -> Result<bool> {
    Ok(meet(&ZScott::new(p, z)?)?.holds())
}

pub fn is_locally_weakly_meet(p: &FinitePoset, z: SubsetSystem) -> Result<bool> {
    Ok(locally_weakly_meet(p, z)?.holds())
}

pub fn is_delta_z_continuous(p: &FinitePoset, z: SubsetSystem) -> Result<bool> {
    Ok(Beneath::of(p, z)?.delta_continuity().holds())
}

pub fn is_delta_z_prealgebraic(p: &FinitePoset, z: SubsetSystem) -> Result<bool> {
    Ok(Beneath::of(p, z)?.prealgebraicity().holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use SubsetSystem::*;

    fn set(p: &FinitePoset, l: &[&str]) -> ElemSet {
        p.set_of(l).unwrap()
    }

    #[test]
    fn way_below_examples() {
        let c3 = fixtures::chain3();
        let wb = WayBelow::of(&c3, Finite).unwrap();
        let a = set(&c3, &["a"]);
        assert!(wb.sets(&a, &a));
        let fan = fixtures::fan3();
        let wb = WayBelow::of(&fan, Finite).unwrap();
        assert!(!wb.sets(&set(&fan, &["a"]), &set(&fan, &["t"])));
        assert!(!wb.dd_set(3).contains(0));
        // S = {x} always fires the hypothesis, so nothing lies above ∅.
        assert!(wb.uu_set(&fan.empty_set()).is_empty());
        for p in fixtures::all_named() {
            let wb = WayBelow::of(&p, Directed).unwrap();
            for x in 0..p.len() {
                assert_eq!(wb.dd_set(x), p.down_of(x));
            }
        }
    }

    #[test]
    fn relative_way_below() {
        let c3 = fixtures::chain3();
        assert_eq!(
            relative_dd_set(&c3, Finite, 2, 1).unwrap(),
            set(&c3, &["a", "b"])
        );
        assert_eq!(
            relative_dd_set(&c3, Finite, 0, 0).unwrap(),
            set(&c3, &["a"])
        );
        assert!(matches!(
            relative_dd_set(&c3, Finite, 0, 2),
            Err(Error::NotBelow { .. })
        ));
        let fan = fixtures::fan3();
        let wb = WayBelow::of(&fan, Finite).unwrap();
        assert_eq!(&relative_dd_set(&fan, Finite, 3, 3).unwrap(), wb.dd_set(3));
    }

    #[test]
    fn omega_singleton_poset() {
        let one = fixtures::one();
        let wb = WayBelow::of(&one, Finite).unwrap();
        assert_eq!(wb.omega(0).unwrap().len(), 1);
    }

    #[test]
    fn weakly_meet_examples() {
        let fan = fixtures::fan3();
        let zs = ZScott::new(&fan, Finite).unwrap();
        match weakly_meet(&zs) {
            Outcome::Fails(w) => assert_eq!(w.notes[0], ("x".to_string(), "x".to_string())),
            other => panic!("expected failure, got {other:?}"),
        }
        assert!(!weakly_meet_via_upsets(&zs).unwrap().holds());
        assert!(!is_locally_weakly_meet(&fan, Finite).unwrap());
        let vee = fixtures::vee();
        assert!(is_weakly_meet(&vee, Finite).unwrap());
        assert!(weakly_meet_via_upsets(&ZScott::new(&vee, Finite).unwrap())
            .unwrap()
            .holds());
        assert!(is_locally_weakly_meet(&fixtures::chain3(), Finite).unwrap());
    }

    #[test]
    fn beneath_examples() {
        let vee = fixtures::vee();
        let b = Beneath::of(&vee, Directed).unwrap();
        assert!(b.beneath(0, 2) && b.beneath(1, 2) && !b.beneath(2, 2));
        assert_eq!(b.compacts(), set(&vee, &["a", "b"]));
        assert!(b.delta_continuity().holds());
        assert!(b.prealgebraicity().holds());
        let dia = fixtures::diamond();
        let b = Beneath::of(&dia, Directed).unwrap();
        assert!((0..4).all(|x| b.beneath(0, x)));
        assert_eq!(b.compacts(), set(&dia, &["0", "a", "b"]));
        let c3 = fixtures::chain3();
        assert_eq!(Beneath::of(&c3, Directed).unwrap().compacts(), c3.carrier());
    }

    #[test]
    fn directed_is_s_continuous() {
        for p in fixtures::all_named() {
            assert!(is_s_z_continuous(&p, Directed).unwrap(), "{p:?}");
            assert!(is_weakly_meet(&p, Directed).unwrap());
        }
    }
}
