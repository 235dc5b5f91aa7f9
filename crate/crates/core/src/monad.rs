//! The adjunction `Γ^Z ⊣ K_Z`, the monad `δ = K_ZΓ^Z` with `η(p) = ↓p`
//! and `μ(𝒜) = sup 𝒜`, and its Eilenberg-Moore algebras.
//!
//! Objects of the poset side are arbitrary finite posets with σ^Z-continuous
//! maps; objects of the lattice side are complete lattices that are
//! δ_Z-prealgebraic, with maps that have an upper adjoint and preserve ≺_Z.

use crate::continuity::Beneath;
use crate::elemset::ElemSet;
use crate::enumerate::{monotone_tables, pinned_monotone_tables};
use crate::error::{Error, Result};
use crate::galois::upper_adjoint_of;
use crate::io::inline_poset;
use crate::lattice::{delta_map, gamma_map, DeltaObject, GammaLattice};
use crate::map::{MonotoneMap, MAP_ENUM_CAP};
use crate::poset::{FinitePoset, Subposet};
use crate::report::{Outcome, Witness};
use crate::system::{is_zcpo, SubsetSystem};
use crate::topology::is_sigma_z_continuous;

/// Search-node cap for the uniqueness enumerations.
pub const SEARCH_CAP: usize = 1 << 22;

/// `k_Z(L)` as a subposet of `L`.
pub fn compact_part(l: &FinitePoset, z: SubsetSystem) -> Result<Subposet> {
    Ok(l.restrict(&Beneath::of(l, z)?.compacts()))
}

/// Nonempty, with a bottom and all binary joins.
pub fn is_complete_lattice(l: &FinitePoset) -> bool {
    l.bottom().is_some() && (0..l.len()).all(|i| (i + 1..l.len()).all(|j| l.join(i, j).is_some()))
}

pub fn is_prealgebraic_lattice(l: &FinitePoset, z: SubsetSystem) -> Result<bool> {
    Ok(is_complete_lattice(l) && Beneath::of(l, z)?.prealgebraicity().holds())
}

/// Has an upper adjoint and sends ≺_Z pairs of the domain to ≺_Z pairs.
pub fn is_lattice_morphism(h: &MonotoneMap<'_>, dom: &Beneath, cod: &Beneath) -> bool {
    upper_adjoint_of(h).is_some()
        && dom
            .pairs()
            .iter()
            .all(|&(x, y)| cod.beneath(h.apply(x), h.apply(y)))
}

/// `μ(𝒜) = sup 𝒜`, the sup taken in the poset `δ(P)`. `d2` must be
/// `δ(δ(P))` built on `d1.poset()`.
pub fn mu<'a>(d1: &'a DeltaObject, d2: &'a DeltaObject) -> Result<MonotoneMap<'a>> {
    if d2.base() != d1.poset() {
        return Err(Error::InvalidOrder(
            "second delta object is not built on the first".into(),
        ));
    }
    let table = (0..d2.len())
        .map(|i| {
            d1.poset()
                .sup_of(d2.set(i))
                .ok_or_else(|| Error::SupMissing(d1.poset().fmt_set(d2.set(i))))
        })
        .collect::<Result<Vec<_>>>()?;
    MonotoneMap::new(d2.poset(), d1.poset(), table)
}

/// First `𝒜 ∈ δ²(P)` where the sup in `δ(P)` is not the sup taken in the
/// lattice `Γ^Z(P)`, which is how the counit defines `μ`.
pub fn mu_mismatch(d1: &DeltaObject, d2: &DeltaObject) -> Option<usize> {
    (0..d2.len()).find(|&i| {
        let members = ElemSet::from_indices(
            d1.lattice().len(),
            d2.set(i).iter().map(|k| d1.lattice_index(k)),
        );
        let lat = d1.lattice().sup(&members);
        d1.poset().sup_of(d2.set(i)).map(|k| d1.lattice_index(k)) != Some(lat)
    })
}

fn tables_equal(a: &MonotoneMap<'_>, b: &MonotoneMap<'_>) -> bool {
    a.table() == b.table()
}

/// Converts the two "structure breaks" errors into a failing outcome.
fn broken(p: &FinitePoset, z: SubsetSystem, law: &str, r: Result<Outcome>) -> Result<Outcome> {
    match r {
        Err(e @ (Error::NotCompact(_) | Error::SupMissing(_) | Error::NotMonotone(_))) => {
            Ok(Outcome::Fails(
                Witness::new(p)
                    .note("system", z.name())
                    .note("law", law)
                    .note("error", e.to_string()),
            ))
        }
        other => other,
    }
}

fn law_witness(p: &FinitePoset, z: SubsetSystem, law: &str) -> Witness {
    Witness::new(p).note("system", z.name()).note("law", law)
}

/// Both triangle identities: `K_Z(ε_L) ∘ η_{K_Z L} = id` on `k_Z(L)` and
/// `ε_{Γ^Z P} ∘ Γ^Z(η_P) = id` on `Γ^Z(P)`.
pub fn triangle_identities(p: &FinitePoset, l: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    if !is_prealgebraic_lattice(l, z)? {
        return Ok(Outcome::Inapplicable(
            "L is not a δ_Z-prealgebraic lattice".into(),
        ));
    }
    broken(p, z, "triangle", triangles_inner(p, l, z))
}

fn triangles_inner(p: &FinitePoset, l: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    let kl = compact_part(l, z)?;
    let dk = DeltaObject::new(kl.poset(), z)?;
    let eta_k = dk.eta()?;
    for k in 0..kl.poset().len() {
        let e = kl.lift(dk.set(eta_k.apply(k)));
        if l.sup_of(&e) != Some(kl.embed(k)) {
            return Ok(Outcome::Fails(
                law_witness(p, z, "counit after unit on K(L)")
                    .note("L", inline_poset(l))
                    .note("k", l.label(kl.embed(k))),
            ));
        }
    }
    let dp = DeltaObject::new(p, z)?;
    let gp = dp.lattice();
    let eta_p = dp.eta()?;
    let outer = GammaLattice::new(dp.poset(), z)?;
    let g_eta = gamma_map(&eta_p, gp, &outer)?;
    for a in 0..gp.len() {
        let e = outer.set(g_eta.apply(a));
        let members = ElemSet::from_indices(gp.len(), e.iter().map(|i| dp.lattice_index(i)));
        if gp.sup(&members) != a {
            return Ok(Outcome::Fails(
                law_witness(p, z, "counit after Gamma of unit").note("A", p.fmt_set(gp.set(a))),
            ));
        }
    }
    Ok(Outcome::Holds)
}

/// For each σ^Z-continuous `f: P → K_Z(L)`, `f̄(A) = sup_L f(A)` extends
/// `f` along `η`, is a lattice morphism, and is the only such morphism.
pub fn universal_arrow(p: &FinitePoset, l: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    if !is_prealgebraic_lattice(l, z)? {
        return Ok(Outcome::Inapplicable(
            "L is not a δ_Z-prealgebraic lattice".into(),
        ));
    }
    let kl = compact_part(l, z)?;
    let gp = GammaLattice::new(p, z)?;
    let bl = Beneath::of(l, z)?;
    let bg = Beneath::of(gp.poset(), z)?;
    let lp = gp.poset();
    let joins: Vec<Vec<usize>> = (0..lp.len())
        .map(|i| {
            (0..lp.len())
                .map(|j| lp.join(i, j).expect("lattice"))
                .collect()
        })
        .collect();
    let bottom_g = lp.bottom().expect("lattice");
    let bottom_l = l.bottom().expect("lattice");
    // Any map with an upper adjoint keeps the bottom and binary joins, so
    // partial tables breaking either are pruned early.
    let accept = |t: &[usize], i: usize| -> bool {
        if i == bottom_g && t[i] != bottom_l {
            return false;
        }
        for j in 0..t.len() {
            if t[j] == usize::MAX {
                continue;
            }
            let s = joins[i][j];
            if t[s] != usize::MAX && Some(t[s]) != l.join(t[i], t[j]) {
                return false;
            }
            for k in 0..t.len() {
                if joins[j][k] == i && t[k] != usize::MAX && Some(t[i]) != l.join(t[j], t[k]) {
                    return false;
                }
            }
        }
        true
    };
    for tab in monotone_tables(p, kl.poset(), MAP_ENUM_CAP)? {
        let f = MonotoneMap::new(p, kl.poset(), tab)?;
        if !is_sigma_z_continuous(&f, z)? {
            continue;
        }
        let fail = |why: &str| {
            Outcome::Fails(
                Witness::new(p)
                    .note("system", z.name())
                    .note("L", inline_poset(l))
                    .note("f", f.describe())
                    .note("violation", why),
            )
        };
        let fbar_table = (0..gp.len())
            .map(|a| {
                l.sup_of(&kl.lift(&f.image(gp.set(a))))
                    .expect("complete lattice")
            })
            .collect::<Vec<_>>();
        let Ok(fbar) = MonotoneMap::new(lp, l, fbar_table) else {
            return Ok(fail("extension is not monotone"));
        };
        if (0..p.len()).any(|x| fbar.apply(gp.principal(x)) != kl.embed(f.apply(x))) {
            return Ok(fail("extension does not restrict to f"));
        }
        if !is_lattice_morphism(&fbar, &bg, &bl) {
            return Ok(fail("extension is not a lattice morphism"));
        }
        let mut pins = vec![None; gp.len()];
        for x in 0..p.len() {
            pins[gp.principal(x)] = Some(kl.embed(f.apply(x)));
        }
        let others: Vec<Vec<usize>> = pinned_monotone_tables(lp, l, &pins, SEARCH_CAP, &accept)?
            .into_iter()
            .filter(|t| {
                is_lattice_morphism(
                    &MonotoneMap::new(lp, l, t.clone()).expect("monotone"),
                    &bg,
                    &bl,
                )
            })
            .collect();
        if others != [fbar.table().to_vec()] {
            return Ok(fail(&format!("{} morphisms extend f", others.len())));
        }
    }
    Ok(Outcome::Holds)
}

/// Unit and associativity laws on `P`, `δ(P)`, `δ²(P)`, `δ³(P)`, plus the
/// agreement of the two readings of `μ`.
pub fn monad_laws(p: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    broken(p, z, "monad", monad_inner(p, z))
}

fn monad_inner(p: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    let d1 = DeltaObject::new(p, z)?;
    let d2 = DeltaObject::new(d1.poset(), z)?;
    let d3 = DeltaObject::new(d2.poset(), z)?;
    let eta_p = d1.eta()?;
    if !eta_p.is_order_embedding() {
        return Ok(Outcome::Fails(law_witness(
            p,
            z,
            "unit is an order embedding",
        )));
    }
    let eta_d1 = d2.eta()?;
    let mu_p = mu(&d1, &d2)?;
    let mu_d1 = mu(&d2, &d3)?;
    if let Some(i) = mu_mismatch(&d1, &d2) {
        return Ok(Outcome::Fails(
            law_witness(p, z, "sup in delta(P) equals lattice sup")
                .note("family", d1.poset().fmt_set(d2.set(i))),
        ));
    }
    if !mu_p.after(&eta_d1)?.is_identity() {
        return Ok(Outcome::Fails(law_witness(p, z, "mu . eta_delta = id")));
    }
    if !mu_p.after(&delta_map(&eta_p, &d1, &d2)?)?.is_identity() {
        return Ok(Outcome::Fails(law_witness(p, z, "mu . delta(eta) = id")));
    }
    let left = mu_p.after(&mu_d1)?;
    let right = mu_p.after(&delta_map(&mu_p, &d3, &d2)?)?;
    if !tables_equal(&left, &right) {
        return Ok(Outcome::Fails(law_witness(
            p,
            z,
            "mu . mu_delta = mu . delta(mu)",
        )));
    }
    Ok(Outcome::Holds)
}

/// Naturality squares of `η` and `μ` along a σ^Z-continuous `f`.
pub fn naturality(f: &MonotoneMap<'_>, z: SubsetSystem) -> Result<Outcome> {
    if !is_sigma_z_continuous(f, z)? {
        return Ok(Outcome::Inapplicable("map is not σ^Z-continuous".into()));
    }
    let r = naturality_inner(f, z);
    broken(f.dom(), z, "naturality", r)
}

fn naturality_inner(f: &MonotoneMap<'_>, z: SubsetSystem) -> Result<Outcome> {
    let (p, q) = (f.dom(), f.cod());
    let (p1, q1) = (DeltaObject::new(p, z)?, DeltaObject::new(q, z)?);
    let (p2, q2) = (
        DeltaObject::new(p1.poset(), z)?,
        DeltaObject::new(q1.poset(), z)?,
    );
    let df = delta_map(f, &p1, &q1)?;
    let fail = |law: &str| {
        Outcome::Fails(
            law_witness(p, z, law)
                .note("Q", inline_poset(q))
                .note("f", f.describe()),
        )
    };
    if !tables_equal(&df.after(&p1.eta()?)?, &q1.eta()?.after(f)?) {
        return Ok(fail("delta(f) . eta = eta . f"));
    }
    let ddf = delta_map(&df, &p2, &q2)?;
    if !tables_equal(&mu(&q1, &q2)?.after(&ddf)?, &df.after(&mu(&p1, &p2)?)?) {
        return Ok(fail("mu . delta2(f) = delta(f) . mu"));
    }
    Ok(Outcome::Holds)
}

/// Every member of `δ(P)` has a supremum in `P`.
pub fn is_delta_cpo(p: &FinitePoset, z: SubsetSystem) -> Result<bool> {
    Ok(DeltaObject::new(p, z)?.missing_sup().is_none())
}

/// `ξ = sup`, when `P` is a δcpo.
pub fn em_structure_map(d1: &DeltaObject) -> Option<MonotoneMap<'_>> {
    d1.sup_map()
}

/// `ξ ∘ η = id` and `ξ ∘ μ = ξ ∘ δ(ξ)`. A `ξ` whose `δ(ξ)` leaves the
/// compact sets fails.
pub fn algebra_laws_hold(d1: &DeltaObject, d2: &DeltaObject, xi: &MonotoneMap<'_>) -> Result<bool> {
    if !xi.after(&d1.eta()?)?.is_identity() {
        return Ok(false);
    }
    let dxi = match delta_map(xi, d2, d1) {
        Ok(m) => m,
        Err(Error::NotCompact(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    Ok(tables_equal(&xi.after(&mu(d1, d2)?)?, &xi.after(&dxi)?))
}

/// A structure map: σ^Z-continuous and satisfying both algebra laws.
pub fn em_check(d1: &DeltaObject, d2: &DeltaObject, xi: &MonotoneMap<'_>) -> Result<bool> {
    Ok(is_sigma_z_continuous(xi, d1.system())? && algebra_laws_hold(d1, d2, xi)?)
}

/// Structure maps exist exactly on δcpos, and then the sup map is the only
/// one. Candidates are all monotone maps `δ(P) → P` fixing `↓p ↦ p`.
pub fn em_theorem(p: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    let r = em_inner(p, z);
    broken(p, z, "algebra", r)
}

fn em_inner(p: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    let d1 = DeltaObject::new(p, z)?;
    let d2 = DeltaObject::new(d1.poset(), z)?;
    let eta = d1.eta()?;
    let mut pins = vec![None; d1.len()];
    for x in 0..p.len() {
        pins[eta.apply(x)] = Some(x);
    }
    let mut found = Vec::new();
    for t in pinned_monotone_tables(d1.poset(), p, &pins, SEARCH_CAP, &|_, _| true)? {
        let xi = MonotoneMap::new(d1.poset(), p, t)?;
        if em_check(&d1, &d2, &xi)? {
            found.push(xi.table().to_vec());
        }
    }
    let sup = em_structure_map(&d1);
    let ok = match &sup {
        Some(s) => found == [s.table().to_vec()],
        None => found.is_empty(),
    };
    Ok(Outcome::check(ok, || {
        law_witness(
            p,
            z,
            "structure maps are exactly the sup map on a delta cpo",
        )
        .note("delta_cpo", sup.is_some().to_string())
        .note("structure_maps", found.len().to_string())
    }))
}

/// `f(sup A) = sup f(A)` for every `A ∈ δ(P)`, both posets δcpos.
pub fn is_em_morphism(f: &MonotoneMap<'_>, z: SubsetSystem) -> Result<bool> {
    let (dp, dq) = (DeltaObject::new(f.dom(), z)?, DeltaObject::new(f.cod(), z)?);
    if dp.missing_sup().is_some() || dq.missing_sup().is_some() {
        return Err(Error::Inapplicable(
            "domain and codomain must be delta cpos".into(),
        ));
    }
    Ok(sup_equation(f, &dp))
}

fn sup_equation(f: &MonotoneMap<'_>, dp: &DeltaObject) -> bool {
    let (p, q) = (f.dom(), f.cod());
    (0..dp.len()).all(|i| {
        let a = dp.set(i);
        let s = p.sup_of(a).expect("delta cpo");
        q.sup_of(&f.image(a)) == Some(f.apply(s))
    })
}

/// The sup equation agrees with `f ∘ ξ_P = ξ_Q ∘ δ(f)` for a
/// σ^Z-continuous `f` between δcpos.
pub fn em_morphism_cross_check(f: &MonotoneMap<'_>, z: SubsetSystem) -> Result<Outcome> {
    let (p, q) = (f.dom(), f.cod());
    let (dp, dq) = (DeltaObject::new(p, z)?, DeltaObject::new(q, z)?);
    let (Some(xp), Some(xq)) = (dp.sup_map(), dq.sup_map()) else {
        return Ok(Outcome::Inapplicable(
            "domain and codomain must be delta cpos".into(),
        ));
    };
    if !is_sigma_z_continuous(f, z)? {
        return Ok(Outcome::Inapplicable("map is not σ^Z-continuous".into()));
    }
    let eq = sup_equation(f, &dp);
    let cat = match delta_map(f, &dp, &dq) {
        Ok(df) => tables_equal(&f.after(&xp)?, &xq.after(&df)?),
        Err(e @ Error::NotCompact(_)) => {
            return Ok(Outcome::Fails(
                law_witness(p, z, "delta(f) is defined")
                    .note("Q", inline_poset(q))
                    .note("error", e.to_string()),
            ))
        }
        Err(e) => return Err(e),
    };
    Ok(Outcome::check(eq == cat, || {
        law_witness(p, z, "sup equation matches the algebra square")
            .note("Q", inline_poset(q))
            .note("f", f.describe())
            .note("sup_equation", eq.to_string())
    }))
}

/// If `L` is a zcpo then so is `k_Z(L)`, with the same sups.
pub fn kz_zcpo(l: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    if !is_zcpo(l, z)? {
        return Ok(Outcome::Inapplicable("L is not a zcpo".into()));
    }
    let kl = compact_part(l, z)?;
    for m in z.generators(kl.poset())? {
        if kl.poset().sup_of(&m).map(|s| kl.embed(s)) != l.sup_of(&kl.lift(&m)) {
            return Ok(Outcome::Fails(
                Witness::new(l)
                    .note("system", z.name())
                    .note("D", l.fmt_set(&kl.lift(&m))),
            ));
        }
    }
    Ok(Outcome::Holds)
}

/// A `D ∈ Z(k_Z(L))` whose cut computed inside `k_Z(L)` differs from
/// `D^δ ∩ k_Z(L)`, returned as a subset of `L`.
pub fn relative_cut_gap(l: &FinitePoset, z: SubsetSystem) -> Result<Option<ElemSet>> {
    let kl = compact_part(l, z)?;
    let k = kl.carrier().clone();
    Ok(z.generators(kl.poset())?
        .into_iter()
        .map(|m| kl.lift(&m))
        .find(|d| {
            let inside = kl.lift(&kl.poset().cut(&kl.pull(d)));
            inside != l.cut(d).intersection(&k)
        }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use SubsetSystem::*;

    #[test]
    fn tiny_adjunction() {
        let (one, two) = (fixtures::one(), fixtures::chain2());
        for z in SubsetSystem::ALL {
            assert!(triangle_identities(&one, &two, z).unwrap().holds(), "{z}");
            assert!(universal_arrow(&one, &two, z).unwrap().holds(), "{z}");
        }
        let anti = fixtures::anti2();
        let l = GammaLattice::new(&anti, Directed).unwrap();
        assert!(triangle_identities(&anti, l.poset(), Directed)
            .unwrap()
            .holds());
        assert!(universal_arrow(&anti, l.poset(), Directed).unwrap().holds());
    }

    #[test]
    fn non_lattice_is_inapplicable() {
        let anti = fixtures::anti2();
        assert!(triangle_identities(&anti, &anti, Directed)
            .unwrap()
            .is_inapplicable());
    }

    #[test]
    fn monad_on_fixtures() {
        for p in [
            fixtures::one(),
            fixtures::lambda(),
            fixtures::anti2(),
            fixtures::chain3(),
        ] {
            assert!(monad_laws(&p, Directed).unwrap().holds(), "{p:?}");
        }
        let (c3, lam) = (fixtures::chain3(), fixtures::lambda());
        for t in monotone_tables(&c3, &lam, 100).unwrap() {
            let f = MonotoneMap::new(&c3, &lam, t).unwrap();
            assert!(!naturality(&f, Directed).unwrap().fails());
        }
    }

    #[test]
    fn algebras() {
        assert!(!is_delta_cpo(&fixtures::anti2(), Directed).unwrap());
        assert!(is_delta_cpo(&fixtures::lambda(), Directed).unwrap());
        assert!(is_delta_cpo(&fixtures::diamond(), Finite).unwrap());
        for p in [fixtures::anti2(), fixtures::lambda(), fixtures::diamond()] {
            assert!(em_theorem(&p, Directed).unwrap().holds(), "{p:?}");
        }
        let lam = fixtures::lambda();
        let d1 = DeltaObject::new(&lam, Directed).unwrap();
        let d2 = DeltaObject::new(d1.poset(), Directed).unwrap();
        assert!(em_check(&d1, &d2, &em_structure_map(&d1).unwrap()).unwrap());
    }

    #[test]
    fn em_morphisms() {
        let lam = fixtures::lambda();
        assert!(is_em_morphism(&MonotoneMap::identity(&lam), Directed).unwrap());
        let c3 = fixtures::chain3();
        let bottom = MonotoneMap::constant(&lam, &c3, 0).unwrap();
        assert!(is_em_morphism(&bottom, Directed).unwrap());
        // a ↦ b sends sup ∅ = 0 to b, but sup of the empty image is a.
        let lift =
            MonotoneMap::from_labels(&lam, &c3, &[("0", "b"), ("a", "b"), ("b", "c")]).unwrap();
        assert!(!is_em_morphism(&lift, Directed).unwrap());
        assert!(em_morphism_cross_check(&lift, Directed).unwrap().holds());
        let anti = fixtures::anti2();
        assert!(is_em_morphism(&MonotoneMap::identity(&anti), Directed).is_err());
    }

    #[test]
    fn compact_part_zcpo() {
        for p in fixtures::all_named() {
            for z in [Finite, Directed] {
                assert!(!kz_zcpo(&p, z).unwrap().fails(), "{z} {p:?}");
            }
        }
    }
}
