//! Per-instance checks of the statements about weakly meet continuity,
//! lower hereditary topologies and principal ideals. Each checker gates on
//! its hypotheses and answers `Inapplicable` when they fail.

use crate::continuity::{self, relative_dd_set, WayBelow};
use crate::elemset::ElemSet;
use crate::enumerate::{enumerate_up_to, EnumMode};
use crate::error::Result;
use crate::io::inline_poset;
use crate::lattice::GammaLattice;
use crate::map::enumerate_monotone_maps;
use crate::poset::FinitePoset;
use crate::report::{Outcome, Witness};
use crate::system::{is_zcpo, SubsetSystem};
use crate::topology::{self, lemma_lh_conditions, ZScott};

/// Systems for which the standing hypotheses of the main equivalence
/// (Rudin, finite family unions, property M) are taken as given. The
/// bounded diagnostics find no counterexample for these two and do find
/// one for each of the others.
pub fn standing_hypotheses_assumed(z: SubsetSystem) -> bool {
    matches!(z, SubsetSystem::Finite | SubsetSystem::Directed)
}

fn wit(p: &FinitePoset, z: SubsetSystem) -> Witness {
    Witness::new(p).note("system", z.name())
}

fn flag(b: bool) -> String {
    b.to_string()
}

/// Weakly meet via closures agrees with the up-set characterization.
pub fn wmc_equivalence(p: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    let zs = ZScott::new(p, z)?;
    let a = continuity::weakly_meet(&zs).holds();
    let b = continuity::weakly_meet_via_upsets(&zs)?.holds();
    Ok(Outcome::check(a == b, || {
        wit(p, z)
            .note("weakly_meet", flag(a))
            .note("upset_form", flag(b))
    }))
}

/// Binary meets everywhere and a sup for every member of `Z(P)`.
pub fn is_z_complete_semilattice(p: &FinitePoset, z: SubsetSystem) -> Result<bool> {
    let meets = (0..p.len()).all(|x| (x..p.len()).all(|y| p.meet(x, y).is_some()));
    Ok(meets && is_zcpo(p, z)?)
}

/// First `(x, D)` with `x ∧ sup D ≠ sup{x ∧ d : d ∈ D}`.
pub fn meet_distribution_violation(
    p: &FinitePoset,
    z: SubsetSystem,
) -> Result<Option<(usize, ElemSet)>> {
    for d in z.members(p)?.iter() {
        let s = p.sup_of(d);
        for x in 0..p.len() {
            let lhs = s.and_then(|s| p.meet(x, s));
            let img = ElemSet::from_indices(p.len(), d.iter().filter_map(|e| p.meet(x, e)));
            let rhs = p.sup_of(&img);
            if lhs.is_none() || lhs != rhs {
                return Ok(Some((x, d.clone())));
            }
        }
    }
    Ok(None)
}

/// On a Z-complete semilattice, weakly meet exactly when finite meets
/// distribute over sups of members.
pub fn semilattice_meet_check(p: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    if !is_z_complete_semilattice(p, z)? {
        return Ok(Outcome::Inapplicable("not a Z-complete semilattice".into()));
    }
    let wm = continuity::is_weakly_meet(p, z)?;
    let bad = meet_distribution_violation(p, z)?;
    Ok(Outcome::check(wm == bad.is_none(), || {
        let w = wit(p, z)
            .note("weakly_meet", flag(wm))
            .note("law", flag(bad.is_none()));
        match &bad {
            Some((x, d)) => w.note("x", p.label(*x)).note("D", p.fmt_set(d)),
            None => w,
        }
    }))
}

/// `P` and its lattice of subbasic closed sets agree on weak meet continuity.
pub fn gamma_wmc_check(p: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    let a = continuity::is_weakly_meet(p, z)?;
    let g = GammaLattice::new(p, z)?;
    let b = continuity::is_weakly_meet(g.poset(), z)?;
    Ok(Outcome::check(a == b, || {
        wit(p, z).note("P", flag(a)).note("Gamma(P)", flag(b))
    }))
}

/// On a weakly meet poset the interior of `↑F` lies in the union of the
/// way-above sets of the points of `F`.
pub fn interior_lemma_check(p: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    let zs = ZScott::new(p, z)?;
    if !continuity::weakly_meet(&zs).holds() {
        return Ok(Outcome::Inapplicable("not weakly meet".into()));
    }
    let wb = WayBelow::new(&zs);
    let bad = p
        .carrier()
        .subsets()
        .find(|f| !f.is_empty() && !zs.interior(&p.up_set(f)).is_subset(&wb.wb_above(f)));
    Ok(Outcome::check(bad.is_none(), || {
        let f = bad.unwrap();
        wit(p, z)
            .note("F", p.fmt_set(&f))
            .note("interior", p.fmt_set(&zs.interior(&p.up_set(&f))))
            .note("way_above", p.fmt_set(&wb.wb_above(&f)))
    }))
}

/// Weakly meet and quasicontinuous: the set-level way-above of `F` equals
/// the union of pointwise way-above sets.
pub fn uu_eq_wbabove_check(p: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    if !standing_hypotheses_assumed(z) {
        return Ok(Outcome::Inapplicable(
            "system hypotheses not assumed".into(),
        ));
    }
    let zs = ZScott::new(p, z)?;
    if !continuity::weakly_meet(&zs).holds() {
        return Ok(Outcome::Inapplicable("not weakly meet".into()));
    }
    let wb = WayBelow::new(&zs);
    if !continuity::quasicontinuity(&wb)?.holds() {
        return Ok(Outcome::Inapplicable("not quasicontinuous".into()));
    }
    let bad = p
        .carrier()
        .subsets()
        .find(|f| !f.is_empty() && wb.uu_set(f) != wb.wb_above(f));
    Ok(Outcome::check(bad.is_none(), || {
        let f = bad.unwrap();
        wit(p, z)
            .note("F", p.fmt_set(&f))
            .note("uu", p.fmt_set(&wb.uu_set(&f)))
            .note("way_above", p.fmt_set(&wb.wb_above(&f)))
    }))
}

/// The three conditions of the main equivalence, in order.
pub fn main_conditions(p: &FinitePoset, z: SubsetSystem) -> Result<[bool; 3]> {
    let zs = ZScott::new(p, z)?;
    let wb = WayBelow::new(&zs);
    let wm = continuity::weakly_meet(&zs).holds();
    Ok([
        continuity::s_continuity(&wb).holds(),
        wm && continuity::quasicontinuity(&wb)?.holds(),
        wm && continuity::separation(&zs)?.holds(),
    ])
}

/// `s_Z`-continuity, weakly meet plus quasicontinuity, and weakly meet plus
/// separation coincide when every way-below set is an ideal of `Z`.
pub fn main_theorem_check(p: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    if !standing_hypotheses_assumed(z) {
        return Ok(Outcome::Inapplicable(
            "system hypotheses not assumed".into(),
        ));
    }
    let wb = WayBelow::of(p, z)?;
    if !continuity::dd_in_iz(&wb) {
        return Ok(Outcome::Inapplicable(
            "some way-below set is not in I_Z".into(),
        ));
    }
    let c = main_conditions(p, z)?;
    Ok(Outcome::check(c[0] == c[1] && c[1] == c[2], || {
        wit(p, z)
            .note("s_continuous", flag(c[0]))
            .note("wm_quasi", flag(c[1]))
            .note("wm_separation", flag(c[2]))
    }))
}

/// Partners used by statements about maps out of `P`.
pub const MAP_PARTNER_SIZE: usize = 3;

/// For every monotone `f: P → Q` with `Q` up to the partner size:
/// continuity agrees with cut preservation, and either gives closure
/// preservation. Only monotone maps are enumerated since both of the
/// first two conditions already force monotonicity.
pub fn sigma_continuity_check(p: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    let zp = ZScott::new(p, z)?;
    for q in enumerate_up_to(MAP_PARTNER_SIZE, EnumMode::UpToIso)? {
        let zq = ZScott::new(&q, z)?;
        for f in enumerate_monotone_maps(p, &q)? {
            let c1 = topology::is_sigma_z_continuous_with(&f, &zp, &zq)?;
            let c2 = topology::map_preserves_cuts(&f, z)?;
            let c3 = topology::map_preserves_closures(&f, &zp, &zq);
            if c1 != c2 || (c2 && !c3) {
                return Ok(Outcome::Fails(
                    wit(p, z)
                        .note("Q", inline_poset(&q))
                        .note("f", f.describe())
                        .note("continuous", flag(c1))
                        .note("preserves_cuts", flag(c2))
                        .note("preserves_closures", flag(c3)),
                ));
            }
        }
    }
    Ok(Outcome::Holds)
}

/// The implication pattern among the five lower hereditary conditions.
pub fn lh_pattern_check(p: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    let c = lemma_lh_conditions(p, z)?;
    Ok(Outcome::check(c.pattern_holds(), || {
        let bits: Vec<String> = c.as_array().iter().map(|b| flag(*b)).collect();
        wit(p, z).note("conditions", bits.join(" "))
    }))
}

/// A zcpo has a lower hereditary topology.
pub fn zcpo_lh_check(p: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    if !is_zcpo(p, z)? {
        return Ok(Outcome::Inapplicable("not a zcpo".into()));
    }
    let zs = ZScott::new(p, z)?;
    let bad = zs.lower_hereditary_witness()?;
    Ok(Outcome::check(bad.is_none(), || {
        wit(p, z).note("A", p.fmt_set(bad.as_ref().unwrap()))
    }))
}

/// Under a lower hereditary topology, weakly meet exactly when every
/// principal ideal is.
pub fn local_wmc_check(p: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    if !ZScott::new(p, z)?.is_lower_hereditary()? {
        return Ok(Outcome::Inapplicable("not lower hereditary".into()));
    }
    let a = continuity::is_weakly_meet(p, z)?;
    let b = continuity::is_locally_weakly_meet(p, z)?;
    Ok(Outcome::check(a == b, || {
        wit(p, z)
            .note("weakly_meet", flag(a))
            .note("locally", flag(b))
    }))
}

/// `↟^x y`, computed inside `↓x`, is a member of `Z(↓x)` for all `y ≤ x`.
pub fn relative_dd_members(p: &FinitePoset, z: SubsetSystem) -> Result<bool> {
    for x in 0..p.len() {
        let sub = p.principal_down_subposet(x)?;
        for y in p.down_of(x).iter() {
            let d = relative_dd_set(p, z, x, y)?;
            if !z.contains(sub.poset(), &sub.pull(&d)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every principal ideal is `s_Z`-continuous as a poset in its own right.
pub fn principal_ideals_continuous(p: &FinitePoset, z: SubsetSystem) -> Result<bool> {
    for x in 0..p.len() {
        let sub = p.principal_down_subposet(x)?;
        if !continuity::is_s_z_continuous(sub.poset(), z)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `↟x ∈ Z(P)` for every `x`.
pub fn dd_members(p: &FinitePoset, z: SubsetSystem) -> Result<bool> {
    let wb = WayBelow::of(p, z)?;
    Ok((0..p.len()).all(|x| z.contains(p, wb.dd_set(x))))
}

fn lower_hereditary(p: &FinitePoset, z: SubsetSystem) -> Result<bool> {
    ZScott::new(p, z)?.is_lower_hereditary()
}

/// Lower hereditary, weakly continuous, with relative way-below sets in
/// `Z`: then each principal ideal is continuous.
pub fn down_continuity_check(p: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    if !lower_hereditary(p, z)? {
        return Ok(Outcome::Inapplicable("not lower hereditary".into()));
    }
    if !continuity::is_weak_s_z_continuous(p, z)? || !relative_dd_members(p, z)? {
        return Ok(Outcome::Inapplicable(
            "hypotheses on way-below sets fail".into(),
        ));
    }
    let ok = principal_ideals_continuous(p, z)?;
    Ok(Outcome::check(ok, || {
        wit(p, z).note("conclusion", "some principal ideal is not s_Z-continuous")
    }))
}

/// Lower hereditary with continuous principal ideals and way-below sets in
/// `Z`: then `P` is continuous.
pub fn up_continuity_check(p: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    if !lower_hereditary(p, z)? {
        return Ok(Outcome::Inapplicable("not lower hereditary".into()));
    }
    if !principal_ideals_continuous(p, z)? || !dd_members(p, z)? {
        return Ok(Outcome::Inapplicable(
            "hypotheses on principal ideals fail".into(),
        ));
    }
    let ok = continuity::is_s_z_continuous(p, z)?;
    Ok(Outcome::check(ok, || {
        wit(p, z).note("conclusion", "P is not s_Z-continuous")
    }))
}

/// The two-sided version of the previous pair.
pub fn down_equivalence_check(p: &FinitePoset, z: SubsetSystem) -> Result<Outcome> {
    if !lower_hereditary(p, z)? {
        return Ok(Outcome::Inapplicable("not lower hereditary".into()));
    }
    let a = continuity::is_s_z_continuous(p, z)? && relative_dd_members(p, z)?;
    let b = principal_ideals_continuous(p, z)? && dd_members(p, z)?;
    Ok(Outcome::check(a == b, || {
        wit(p, z).note("global", flag(a)).note("principal", flag(b))
    }))
}
