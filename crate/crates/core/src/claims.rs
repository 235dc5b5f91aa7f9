//! The claim registry and the exhaustive runner.
//!
//! A claim is a per-poset check returning a three-valued outcome. The
//! runner enumerates a population, fans the instances out over a rayon
//! pool and folds the results back in enumeration order, so the report does
//! not depend on the number of workers.

use std::collections::BTreeMap;
use std::sync::Mutex;

use rayon::prelude::*;

use crate::continuity::Beneath;
use crate::enumerate::{enumerate_posets, enumerate_up_to, EnumMode};
use crate::error::{Error, Result};
use crate::galois::{galois_connections, galois_lemma_suite};
use crate::io::inline_poset;
use crate::lattice::{gamma_prealgebraic, union_sup_check, GammaLattice};
use crate::lemmas;
use crate::map::enumerate_monotone_maps;
use crate::monad;
use crate::poset::FinitePoset;
use crate::report::{ClaimReport, Outcome, Witness};
use crate::system::SubsetSystem;
use crate::topology::ZScott;
use crate::{continuity, fixtures};

/// Named counters a check may bump alongside its outcome. Rendered as
/// report notes in key order.
#[derive(Default, Debug, Clone, PartialEq, Eq)]
pub struct Tally(BTreeMap<&'static str, usize>);

impl Tally {
    pub fn bump(&mut self, key: &'static str, by: usize) {
        *self.0.entry(key).or_default() += by;
    }

    pub fn get(&self, key: &str) -> usize {
        self.0.get(key).copied().unwrap_or(0)
    }

    fn merge(&mut self, other: Tally) {
        for (k, v) in other.0 {
            self.bump(k, v);
        }
    }
}

pub type Check = fn(&FinitePoset, SubsetSystem, &mut Tally) -> Result<Outcome>;

#[derive(Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
    /// The displayed formula or phrase the claim is tied to.
    pub anchor: &'static str,
    /// Systems searched when the caller does not name any.
    pub systems: &'static [SubsetSystem],
    /// Largest size searched by default.
    pub default_max: usize,
    /// Ignores the system: one report per size, labelled `any`.
    pub system_free: bool,
    check: Check,
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Claim").field("id", &self.id).finish()
    }
}

impl Claim {
    pub fn evaluate(&self, p: &FinitePoset, z: SubsetSystem, tally: &mut Tally) -> Result<Outcome> {
        match (self.check)(p, z, tally) {
            Err(e @ (Error::SizeCapExceeded { .. } | Error::Inapplicable(_))) => {
                Ok(Outcome::Inapplicable(e.to_string()))
            }
            other => other,
        }
    }
}

use SubsetSystem::*;
const ALL: &[SubsetSystem] = &SubsetSystem::ALL;
const STANDING: &[SubsetSystem] = &[Finite, Directed];

macro_rules! lift {
    ($f:path) => {
        |p: &FinitePoset, z: SubsetSystem, _: &mut Tally| $f(p, z)
    };
}

/// Partner size for statements that pair `P` with a second small poset.
pub const PARTNER_SIZE: usize = 3;
/// Largest lattice tried as the codomain side of the adjunction.
pub const LATTICE_PARTNER_SIZE: usize = 4;

fn partners(max: usize) -> Result<Vec<FinitePoset>> {
    enumerate_up_to(max, EnumMode::UpToIso)
}

fn first_failure(outcomes: impl IntoIterator<Item = Result<Outcome>>) -> Result<Outcome> {
    let mut any_holds = false;
    let mut reason = String::new();
    for o in outcomes {
        match o? {
            Outcome::Holds => any_holds = true,
            f @ Outcome::Fails(_) => return Ok(f),
            Outcome::Inapplicable(r) => reason = r,
        }
    }
    Ok(if any_holds || reason.is_empty() {
        Outcome::Holds
    } else {
        Outcome::Inapplicable(reason)
    })
}

fn beneath_clauses(p: &FinitePoset, z: SubsetSystem, _: &mut Tally) -> Result<Outcome> {
    let zs = ZScott::new(p, z)?;
    let b = Beneath::new(&zs)?;
    let n = p.len();
    let w = |clause: &str| {
        Witness::new(p)
            .note("system", z.name())
            .note("clause", clause)
    };
    for (x, y) in b.pairs() {
        if !p.leq(x, y) {
            return Ok(Outcome::Fails(
                w("beneath implies below").note("pair", format!("{} {}", p.label(x), p.label(y))),
            ));
        }
        for m in p.down_of(x).iter() {
            if let Some(k) = p.up_of(y).iter().find(|&k| !b.beneath(m, k)) {
                return Ok(Outcome::Fails(
                    w("beneath widens outward")
                        .note("pair", format!("{} {}", p.label(m), p.label(k))),
                ));
            }
        }
    }
    if let Some(bot) = p.bottom() {
        if let Some(x) = (0..n).find(|&x| !b.beneath(bot, x)) {
            return Ok(Outcome::Fails(
                w("bottom is beneath everything").note("x", p.label(x)),
            ));
        }
    }
    if let Some(y) = (0..n).find(|&y| !zs.is_closed(b.beneath_set(y))) {
        return Ok(Outcome::Fails(
            w("beneath set is subbasic closed").note("y", p.label(y)),
        ));
    }
    Ok(Outcome::Holds)
}

fn galois_cut(p: &FinitePoset, z: SubsetSystem, t: &mut Tally) -> Result<Outcome> {
    galois_over_partners(p, z, t, |s| s.cuts.clone())
}

fn galois_closed(p: &FinitePoset, z: SubsetSystem, t: &mut Tally) -> Result<Outcome> {
    galois_over_partners(p, z, t, |s| s.closed.clone())
}

fn galois_beneath(p: &FinitePoset, z: SubsetSystem, t: &mut Tally) -> Result<Outcome> {
    galois_over_partners(p, z, t, |s| s.beneath.clone())
}

fn galois_over_partners(
    p: &FinitePoset,
    z: SubsetSystem,
    tally: &mut Tally,
    pick: fn(&crate::galois::GaloisSuite) -> Outcome,
) -> Result<Outcome> {
    let mut outcomes = Vec::new();
    for s in partners(PARTNER_SIZE)? {
        for gc in galois_connections(p, &s)? {
            let suite = galois_lemma_suite(&gc, z)?;
            tally.bump("connections", 1);
            if suite.empty_set_breaks_cuts {
                tally.bump(
                    "connections where A = {} breaks the literal cut inclusion for g",
                    1,
                );
            }
            if suite.converse_not_required() {
                tally.bump("converse not required (T not delta-continuous)", 1);
            }
            outcomes.push(Ok(pick(&suite)));
        }
    }
    first_failure(outcomes)
}

fn kz_zcpo(p: &FinitePoset, z: SubsetSystem, t: &mut Tally) -> Result<Outcome> {
    if monad::relative_cut_gap(p, z)?.is_some() {
        t.bump("relative cut gaps in k_Z(L)", 1);
    }
    monad::kz_zcpo(p, z)
}

fn adjunction(p: &FinitePoset, z: SubsetSystem, t: &mut Tally) -> Result<Outcome> {
    let own = GammaLattice::new(p, z)?.poset().clone();
    let mut lattices = vec![own];
    lattices.extend(partners(LATTICE_PARTNER_SIZE)?);
    let mut outcomes = Vec::new();
    for l in &lattices {
        if !monad::is_prealgebraic_lattice(l, z)? {
            continue;
        }
        t.bump("lattice partners", 1);
        outcomes.push(monad::triangle_identities(p, l, z));
        outcomes.push(monad::universal_arrow(p, l, z));
    }
    first_failure(outcomes)
}

fn monad_suite(p: &FinitePoset, z: SubsetSystem, t: &mut Tally) -> Result<Outcome> {
    let mut outcomes = vec![monad::monad_laws(p, z)];
    for q in partners(PARTNER_SIZE)? {
        for f in enumerate_monotone_maps(p, &q)? {
            let o = monad::naturality(&f, z);
            if matches!(o, Ok(Outcome::Holds)) {
                t.bump("naturality squares checked", 1);
            }
            outcomes.push(o);
        }
    }
    first_failure(outcomes)
}

fn em_theorem(p: &FinitePoset, z: SubsetSystem, t: &mut Tally) -> Result<Outcome> {
    let cpo = monad::is_delta_cpo(p, z)?;
    t.bump(
        if cpo {
            "delta cpo, sup map unique"
        } else {
            "not delta cpo, no structure map"
        },
        1,
    );
    monad::em_theorem(p, z)
}

fn em_morphisms(p: &FinitePoset, z: SubsetSystem, t: &mut Tally) -> Result<Outcome> {
    let mut outcomes = Vec::new();
    for q in partners(PARTNER_SIZE)? {
        for f in enumerate_monotone_maps(p, &q)? {
            let o = monad::em_morphism_cross_check(&f, z)?;
            if o.holds() {
                t.bump("maps cross-checked", 1);
            }
            outcomes.push(Ok(o));
        }
    }
    first_failure(outcomes)
}

fn control_directed(p: &FinitePoset, z: SubsetSystem, _: &mut Tally) -> Result<Outcome> {
    if z != Directed {
        return Ok(Outcome::Inapplicable("control for directed only".into()));
    }
    let s = continuity::is_s_z_continuous(p, z)?;
    let w = continuity::is_weakly_meet(p, z)?;
    Ok(Outcome::check(s && w, || {
        Witness::new(p)
            .note("s_continuous", s.to_string())
            .note("weakly_meet", w.to_string())
    }))
}

fn control_finite(p: &FinitePoset, z: SubsetSystem, _: &mut Tally) -> Result<Outcome> {
    if z != Finite {
        return Ok(Outcome::Inapplicable("control for finite only".into()));
    }
    let b = Beneath::of(p, z)?;
    let bad = (0..p.len())
        .flat_map(|x| (0..p.len()).map(move |y| (x, y)))
        .find(|&(x, y)| b.beneath(x, y) != p.leq(x, y));
    if let Some((x, y)) = bad {
        return Ok(Outcome::Fails(
            Witness::new(p).note("pair", format!("{} {}", p.label(x), p.label(y))),
        ));
    }
    Ok(Outcome::check(b.delta_continuity().holds(), || {
        Witness::new(p).note("delta_continuous", "false")
    }))
}

fn core_cut(p: &FinitePoset, _: SubsetSystem, _: &mut Tally) -> Result<Outcome> {
    let all: Vec<_> = p.carrier().subsets().collect();
    let cuts: Vec<_> = all.iter().map(|e| p.cut(e)).collect();
    let w =
        |law: &str, e: &crate::ElemSet| Witness::new(p).note("law", law).note("E", p.fmt_set(e));
    for (e, c) in all.iter().zip(&cuts) {
        if !e.is_subset(c) {
            return Ok(Outcome::Fails(w("extensive", e)));
        }
        if p.cut(c) != *c {
            return Ok(Outcome::Fails(w("idempotent", e)));
        }
        if let Some(s) = p.sup_of(e) {
            if *c != *p.down_of(s) {
                return Ok(Outcome::Fails(w(
                    "cut is the principal ideal of the sup",
                    e,
                )));
            }
        }
        if p.relative_cut(e, &p.carrier())? != *c {
            return Ok(Outcome::Fails(w("relative cut in the carrier", e)));
        }
        for (f, d) in all.iter().zip(&cuts) {
            if e.is_subset(f) && !c.is_subset(d) {
                return Ok(Outcome::Fails(w("monotone", e).note("F", p.fmt_set(f))));
            }
        }
    }
    Ok(Outcome::Holds)
}

macro_rules! claim {
    ($id:expr, $anchor:expr, $stmt:expr, $sys:expr, $max:expr, $check:expr) => {
        Claim {
            id: $id,
            anchor: $anchor,
            statement: $stmt,
            systems: $sys,
            default_max: $max,
            system_free: false,
            check: $check,
        }
    };
}

/// All claims, in a fixed order.
pub fn registry() -> Vec<Claim> {
    let mut v = vec![
        claim!("lemma-wmc", "↑(↓x ∩ U) ∈ σ^Z(P)",
            "Weak meet continuity holds exactly when ↑(↓x ∩ U) stays subbasic open for every point x and subbasic open U.",
            ALL, 5, lift!(lemmas::wmc_equivalence)),
        claim!("lemma-semilattice", "x ∧ ⋁D = ⋁{x ∧ d : d ∈ D}",
            "On a Z-complete meet-semilattice, weak meet continuity is the same as binary meets distributing over sups of members of Z.",
            ALL, 5, lift!(lemmas::semilattice_meet_check)),
        claim!("prop-gamma-wmc", "Γ^Z(P) weakly meet",
            "A poset is weakly meet s_Z-continuous iff its lattice of subbasic closed sets is.",
            ALL, 4, lift!(lemmas::gamma_wmc_check)),
        claim!("lemma-int", "int(↑F) ⊆ ⋃ ⇟x",
            "If P is weakly meet, the subbasic interior of ↑F is covered by the points way above some member of F.",
            ALL, 5, lift!(lemmas::interior_lemma_check)),
        claim!("lemma-uu-eq", "⇑F = ⇟F",
            "If P is weakly meet and quasicontinuous, the points way above F as a set are those way above one of its members.",
            STANDING, 5, lift!(lemmas::uu_eq_wbabove_check)),
        claim!("thm-main-s3", "s_Z-continuous ⇔ wm ∧ quasicontinuous ⇔ wm ∧ separation",
            "When every way-below set is in I_Z: continuity, weak meet plus quasicontinuity, and weak meet plus the separation property coincide.",
            STANDING, 5, lift!(lemmas::main_theorem_check)),
        claim!("lemma-sigma-cont", "(1) ⇔ (2) ⇒ (3)",
            "A map is σ^Z-continuous iff it preserves cuts of members of Z, and then it also preserves closures.",
            ALL, 4, lift!(lemmas::sigma_continuity_check)),
        claim!("lemma-lh", "(5) ⇒ (1) ⇔ (2) ⇔ (3) ⇔ (4)",
            "Filtered upper bounds force the lower hereditary conditions, and those four conditions are equivalent.",
            ALL, 5, lift!(lemmas::lh_pattern_check)),
        claim!("cor-zcpo-lh", "zcpo ⇒ lower hereditary",
            "Every zcpo has a lower hereditary Z-Scott topology.",
            ALL, 5, lift!(lemmas::zcpo_lh_check)),
        claim!("thm-local-wmc", "weakly meet ⇔ locally weakly meet",
            "Under a lower hereditary topology, P is weakly meet iff every principal ideal is.",
            ALL, 5, lift!(lemmas::local_wmc_check)),
        claim!("prop-down-cont", "↓x is s_Z-continuous",
            "Lower hereditary, weakly continuous, with relative way-below sets in Z: every principal ideal is continuous.",
            ALL, 5, lift!(lemmas::down_continuity_check)),
        claim!("prop-up-cont", "P is s_Z-continuous",
            "Lower hereditary, continuous principal ideals and way-below sets in Z: P is continuous.",
            ALL, 5, lift!(lemmas::up_continuity_check)),
        claim!("thm-down-equiv", "(1) ⇔ (2)",
            "Under a lower hereditary topology, global continuity with relative way-below sets in Z matches continuous principal ideals with way-below sets in Z.",
            ALL, 5, lift!(lemmas::down_equivalence_check)),
        claim!("prop-beneath", "0 ≺_Z x",
            "Beneath implies below, is widened by going down on the left or up on the right, puts a bottom beneath everything, and has closed beneath sets.",
            ALL, 5, beneath_clauses),
        claim!("prop-union-sup", "sup 𝒞 = ⋃𝒞",
            "Sups of compact families in the lattice of closed sets are plain unions.",
            ALL, 4, lift!(union_sup_check)),
        claim!("prop-gamma-prealg", "Γ^Z(P) δ_Z-prealgebraic",
            "The lattice of subbasic closed sets is δ_Z-prealgebraic.",
            ALL, 4, lift!(gamma_prealgebraic)),
        claim!("lemma-galois-cut", "d(A^δ) ⊆ d(A)^δ",
            "A lower adjoint preserves cuts of every subset.",
            ALL, 3, galois_cut),
        claim!("lemma-galois-closed", "↓g(C) ∈ Γ^Z(T)",
            "An upper adjoint pulls subbasic closed sets back to subbasic closed sets after taking the down-set.",
            ALL, 3, galois_closed),
        claim!("lemma-galois-beneath", "d preserves ≺_Z",
            "If the upper adjoint preserves cuts of closed sets then the lower adjoint preserves beneath, with the converse on δ_Z-continuous domains.",
            ALL, 3, galois_beneath),
        claim!("lemma-kz-zcpo", "k_Z(L) zcpo",
            "The compact part of a zcpo is a zcpo with the same sups.",
            ALL, 5, kz_zcpo),
        claim!("thm-adjunction", "Γ^Z ⊣ K_Z",
            "Taking closed sets is left adjoint to taking compact parts: the triangle identities hold and each arrow into K_Z(L) extends uniquely.",
            ALL, 4, adjunction),
        claim!("thm-monad", "δ = K_Z Γ^Z monad",
            "The composite is a monad: unit and associativity laws, with natural unit and multiplication.",
            ALL, 4, monad_suite),
        claim!("thm-em", "EM algebra ⇔ δcpo",
            "A poset carries an algebra structure iff it is a δcpo, and then the sup map is the only structure.",
            ALL, 4, em_theorem),
        claim!("prop-em-morph", "f(sup A) = sup f(A)",
            "Between δcpos, a continuous map is an algebra morphism iff it preserves sups of compact families.",
            ALL, 3, em_morphisms),
        claim!("ctrl-directed", "directed control",
            "With directed sets every finite poset is s_Z-continuous and weakly meet.",
            &[Directed], 5, control_directed),
        claim!("ctrl-finite", "finite control",
            "With all finite sets beneath is the order itself and every poset is δ_Z-continuous.",
            &[Finite], 5, control_finite),
    ];
    v.push(Claim {
        id: "core-cut",
        anchor: "E^δ = E^{ul}",
        statement: "The cut operator is extensive, idempotent, monotone, equals ↓sup E when the sup exists, and agrees with the relative cut in the carrier.",
        systems: &[],
        default_max: 5,
        system_free: true,
        check: core_cut,
    });
    v
}

pub fn lookup(id: &str) -> Result<Claim> {
    registry()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

/// Evaluates one claim on one poset, as a single-instance report.
pub fn check_claim(id: &str, p: &FinitePoset, z: SubsetSystem) -> Result<ClaimReport> {
    let claim = lookup(id)?;
    let mut tally = Tally::default();
    let o = claim.evaluate(p, z, &mut tally)?;
    let mut r = ClaimReport::single(id, if claim.system_free { "any" } else { z.name() }, p, o);
    add_tally(&mut r, &tally);
    Ok(r)
}

fn add_tally(r: &mut ClaimReport, t: &Tally) {
    for (k, v) in &t.0 {
        r.add_note(format!("{k}: {v}"));
    }
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Io(e.to_string()))
}

/// One report per (system, size), systems outermost. An empty `systems`
/// means the claim's default scope.
pub fn run_claim(
    id: &str,
    sizes: &[usize],
    mode: EnumMode,
    systems: &[SubsetSystem],
    jobs: usize,
) -> Result<Vec<ClaimReport>> {
    let claim = lookup(id)?;
    let systems: Vec<Option<SubsetSystem>> = if claim.system_free {
        vec![None]
    } else if systems.is_empty() {
        claim.systems.iter().copied().map(Some).collect()
    } else {
        systems.iter().copied().map(Some).collect()
    };
    let pool = pool(jobs)?;
    let mut reports = Vec::new();
    for z in systems {
        for &n in sizes {
            let population = if n == 0 {
                Vec::new()
            } else {
                enumerate_posets(n, mode)?
            };
            let results: Vec<Result<(Outcome, Tally)>> = pool.install(|| {
                population
                    .par_iter()
                    .map(|p| {
                        let mut t = Tally::default();
                        let o = claim.evaluate(p, z.unwrap_or(Finite), &mut t)?;
                        Ok((o, t))
                    })
                    .collect()
            });
            let name = z.map_or("any", |z| z.name());
            let mut r = ClaimReport::new(id, name, n, mode_name(mode));
            let mut tally = Tally::default();
            for res in results {
                let (o, t) = res?;
                r.record(o);
                tally.merge(t);
            }
            add_tally(&mut r, &tally);
            reports.push(r);
        }
    }
    Ok(reports)
}

pub fn mode_name(mode: EnumMode) -> &'static str {
    match mode {
        EnumMode::Labeled => "labeled",
        EnumMode::UpToIso => "up-to-iso",
    }
}

/// `1..=max`.
pub fn sizes_up_to(max: usize) -> Vec<usize> {
    (1..=max).collect()
}

/// Runs several claims in sequence, each with its default scope unless
/// `systems` is given.
pub fn run_claims(
    ids: &[&str],
    max: usize,
    mode: EnumMode,
    systems: &[SubsetSystem],
    jobs: usize,
) -> Result<Vec<ClaimReport>> {
    let mut out = Vec::new();
    for id in ids {
        out.extend(run_claim(id, &sizes_up_to(max), mode, systems, jobs)?);
    }
    Ok(out)
}

/// The documented expectations on named fixtures, as single reports.
pub fn run_fixture_suite() -> Result<Vec<ClaimReport>> {
    let mut out = Vec::new();
    let fan3 = fixtures::fan3();
    let zs = ZScott::new(&fan3, Finite)?;
    let wm = continuity::weakly_meet(&zs);
    let expected = match &wm {
        Outcome::Fails(w) => {
            w.notes.iter().any(|(k, v)| k == "x" && v == "x")
                && w.notes.iter().any(|(k, v)| k == "D" && v == "{a,b}")
        }
        _ => false,
    };
    out.push(fixture_report(
        "fan3-not-weakly-meet",
        &fan3,
        Finite,
        expected,
        || {
            let mut w =
                Witness::new(&fan3).note("expected", "weakly meet fails at x with D = {a,b}");
            if let Outcome::Fails(got) = &wm {
                w.notes.extend(got.notes.iter().cloned());
            }
            w
        },
    ));

    let ladder = fixtures::ladder(3, 2);
    let c = crate::topology::lemma_lh_conditions(&ladder, Finite)?;
    let [_, _, c3, _, c5] = c.as_array();
    out.push(fixture_report(
        "ladder-3-without-5",
        &ladder,
        Finite,
        c3 && !c5 && c.pattern_holds(),
        || {
            Witness::new(&ladder)
                .note("condition 3", c3.to_string())
                .note("condition 5", c5.to_string())
        },
    ));

    let vee = fixtures::vee();
    let b = Beneath::of(&vee, Directed)?;
    let k = b.compacts();
    let want = vee.set_of(&["a", "b"])?;
    out.push(fixture_report(
        "vee-compacts",
        &vee,
        Directed,
        k == want,
        || Witness::new(&vee).note("compacts", vee.fmt_set(&k)),
    ));

    for kk in 1..=3 {
        let ex = fixtures::ex5(kk);
        let gap = monad::relative_cut_gap(&ex, Directed)?;
        out.push(fixture_report(
            &format!("ex5-{kk}-no-relative-cut-gap"),
            &ex,
            Directed,
            gap.is_none(),
            || Witness::new(&ex).note("D", ex.fmt_set(gap.as_ref().unwrap())),
        ));
    }
    Ok(out)
}

fn fixture_report(
    name: &str,
    p: &FinitePoset,
    z: SubsetSystem,
    ok: bool,
    witness: impl FnOnce() -> Witness,
) -> ClaimReport {
    let mut r = ClaimReport::single(
        &format!("fixture:{name}"),
        z.name(),
        p,
        Outcome::check(ok, witness),
    );
    r.add_note(inline_poset(p));
    r
}

/// Keeps the instance list of one sweep around, for callers that want the
/// failing posets themselves rather than rendered witnesses.
pub fn failing_instances(
    id: &str,
    n: usize,
    mode: EnumMode,
    z: SubsetSystem,
) -> Result<Vec<FinitePoset>> {
    let claim = lookup(id)?;
    let found = Mutex::new(Vec::new());
    let population = enumerate_posets(n, mode)?;
    population
        .par_iter()
        .enumerate()
        .try_for_each(|(i, p)| -> Result<()> {
            if claim.evaluate(p, z, &mut Tally::default())?.fails() {
                found.lock().expect("poisoned").push((i, p.clone()));
            }
            Ok(())
        })?;
    let mut v = found.into_inner().expect("poisoned");
    v.sort_by_key(|(i, _)| *i);
    Ok(v.into_iter().map(|(_, p)| p).collect())
}
