//! Bounded, per-instance checks of the structural properties a subset system
//! may have. None of these is a proof; each report says what was searched.

use crate::elemset::ElemSet;
use crate::enumerate::{enumerate_up_to, EnumMode};
use crate::error::{cap_check, Error, Result};
use crate::finp::{fin_poset, FinP};
use crate::io::inline_poset;
use crate::map::{enumerate_embeddings, enumerate_monotone_maps};
use crate::poset::FinitePoset;
use crate::report::{ClaimReport, Outcome, Witness};
use crate::system::SubsetSystem;

/// Largest bound accepted by the two sweeps over pairs of posets.
pub const AXIOM_BOUND_CAP: usize = 4;
/// Cap on pairs of families visited by [`check_ffup_instance`].
pub const PAIR_CAP: usize = 1 << 22;

fn family_label(fin: &FinP, g: &ElemSet) -> String {
    let parts: Vec<&str> = g.iter().map(|i| fin.poset().label(i)).collect();
    format!("{{{}}}", parts.join(","))
}

/// Singletons are members, and monotone images of members are members, over
/// every labeled pair of posets up to `bound` elements.
pub fn check_system_axioms(z: SubsetSystem, bound: usize) -> Result<ClaimReport> {
    cap_check("axiom bound", bound, AXIOM_BOUND_CAP)?;
    let posets = enumerate_up_to(bound, EnumMode::Labeled)?;
    let mut r = ClaimReport::new("system-axioms", z.name(), bound, "labeled");
    for p in &posets {
        let members = z.members(p)?;
        if let Some(x) = (0..p.len()).find(|&x| !z.contains(p, &p.singleton(x))) {
            r.record(Outcome::Fails(
                Witness::new(p).note("missing singleton", p.label(x)),
            ));
            continue;
        }
        for q in &posets {
            let bad = enumerate_monotone_maps(p, q)?.into_iter().find_map(|f| {
                members
                    .iter()
                    .find(|s| !z.contains(q, &f.image(s)))
                    .map(|s| (f.describe(), p.fmt_set(s)))
            });
            r.record(match bad {
                None => Outcome::Holds,
                Some((f, s)) => Outcome::Fails(
                    Witness::new(p)
                        .note("Q", inline_poset(q))
                        .note("f", f)
                        .note("S", s),
                ),
            });
        }
    }
    Ok(r)
}

/// Membership is reflected and preserved by every order embedding between
/// posets of at most `bound` elements. Iso classes are enough here since
/// all embeddings between them are enumerated.
pub fn check_subset_hereditary_instances(z: SubsetSystem, bound: usize) -> Result<ClaimReport> {
    cap_check("hereditary bound", bound, AXIOM_BOUND_CAP)?;
    let posets = enumerate_up_to(bound, EnumMode::UpToIso)?;
    let mut r = ClaimReport::new("subset-hereditary", z.name(), bound, "up-to-iso");
    for p in &posets {
        for q in posets.iter().filter(|q| q.len() >= p.len()) {
            let bad = enumerate_embeddings(p, q)?.into_iter().find_map(|f| {
                p.carrier()
                    .subsets()
                    .find(|d| !d.is_empty() && z.contains(p, d) != z.contains(q, &f.image(d)))
                    .map(|d| (f.describe(), p.fmt_set(&d)))
            });
            r.record(match bad {
                None => Outcome::Holds,
                Some((f, d)) => Outcome::Fails(
                    Witness::new(p)
                        .note("Q", inline_poset(q))
                        .note("f", f)
                        .note("D", d),
                ),
            });
        }
    }
    Ok(r)
}

/// Every principal down-set of `Fin P` is a member of `Z(Fin P)`.
pub fn check_property_m_instance(z: SubsetSystem, p: &FinitePoset) -> Result<ClaimReport> {
    let fin = fin_poset(p)?;
    let fp = fin.poset();
    let bad = (0..fp.len()).find(|&i| !z.contains(fp, fp.down_of(i)));
    let outcome = Outcome::check(bad.is_none(), || {
        let i = bad.unwrap();
        Witness::new(p)
            .note("F", fp.label(i))
            .note("family", family_label(&fin, fp.down_of(i)))
    });
    Ok(ClaimReport::single("property-m", z.name(), p, outcome))
}

/// Element-wise unions of two members of `Z(Fin P)` form a member again.
/// Longer tuples reduce to repeated pairs, since each intermediate family
/// is itself a member once the pair case holds.
pub fn check_ffup_instance(z: SubsetSystem, p: &FinitePoset) -> Result<ClaimReport> {
    let fin = fin_poset(p)?;
    let fp = fin.poset();
    let members = z.members(fp)?;
    cap_check("ffup pairs", members.len() * members.len(), PAIR_CAP)?;
    let union_family = |s1: &ElemSet, s2: &ElemSet| -> Result<ElemSet> {
        let mut out = fp.empty_set();
        for a in s1.iter() {
            for b in s2.iter() {
                let u = fin.sets()[a].union(&fin.sets()[b]);
                out.insert(
                    fin.index_of(&u)
                        .ok_or_else(|| Error::InvalidOrder("union left Fin P".into()))?,
                );
            }
        }
        Ok(out)
    };
    let mut bad = None;
    'outer: for (i, s1) in members.iter().enumerate() {
        for s2 in &members.sets()[i..] {
            let u = union_family(s1, s2)?;
            if !z.contains(fp, &u) {
                bad = Some((s1.clone(), s2.clone(), u));
                break 'outer;
            }
        }
    }
    let outcome = Outcome::check(bad.is_none(), || {
        let (s1, s2, u) = bad.unwrap();
        Witness::new(p)
            .note("S1", family_label(&fin, &s1))
            .note("S2", family_label(&fin, &s2))
            .note("unions", family_label(&fin, &u))
    });
    Ok(ClaimReport::single("ffup", z.name(), p, outcome))
}

/// `Z(P)` as a poset under inclusion; each member of `Z` of that poset must
/// have its union in `Z(P)`.
pub fn check_union_complete_instance(z: SubsetSystem, p: &FinitePoset) -> Result<ClaimReport> {
    let zp = z.members(p)?;
    let zpp = zp.inclusion_poset(p)?;
    let bad = z.members(&zpp)?.into_sets().into_iter().find_map(|fam| {
        let u = fam
            .iter()
            .fold(p.empty_set(), |acc, i| acc.union(&zp.sets()[i]));
        (!z.contains(p, &u)).then_some((fam, u))
    });
    let outcome = Outcome::check(bad.is_none(), || {
        let (fam, u) = bad.unwrap();
        let parts: Vec<String> = fam.iter().map(|i| p.fmt_set(&zp.sets()[i])).collect();
        Witness::new(p)
            .note("family", format!("{{{}}}", parts.join(",")))
            .note("union", p.fmt_set(&u))
    });
    Ok(ClaimReport::single("union-complete", z.name(), p, outcome))
}

/// Result of one Rudin search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RudinSearch {
    /// `E` is an upper set, `𝒢` is a member of `Z(Fin P)` and `⋂𝒢 ⊆ E`.
    pub hypotheses_hold: bool,
    /// The least `K` in canonical order meeting all four clauses.
    pub witness: Option<ElemSet>,
}

/// Exhaustive search for `K` over the subsets of the minimal elements of
/// the members of `𝒢` (given as element indices of `fin.poset()`).
pub fn rudin_search(
    z: SubsetSystem,
    p: &FinitePoset,
    fin: &FinP,
    e: &ElemSet,
    g: &ElemSet,
) -> Result<RudinSearch> {
    let gs: Vec<&ElemSet> = g.iter().map(|i| &fin.sets()[i]).collect();
    let meet = gs.iter().fold(p.carrier(), |acc, s| acc.intersection(s));
    let hypotheses_hold = p.is_upper(e) && z.contains(fin.poset(), g) && meet.is_subset(e);
    let mins: Vec<ElemSet> = gs.iter().map(|s| p.minimal(s)).collect();
    let pool = mins.iter().fold(p.empty_set(), |acc, m| acc.union(m));
    cap_check("Rudin candidate pool", pool.len(), 20)?;
    let ok = |k: &ElemSet| {
        mins.iter().all(|m| k.intersects(m))
            && z.contains(p, k)
            && p.upper_bounds(k).is_subset(e)
            && (0..gs.len()).all(|a| {
                (0..gs.len()).all(|b| {
                    !gs[a].is_subset(gs[b])
                        || k.intersection(&mins[a])
                            .is_subset(&p.up_set(&k.intersection(&mins[b])))
                })
            })
    };
    let witness = pool.subsets().find(|k| ok(k));
    Ok(RudinSearch {
        hypotheses_hold,
        witness,
    })
}

/// A single Rudin instance; `Inapplicable` when the hypotheses fail, in
/// which case the note still records what the search found.
pub fn check_rudin_instance(
    z: SubsetSystem,
    p: &FinitePoset,
    e: &ElemSet,
    g: &ElemSet,
) -> Result<ClaimReport> {
    let fin = fin_poset(p)?;
    let res = rudin_search(z, p, &fin, e, g)?;
    let found = match &res.witness {
        Some(k) => format!("K = {}", p.fmt_set(k)),
        None => "no K exists".to_string(),
    };
    let outcome = if !res.hypotheses_hold {
        Outcome::Inapplicable(format!("hypotheses fail; {found}"))
    } else {
        Outcome::check(res.witness.is_some(), || {
            Witness::new(p)
                .note("E", p.fmt_set(e))
                .note("G", family_label(&fin, g))
        })
    };
    let mut r = ClaimReport::single("rudin", z.name(), p, outcome);
    r.add_note(found);
    Ok(r)
}

/// Every member `𝒢` of `Z(Fin P)` against `E = ⋂𝒢`. Clause (iii) only gets
/// easier as `E` grows, so the least admissible `E` is the only one needed.
pub fn check_rudin_sweep(z: SubsetSystem, p: &FinitePoset) -> Result<ClaimReport> {
    let fin = fin_poset(p)?;
    let mut r = ClaimReport::new("rudin", z.name(), p.len(), "single");
    for g in z.members(fin.poset())?.iter() {
        let e = g
            .iter()
            .fold(p.carrier(), |acc, i| acc.intersection(&fin.sets()[i]));
        let res = rudin_search(z, p, &fin, &e, g)?;
        r.record(Outcome::check(res.witness.is_some(), || {
            Witness::new(p)
                .note("E", p.fmt_set(&e))
                .note("G", family_label(&fin, g))
        }));
    }
    Ok(r)
}

/// The four properties the main equivalence of weakly meet continuity
/// assumes, swept over every iso class up to `bound` elements. One report
/// per property; a report's counts are per poset.
pub fn standing_hypotheses(z: SubsetSystem, bound: usize) -> Result<Vec<ClaimReport>> {
    type Check = fn(SubsetSystem, &FinitePoset) -> Result<ClaimReport>;
    let checks: [(&str, Check); 4] = [
        ("union-complete", check_union_complete_instance),
        ("rudin", check_rudin_sweep),
        ("ffup", check_ffup_instance),
        ("property-m", check_property_m_instance),
    ];
    let posets = enumerate_up_to(bound, EnumMode::UpToIso)?;
    checks
        .iter()
        .map(|(name, check)| {
            let mut r = ClaimReport::new(name, z.name(), bound, "up-to-iso");
            for p in &posets {
                r.record(match check(z, p) {
                    Ok(rep) => rep.outcome(),
                    Err(e @ Error::SizeCapExceeded { .. }) => Outcome::Inapplicable(e.to_string()),
                    Err(e) => return Err(e),
                });
            }
            Ok(r)
        })
        .collect()
}

/// Convenience for callers holding a family rather than indices.
pub fn fin_family(fin: &FinP, sets: &[ElemSet]) -> Result<ElemSet> {
    let idx = sets
        .iter()
        .map(|s| {
            fin.index_of(s)
                .ok_or_else(|| Error::InvalidOrder(format!("{s:?} is not in Fin P")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ElemSet::from_indices(fin.sets().len(), idx))
}
