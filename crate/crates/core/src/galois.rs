//! Galois connections between finite posets, and how a lower adjoint
//! interacts with cuts, subbasic closed sets and the beneath relation.

use crate::continuity::Beneath;
use crate::elemset::ElemSet;
use crate::enumerate::monotone_tables;
use crate::error::{cap_check, Error, Result};
use crate::io::inline_poset;
use crate::map::{MonotoneMap, MAP_ENUM_CAP};
use crate::poset::FinitePoset;
use crate::report::{Outcome, Witness};
use crate::system::SubsetSystem;
use crate::topology::ZScott;

/// `d: T → S` (lower) and `g: S → T` (upper) with `d(a) ≤ y ⇔ a ≤ g(y)`.
#[derive(Clone, Debug)]
pub struct GaloisConnection<'a> {
    lower: MonotoneMap<'a>,
    upper: MonotoneMap<'a>,
}

/// First pair `(a, y)` where the adjunction equivalence breaks.
pub fn galois_violation(
    lower: &MonotoneMap<'_>,
    upper: &MonotoneMap<'_>,
) -> Option<(usize, usize)> {
    let (t, s) = (lower.dom(), lower.cod());
    (0..t.len())
        .flat_map(|a| (0..s.len()).map(move |y| (a, y)))
        .find(|&(a, y)| s.leq(lower.apply(a), y) != t.leq(a, upper.apply(y)))
}

pub fn check_galois(lower: &MonotoneMap<'_>, upper: &MonotoneMap<'_>) -> bool {
    lower.dom() == upper.cod()
        && lower.cod() == upper.dom()
        && galois_violation(lower, upper).is_none()
}

/// `g(y) = max{a : d(a) ≤ y}`, if that maximum exists for every `y`.
pub fn upper_adjoint_of<'a>(d: &MonotoneMap<'a>) -> Option<MonotoneMap<'a>> {
    let (t, s) = (d.dom(), d.cod());
    let table = (0..s.len())
        .map(|y| {
            t.greatest_in(&ElemSet::from_indices(
                t.len(),
                (0..t.len()).filter(|&a| s.leq(d.apply(a), y)),
            ))
        })
        .collect::<Option<Vec<_>>>()?;
    MonotoneMap::new(s, t, table).ok()
}

/// `d(a) = min{y : a ≤ g(y)}`, if that minimum exists for every `a`.
pub fn lower_adjoint_of<'a>(g: &MonotoneMap<'a>) -> Option<MonotoneMap<'a>> {
    let (s, t) = (g.dom(), g.cod());
    let table = (0..t.len())
        .map(|a| {
            s.least_in(&ElemSet::from_indices(
                s.len(),
                (0..s.len()).filter(|&y| t.leq(a, g.apply(y))),
            ))
        })
        .collect::<Option<Vec<_>>>()?;
    MonotoneMap::new(t, s, table).ok()
}

impl<'a> GaloisConnection<'a> {
    pub fn new(lower: MonotoneMap<'a>, upper: MonotoneMap<'a>) -> Result<Self> {
        if lower.dom() != upper.cod() || lower.cod() != upper.dom() {
            return Err(Error::InvalidOrder(
                "adjoint maps are not wired T → S → T".into(),
            ));
        }
        if let Some((a, y)) = galois_violation(&lower, &upper) {
            return Err(Error::Inapplicable(format!(
                "not a Galois connection at a={}, y={}",
                lower.dom().label(a),
                lower.cod().label(y)
            )));
        }
        Ok(GaloisConnection { lower, upper })
    }

    /// Pairs `d` with its upper adjoint, when it has one.
    pub fn from_lower(d: MonotoneMap<'a>) -> Option<Self> {
        let g = upper_adjoint_of(&d)?;
        Some(GaloisConnection { lower: d, upper: g })
    }

    pub fn lower(&self) -> &MonotoneMap<'a> {
        &self.lower
    }

    pub fn upper(&self) -> &MonotoneMap<'a> {
        &self.upper
    }

    /// The domain of the lower adjoint.
    pub fn t(&self) -> &'a FinitePoset {
        self.lower.dom()
    }

    pub fn s(&self) -> &'a FinitePoset {
        self.lower.cod()
    }
}

/// Every Galois connection with lower adjoint `T → S`, ordered by the
/// lower adjoint's table.
pub fn galois_connections<'a>(
    t: &'a FinitePoset,
    s: &'a FinitePoset,
) -> Result<Vec<GaloisConnection<'a>>> {
    Ok(monotone_tables(t, s, MAP_ENUM_CAP)?
        .into_iter()
        .filter_map(|tab| GaloisConnection::from_lower(MonotoneMap::new(t, s, tab).ok()?))
        .collect())
}

/// Per-connection results of the three lemmas.
#[derive(Clone, Debug)]
pub struct GaloisSuite {
    /// `d(A^δ) ⊆ d(A)^δ` for every `A ⊆ T`.
    pub cuts: Outcome,
    /// `↓g(C)` is subbasic closed in `T` for every subbasic closed `C` of `S`.
    pub closed: Outcome,
    /// The implication between cut-preservation by `g` and ≺-preservation
    /// by `d`, with the converse only demanded when `T` is δ_Z-continuous.
    pub beneath: Outcome,
    /// `g(A^δ) ⊆ g(A)^δ` for every nonempty closed `A` of `S`.
    pub g_preserves_cuts: bool,
    /// The same inclusion fails at `A = ∅`. The beneath relation only
    /// looks at nonempty closed sets, so this case is reported separately
    /// instead of feeding the implication.
    pub empty_set_breaks_cuts: bool,
    pub d_preserves_beneath: bool,
    pub t_delta_continuous: bool,
}

impl GaloisSuite {
    pub fn all_hold(&self) -> bool {
        self.cuts.holds() && self.closed.holds() && self.beneath.holds()
    }

    /// `d` preserves ≺ but `g` does not preserve cuts, on a `T` that is not
    /// δ_Z-continuous: the converse direction is simply not asked for.
    pub fn converse_not_required(&self) -> bool {
        self.d_preserves_beneath && !self.g_preserves_cuts && !self.t_delta_continuous
    }
}

pub fn galois_lemma_suite(gc: &GaloisConnection<'_>, z: SubsetSystem) -> Result<GaloisSuite> {
    let (t, s) = (gc.t(), gc.s());
    let (d, g) = (gc.lower(), gc.upper());
    let base = || {
        Witness::new(t)
            .note("S", inline_poset(s))
            .note("d", d.describe())
            .note("g", g.describe())
            .note("system", z.name())
    };
    cap_check("galois cut clause", t.len(), 20)?;
    let bad_cut = t
        .carrier()
        .subsets()
        .find(|a| !d.image(&t.cut(a)).is_subset(&s.cut(&d.image(a))));
    let cuts = Outcome::check(bad_cut.is_none(), || {
        base().note("A", t.fmt_set(bad_cut.as_ref().unwrap()))
    });

    let zs_s = ZScott::new(s, z)?;
    let zs_t = ZScott::new(t, z)?;
    let gamma_s = zs_s.gamma()?;
    let bad_closed = gamma_s
        .iter()
        .find(|c| !zs_t.is_closed(&t.down_set(&g.image(c))));
    let closed = Outcome::check(bad_closed.is_none(), || {
        base().note("C", s.fmt_set(bad_closed.unwrap()))
    });

    let breaks = |a: &ElemSet| !g.image(&s.cut(a)).is_subset(&t.cut(&g.image(a)));
    let bad1 = gamma_s.iter().find(|a| !a.is_empty() && breaks(a));
    let bt = Beneath::new(&zs_t)?;
    let bs = Beneath::new(&zs_s)?;
    let bad2 = bt
        .pairs()
        .into_iter()
        .find(|&(x, y)| !bs.beneath(d.apply(x), d.apply(y)));
    let t_delta_continuous = bt.delta_continuity().holds();
    let beneath = match (bad1, bad2) {
        (None, Some((x, y))) => Outcome::Fails(
            base()
                .note(
                    "violation",
                    "g preserves cuts of closed sets but d does not preserve beneath",
                )
                .note("pair", format!("{} ≺ {}", t.label(x), t.label(y))),
        ),
        (Some(a), None) if t_delta_continuous => Outcome::Fails(
            base()
                .note(
                    "violation",
                    "T is delta-continuous and d preserves beneath, but g breaks a cut",
                )
                .note("A", s.fmt_set(a)),
        ),
        _ => Outcome::Holds,
    };
    Ok(GaloisSuite {
        cuts,
        closed,
        beneath,
        g_preserves_cuts: bad1.is_none(),
        empty_set_breaks_cuts: breaks(&s.empty_set()),
        d_preserves_beneath: bad2.is_none(),
        t_delta_continuous,
    })
}
