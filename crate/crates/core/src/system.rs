//! The built-in subset systems `Z` and their instances `Z(P)`.

use std::fmt;
use std::str::FromStr;

use crate::elemset::ElemSet;
use crate::error::{cap_check, Error, Result};
use crate::family::SetFamily;
use crate::poset::FinitePoset;

/// Cap on how many subsets a member or generator enumeration may visit.
pub const MEMBER_CAP: usize = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubsetSystem {
    Singletons,
    Chains,
    Directed,
    /// Every nonempty subset.
    Finite,
    /// Nonempty subsets connected in their own comparability graph.
    Connected,
}

impl SubsetSystem {
    pub const ALL: [SubsetSystem; 5] = [
        SubsetSystem::Singletons,
        SubsetSystem::Chains,
        SubsetSystem::Directed,
        SubsetSystem::Finite,
        SubsetSystem::Connected,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SubsetSystem::Singletons => "singletons",
            SubsetSystem::Chains => "chains",
            SubsetSystem::Directed => "directed",
            SubsetSystem::Finite => "finite",
            SubsetSystem::Connected => "connected",
        }
    }

    /// Membership `S ∈ Z(P)`. The empty set is never a member.
    pub fn contains(self, p: &FinitePoset, s: &ElemSet) -> bool {
        if s.is_empty() {
            return false;
        }
        match self {
            SubsetSystem::Singletons => s.len() == 1,
            SubsetSystem::Chains => p.is_chain(s),
            SubsetSystem::Directed => p.is_directed(s),
            SubsetSystem::Finite => true,
            SubsetSystem::Connected => p.is_connected_set(s),
        }
    }

    /// `Z(P)` in canonical order.
    pub fn members(self, p: &FinitePoset) -> Result<SetFamily> {
        let n = p.len();
        if self == SubsetSystem::Singletons {
            return Ok(SetFamily::new(n, (0..n).map(|i| p.singleton(i))));
        }
        if n >= 63 {
            return Err(Error::SizeCapExceeded {
                what: "subset-system members",
                size: n,
                cap: 20,
            });
        }
        cap_check("subset-system members", 1usize << n, MEMBER_CAP)?;
        Ok(SetFamily::new(
            n,
            p.carrier().subsets().filter(|s| self.contains(p, s)),
        ))
    }

    /// `{max S : S ∈ Z(P)}`. On a finite poset every cut `S^δ`, down-set
    /// `↓S` and meet `S ∩ U` with an upper set `U` depends only on these
    /// maximal-element antichains, so most computations quantify over them
    /// instead of over `Z(P)`.
    pub fn generators(self, p: &FinitePoset) -> Result<Vec<ElemSet>> {
        match self {
            SubsetSystem::Singletons | SubsetSystem::Chains | SubsetSystem::Directed => {
                Ok((0..p.len()).map(|i| p.singleton(i)).collect())
            }
            SubsetSystem::Finite => antichains(p, |_| true),
            SubsetSystem::Connected => antichains(p, |m| p.is_connected_set(&p.down_set(m))),
        }
    }

    /// Whether a lower set `w` lies in `I_Z(P) = {↓S : S ∈ Z(P)}`.
    pub fn in_iz(self, p: &FinitePoset, w: &ElemSet) -> bool {
        if w.is_empty() || !p.is_lower(w) {
            return false;
        }
        match self {
            SubsetSystem::Singletons | SubsetSystem::Chains | SubsetSystem::Directed => {
                p.maximal(w).len() == 1
            }
            SubsetSystem::Finite => true,
            SubsetSystem::Connected => p.is_connected_set(w),
        }
    }
}

/// Nonempty antichains of `p` passing `keep`, in canonical order.
pub fn antichains(p: &FinitePoset, keep: impl Fn(&ElemSet) -> bool) -> Result<Vec<ElemSet>> {
    fn go(
        p: &FinitePoset,
        i: usize,
        cur: &mut ElemSet,
        blocked: &ElemSet,
        out: &mut Vec<ElemSet>,
        visited: &mut usize,
        keep: &dyn Fn(&ElemSet) -> bool,
    ) -> Result<()> {
        *visited += 1;
        cap_check("antichain enumeration", *visited, MEMBER_CAP)?;
        if i == p.len() {
            if !cur.is_empty() && keep(cur) {
                out.push(cur.clone());
            }
            return Ok(());
        }
        go(p, i + 1, cur, blocked, out, visited, keep)?;
        if !blocked.contains(i) {
            cur.insert(i);
            let b = blocked.union(p.up_of(i)).union(p.down_of(i));
            go(p, i + 1, cur, &b, out, visited, keep)?;
            cur.remove(i);
        }
        Ok(())
    }
    let mut out = Vec::new();
    let mut cur = p.empty_set();
    let mut visited = 0;
    go(
        p,
        0,
        &mut cur,
        &p.empty_set(),
        &mut out,
        &mut visited,
        &keep,
    )?;
    out.sort();
    Ok(out)
}

impl fmt::Display for SubsetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SubsetSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SubsetSystem::ALL
            .into_iter()
            .find(|z| z.name() == s)
            .ok_or_else(|| Error::UnknownSystem(s.to_string()))
    }
}

/// Parses a comma-separated list such as `finite,directed`.
pub fn parse_system_list(s: &str) -> Result<Vec<SubsetSystem>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse())
        .collect()
}

/// Whether every member of `Z(P)` has a supremum.
pub fn is_zcpo(p: &FinitePoset, z: SubsetSystem) -> Result<bool> {
    Ok(z.generators(p)?.iter().all(|m| p.sup_of(m).is_some()))
}
