//! Graphviz output: the Hasse diagram, optionally overlaid with ≪_Z or ≺_Z.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::continuity::{Beneath, WayBelow};
use crate::error::{cap_check, Error, Result};
use crate::poset::FinitePoset;
use crate::system::SubsetSystem;

/// Largest poset rendered.
pub const DOT_CAP: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Overlay {
    None,
    WayBelow,
    Beneath,
}

impl FromStr for Overlay {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "none" => Ok(Overlay::None),
            "waybelow" => Ok(Overlay::WayBelow),
            "beneath" => Ok(Overlay::Beneath),
            other => Err(Error::Parse {
                line: 0,
                msg: format!("unknown overlay `{other}`"),
            }),
        }
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Hasse edges are solid and point upward; overlay edges are dashed and
/// labelled. Reflexive overlay pairs are left out.
pub fn export_dot(p: &FinitePoset, overlay: Overlay, z: SubsetSystem) -> Result<String> {
    cap_check("DOT export", p.len(), DOT_CAP)?;
    let mut s = String::new();
    let name = if p.name().is_empty() { "P" } else { p.name() };
    let _ = writeln!(s, "digraph {} {{", quote(name));
    let _ = writeln!(s, "  rankdir=BT;");
    let _ = writeln!(s, "  node [shape=circle];");
    for l in p.labels() {
        let _ = writeln!(s, "  {};", quote(l));
    }
    for (a, b) in p.covers() {
        let _ = writeln!(s, "  {} -> {};", quote(p.label(a)), quote(p.label(b)));
    }
    let (pairs, tag): (Vec<(usize, usize)>, &str) = match overlay {
        Overlay::None => (Vec::new(), ""),
        Overlay::WayBelow => {
            let wb = WayBelow::of(p, z)?;
            let v = (0..p.len())
                .flat_map(|x| (0..p.len()).map(move |y| (x, y)))
                .filter(|&(x, y)| wb.below(x, y))
                .collect();
            (v, "waybelow")
        }
        Overlay::Beneath => (Beneath::of(p, z)?.pairs(), "beneath"),
    };
    for (x, y) in pairs.into_iter().filter(|(x, y)| x != y) {
        let _ = writeln!(
            s,
            "  {} -> {} [style=dashed, constraint=false, label={}];",
            quote(p.label(x)),
            quote(p.label(y)),
            quote(tag)
        );
    }
    s.push_str("}\n");
    Ok(s)
}
