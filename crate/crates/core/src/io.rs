//! The plain-text poset format.
//!
//! ```text
//! poset VEE
//! elements a b c
//! order a<c
//! order b<c
//! end
//! ```
//!
//! `#` starts a comment. Order pairs may be any `x<y` facts; the reflexive
//! transitive closure is taken and cycles are rejected.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::poset::FinitePoset;

fn valid_label(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_poset(text: &str) -> Result<FinitePoset> {
    let mut name: Option<String> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut pairs: Vec<(String, String)> = Vec::new();
    let mut ended = false;
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let err = |msg: &str| Error::Parse {
            line: line_no,
            msg: msg.to_string(),
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if ended {
            return Err(err("content after `end`"));
        }
        let mut toks = line.split_whitespace();
        let head = toks.next().unwrap_or_default();
        match head {
            "poset" => {
                if name.is_some() {
                    return Err(err("duplicate `poset` line"));
                }
                let n = toks.next().ok_or_else(|| err("missing poset name"))?;
                if toks.next().is_some() {
                    return Err(err("trailing tokens after poset name"));
                }
                name = Some(n.to_string());
            }
            "elements" => {
                if name.is_none() {
                    return Err(err("`elements` before `poset`"));
                }
                if labels.is_some() {
                    return Err(err("duplicate `elements` line"));
                }
                let ls: Vec<String> = toks.map(str::to_string).collect();
                if let Some(bad) = ls.iter().find(|l| !valid_label(l)) {
                    return Err(err(&format!("invalid label `{bad}`")));
                }
                labels = Some(ls);
            }
            "order" => {
                if labels.is_none() {
                    return Err(err("`order` before `elements`"));
                }
                let mut any = false;
                for tok in toks {
                    let (a, b) = tok
                        .split_once('<')
                        .ok_or_else(|| err(&format!("expected `x<y`, got `{tok}`")))?;
                    if !valid_label(a) || !valid_label(b) {
                        return Err(err(&format!("invalid order pair `{tok}`")));
                    }
                    pairs.push((a.to_string(), b.to_string()));
                    any = true;
                }
                if !any {
                    return Err(err("empty `order` line"));
                }
            }
            "end" => {
                if labels.is_none() {
                    return Err(err("`end` before `elements`"));
                }
                ended = true;
            }
            other => return Err(err(&format!("unknown directive `{other}`"))),
        }
    }
    if !ended {
        return Err(Error::Parse {
            line: text.lines().count(),
            msg: "missing `end`".into(),
        });
    }
    let labels = labels.expect("checked above");
    let p = FinitePoset::from_order_pairs(&labels, &pairs)?;
    Ok(p.with_name(name.expect("checked above")))
}

/// Writes `p` using its cover relation.
pub fn write_poset(p: &FinitePoset) -> String {
    let mut s = String::new();
    let name: String = p
        .name()
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '_' {
                c
            } else {
                '_'
            }
        })
        .collect();
    let _ = writeln!(
        s,
        "poset {}",
        if name.is_empty() {
            "P".to_string()
        } else {
            name
        }
    );
    let _ = writeln!(s, "elements {}", p.labels().join(" "));
    for (a, b) in p.covers() {
        let _ = writeln!(s, "order {}<{}", p.label(a), p.label(b));
    }
    s.push_str("end\n");
    s
}

/// One-line rendering `a b c | a<c b<c` used inside witness notes.
pub fn inline_poset(p: &FinitePoset) -> String {
    let covers: Vec<String> = p
        .covers()
        .iter()
        .map(|&(a, b)| format!("{}<{}", p.label(a), p.label(b)))
        .collect();
    format!("{} | {}", p.labels().join(" "), covers.join(" "))
}

pub fn read_poset_file(path: &Path) -> Result<FinitePoset> {
    parse_poset(&std::fs::read_to_string(path)?)
}

/// Splits a file holding several posets (e.g. a counterexample dump) into
/// the parsed posets, ignoring comment lines between blocks.
pub fn parse_many(text: &str) -> Result<Vec<FinitePoset>> {
    let mut out = Vec::new();
    let mut block = String::new();
    for line in text.lines() {
        let bare = line.split('#').next().unwrap_or("").trim();
        if bare.is_empty() && block.is_empty() {
            continue;
        }
        block.push_str(line);
        block.push('\n');
        if bare == "end" {
            out.push(parse_poset(&block)?);
            block.clear();
        }
    }
    if !block.trim().is_empty()
        && block
            .lines()
            .any(|l| !l.trim_start().starts_with('#') && !l.trim().is_empty())
    {
        return Err(Error::Parse {
            line: text.lines().count(),
            msg: "unterminated poset block".into(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn round_trip() {
        for p in fixtures::all_named() {
            let q = parse_poset(&write_poset(&p)).unwrap();
            assert_eq!(q.labels(), p.labels());
            for i in 0..p.len() {
                assert_eq!(q.up_of(i), p.up_of(i));
            }
        }
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_poset("poset X\nelements a b\norder a<b\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_poset("poset X\nelements a b\norder a-b\nend\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_poset("poset X\nelements a b\norder a<b b<a\nend\n"),
            Err(Error::AntisymmetryViolation(..))
        ));
        assert!(matches!(
            parse_poset("poset X\nelements a\norder a<z\nend\n"),
            Err(Error::UnknownLabel(_))
        ));
    }

    #[test]
    fn comments_and_multi() {
        let text = "# header\nposet A # trailing\nelements x y\norder x<y\nend\n# gap\nposet B\nelements z\nend\n";
        let ps = parse_many(text).unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps[1].name(), "B");
    }
}
