//! Named small posets used across tests, examples and the fixture suite.

use crate::poset::FinitePoset;

fn build(name: &str, labels: &[&str], pairs: &[(&str, &str)]) -> FinitePoset {
    FinitePoset::from_order_pairs(labels, pairs)
        .expect("fixture order is valid")
        .with_name(name)
}

/// `a < b < c`.
pub fn chain3() -> FinitePoset {
    build("CHAIN3", &["a", "b", "c"], &[("a", "b"), ("b", "c")])
}

/// `0 < 1`.
pub fn chain2() -> FinitePoset {
    build("CHAIN2", &["0", "1"], &[("0", "1")])
}

/// The one-element poset `{x}`.
pub fn one() -> FinitePoset {
    build("ONE", &["x"], &[])
}

/// Two incomparable points.
pub fn anti2() -> FinitePoset {
    build("ANTI2", &["a", "b"], &[])
}

/// `a, b < c`.
pub fn vee() -> FinitePoset {
    build("VEE", &["a", "b", "c"], &[("a", "c"), ("b", "c")])
}

/// `0 < a, b`.
pub fn lambda() -> FinitePoset {
    build("LAMBDA", &["0", "a", "b"], &[("0", "a"), ("0", "b")])
}

/// `a, b < c, d` with `c` and `d` incomparable.
pub fn twin() -> FinitePoset {
    build(
        "TWIN",
        &["a", "b", "c", "d"],
        &[("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")],
    )
}

/// `0 < a, b < 1`.
pub fn diamond() -> FinitePoset {
    build(
        "DIAMOND",
        &["0", "a", "b", "1"],
        &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")],
    )
}

/// `a, b, x < t`.
pub fn fan3() -> FinitePoset {
    build(
        "FAN3",
        &["a", "b", "x", "t"],
        &[("a", "t"), ("b", "t"), ("x", "t")],
    )
}

/// A chain `e1 < .. < en`.
pub fn chain(n: usize) -> FinitePoset {
    let labels: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    let pairs: Vec<(String, String)> = labels
        .windows(2)
        .map(|w| (w[0].clone(), w[1].clone()))
        .collect();
    FinitePoset::from_order_pairs(&labels, &pairs)
        .expect("chain")
        .with_name(format!("CHAIN{n}"))
}

/// `n` pairwise incomparable points.
pub fn antichain(n: usize) -> FinitePoset {
    let labels: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    FinitePoset::from_order_pairs::<String>(&labels, &[])
        .expect("antichain")
        .with_name(format!("ANTI{n}"))
}

/// Finite truncation of the two-branch ladder: a chain `n1 < .. < nk`
/// lying below two descending branches `lm < .. < l1` and `rm < .. < r1`.
/// The branches are mutually incomparable.
pub fn ladder(k: usize, m: usize) -> FinitePoset {
    let mut labels = Vec::new();
    let mut pairs = Vec::new();
    for i in 1..=k {
        labels.push(format!("n{i}"));
        if i > 1 {
            pairs.push((format!("n{}", i - 1), format!("n{i}")));
        }
    }
    for side in ["l", "r"] {
        for j in 1..=m {
            labels.push(format!("{side}{j}"));
            if j > 1 {
                pairs.push((format!("{side}{j}"), format!("{side}{}", j - 1)));
            }
        }
        if k > 0 && m > 0 {
            pairs.push((format!("n{k}"), format!("{side}{m}")));
        }
    }
    FinitePoset::from_order_pairs(&labels, &pairs)
        .expect("ladder")
        .with_name(format!("LADDER_{k}_{m}"))
}

/// Finite truncation of the five-point extension of a chain: `n1 < .. < nk`
/// below `a, b, c, d`, with `a, b < c`, `d` incomparable to `a, b, c`, and
/// everything below `top`.
pub fn ex5(k: usize) -> FinitePoset {
    let mut labels: Vec<String> = (1..=k).map(|i| format!("n{i}")).collect();
    let mut pairs: Vec<(String, String)> = Vec::new();
    for i in 2..=k {
        pairs.push((format!("n{}", i - 1), format!("n{i}")));
    }
    for l in ["a", "b", "c", "d", "top"] {
        labels.push(l.to_string());
        if k > 0 {
            pairs.push((format!("n{k}"), l.to_string()));
        }
    }
    for (x, y) in [("a", "c"), ("b", "c"), ("c", "top"), ("d", "top")] {
        pairs.push((x.to_string(), y.to_string()));
    }
    FinitePoset::from_order_pairs(&labels, &pairs)
        .expect("ex5")
        .with_name(format!("EX5_{k}"))
}

/// Looks a fixture up by its name, case-insensitively. `LADDER_k_m`,
/// `EX5_k`, `CHAINn` and `ANTIn` are parameterized.
pub fn by_name(name: &str) -> Option<FinitePoset> {
    let up = name.to_ascii_uppercase();
    let fixed = match up.as_str() {
        "CHAIN3" => Some(chain3()),
        "CHAIN2" => Some(chain2()),
        "ONE" => Some(one()),
        "ANTI2" => Some(anti2()),
        "VEE" => Some(vee()),
        "LAMBDA" => Some(lambda()),
        "TWIN" => Some(twin()),
        "DIAMOND" => Some(diamond()),
        "FAN3" => Some(fan3()),
        _ => None,
    };
    if fixed.is_some() {
        return fixed;
    }
    let parse = |s: &str| s.parse::<usize>().ok().filter(|&v| v <= 16);
    if let Some(rest) = up.strip_prefix("LADDER_") {
        let (k, m) = rest.split_once('_')?;
        return Some(ladder(parse(k)?, parse(m)?));
    }
    if let Some(rest) = up.strip_prefix("EX5_") {
        return Some(ex5(parse(rest)?));
    }
    if let Some(rest) = up.strip_prefix("CHAIN") {
        return parse(rest).filter(|&n| n > 0).map(chain);
    }
    if let Some(rest) = up.strip_prefix("ANTI") {
        return parse(rest).filter(|&n| n > 0).map(antichain);
    }
    None
}

/// The fixed, unparameterized fixtures in a stable order.
pub fn all_named() -> Vec<FinitePoset> {
    vec![
        one(),
        chain2(),
        chain3(),
        anti2(),
        vee(),
        lambda(),
        twin(),
        diamond(),
        fan3(),
        ladder(3, 2),
        ex5(2),
    ]
}
