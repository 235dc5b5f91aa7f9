//! Exhaustive poset enumeration, labeled or up to isomorphism.

use std::collections::BTreeMap;

use crate::error::{cap_check, Error, Result};
use crate::poset::FinitePoset;

/// Default upper bound on `n` for enumeration.
pub const DEFAULT_ENUM_CAP: usize = 6;
/// Hard bound: canonical codes are packed into a `u64`.
pub const MAX_ENUM_SIZE: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EnumMode {
    Labeled,
    UpToIso,
}

// Rows of the order matrix as bitmasks: bit j of rows[i] means i ≤ j.
type Rows = Vec<u16>;

fn default_labels(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("e{i}")
            }
        })
        .collect()
}

fn to_poset(rows: &Rows) -> FinitePoset {
    let n = rows.len();
    let labels = default_labels(n);
    let mut pairs = Vec::new();
    for (i, &r) in rows.iter().enumerate() {
        for j in 0..n {
            if r >> j & 1 == 1 && i != j {
                pairs.push((i, j));
            }
        }
    }
    FinitePoset::from_index_pairs(labels, &pairs)
        .expect("enumerated relation is a partial order")
        .with_name(format!(
            "P{n}_{:x}",
            code_of(rows, &(0..n).collect::<Vec<_>>())
        ))
}

fn rows_of(p: &FinitePoset) -> Rows {
    (0..p.len())
        .map(|i| p.up_of(i).to_bits().expect("small poset") as u16)
        .collect()
}

/// Every way to add one new element (index `n`) on top of `rows`.
fn extensions(rows: &Rows) -> Vec<Rows> {
    let n = rows.len();
    let down: Vec<u16> = (0..n)
        .map(|j| {
            (0..n)
                .filter(|&i| rows[i] >> j & 1 == 1)
                .fold(0u16, |m, i| m | 1 << i)
        })
        .collect();
    let is_lower = |s: u16| (0..n).all(|j| s >> j & 1 == 0 || down[j] & !s == 0);
    let is_upper = |s: u16| (0..n).all(|j| s >> j & 1 == 0 || rows[j] & !s == 0);
    let mut out = Vec::new();
    for d in 0u16..(1 << n) {
        if !is_lower(d) {
            continue;
        }
        // Every member of the new up-set must lie above all of `d`.
        let above_d = (0..n)
            .filter(|&j| d >> j & 1 == 1)
            .fold((1u16 << n) - 1, |m, j| m & rows[j])
            & !d;
        let mut u = above_d;
        loop {
            if is_upper(u) {
                let mut next: Rows = rows.clone();
                for (j, row) in next.iter_mut().enumerate() {
                    if d >> j & 1 == 1 {
                        *row |= 1 << n;
                    }
                }
                next.push(u | 1 << n);
                out.push(next);
            }
            if u == 0 {
                break;
            }
            u = (u - 1) & above_d;
        }
    }
    out
}

/// Packs the order matrix under `perm` (new index `k` is old `perm[k]`)
/// row-major, first entry most significant.
fn code_of(rows: &Rows, perm: &[usize]) -> u64 {
    let n = perm.len();
    let mut code = 0u64;
    for &pi in perm {
        for &pj in perm {
            code = code << 1 | (rows[pi] >> pj & 1) as u64;
        }
    }
    debug_assert!(n * n <= 64);
    code
}

/// Lexicographically least row-major matrix over all permutations, with
/// the permutation attaining it.
fn canonical(rows: &Rows) -> (u64, Vec<usize>) {
    let n = rows.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = (code_of(rows, &perm), perm.clone());
    // Heap's algorithm.
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            let code = code_of(rows, &perm);
            if code < best.0 {
                best = (code, perm.clone());
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

fn apply(rows: &Rows, perm: &[usize]) -> Rows {
    let n = rows.len();
    (0..n)
        .map(|k| {
            (0..n)
                .filter(|&l| rows[perm[k]] >> perm[l] & 1 == 1)
                .fold(0u16, |m, l| m | 1 << l)
        })
        .collect()
}

/// The canonical code of `p`: its least row-major order matrix over all
/// relabelings, packed into a `u64`. Isomorphic posets share a code.
pub fn canonical_code(p: &FinitePoset) -> Result<u64> {
    cap_check("canonical form", p.len(), MAX_ENUM_SIZE)?;
    Ok(canonical(&rows_of(p)).0)
}

/// `p` relabeled into canonical form, with labels `a, b, c, ..`.
pub fn canonical_form(p: &FinitePoset) -> Result<FinitePoset> {
    cap_check("canonical form", p.len(), MAX_ENUM_SIZE)?;
    let rows = rows_of(p);
    let (_, perm) = canonical(&rows);
    Ok(to_poset(&apply(&rows, &perm)))
}

pub fn enumerate_posets(n: usize, mode: EnumMode) -> Result<Vec<FinitePoset>> {
    enumerate_posets_capped(n, mode, DEFAULT_ENUM_CAP)
}

/// All posets on `n` points. Labeled mode lists every order relation on
/// `{a, b, ..}` once; up-to-iso mode lists one canonical representative per
/// class, sorted by canonical code. `n = 0` yields nothing.
pub fn enumerate_posets_capped(n: usize, mode: EnumMode, cap: usize) -> Result<Vec<FinitePoset>> {
    cap_check("poset enumeration size", n, cap.min(MAX_ENUM_SIZE))?;
    if n == 0 {
        return Ok(Vec::new());
    }
    Ok(match mode {
        EnumMode::Labeled => labeled_rows(n).iter().map(to_poset).collect(),
        EnumMode::UpToIso => iso_rows(n).iter().map(to_poset).collect(),
    })
}

/// Sizes `1..=max` concatenated, smallest first.
pub fn enumerate_up_to(max: usize, mode: EnumMode) -> Result<Vec<FinitePoset>> {
    let mut out = Vec::new();
    for n in 1..=max {
        out.extend(enumerate_posets(n, mode)?);
    }
    Ok(out)
}

fn labeled_rows(n: usize) -> Vec<Rows> {
    let mut level: Vec<Rows> = vec![Vec::new()];
    for _ in 0..n {
        level = level.iter().flat_map(extensions).collect();
    }
    level
}

fn iso_rows(n: usize) -> Vec<Rows> {
    let mut level: Vec<Rows> = vec![Vec::new()];
    for _ in 0..n {
        let mut next: BTreeMap<u64, Rows> = BTreeMap::new();
        for rows in &level {
            for ext in extensions(rows) {
                let (code, perm) = canonical(&ext);
                next.entry(code).or_insert_with(|| apply(&ext, &perm));
            }
        }
        level = next.into_values().collect();
    }
    level
}

/// Every monotone map `p → q`, as tables, in lexicographic table order.
pub fn monotone_tables(p: &FinitePoset, q: &FinitePoset, cap: usize) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut table = vec![usize::MAX; p.len()];
    // Assign along a linear extension so each new value only needs to sit
    // above the images of already-assigned predecessors.
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&i| (p.down_of(i).len(), i));
    fn go(
        p: &FinitePoset,
        q: &FinitePoset,
        order: &[usize],
        k: usize,
        table: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<()> {
        if k == order.len() {
            cap_check("monotone map enumeration", out.len() + 1, cap)?;
            out.push(table.clone());
            return Ok(());
        }
        let i = order[k];
        let mut allowed = q.carrier();
        for j in p.down_of(i).iter().filter(|&j| j != i) {
            allowed.intersect_with(q.up_of(table[j]));
        }
        for v in allowed.iter() {
            table[i] = v;
            go(p, q, order, k + 1, table, out, cap)?;
        }
        table[i] = usize::MAX;
        Ok(())
    }
    if p.is_empty() {
        return Ok(vec![Vec::new()]);
    }
    if q.is_empty() {
        return Ok(Vec::new());
    }
    go(p, q, &order, 0, &mut table, &mut out, cap)?;
    out.sort();
    Ok(out)
}

/// Monotone tables `p → q` agreeing with `pins` where given. `accept` sees
/// each partial table right after a new entry is written (unset entries
/// hold `usize::MAX`) and may reject it to prune the search. `cap` bounds
/// the number of search nodes.
pub fn pinned_monotone_tables(
    p: &FinitePoset,
    q: &FinitePoset,
    pins: &[Option<usize>],
    cap: usize,
    accept: &dyn Fn(&[usize], usize) -> bool,
) -> Result<Vec<Vec<usize>>> {
    struct Search<'s> {
        p: &'s FinitePoset,
        q: &'s FinitePoset,
        pins: &'s [Option<usize>],
        order: Vec<usize>,
        cap: usize,
        visited: usize,
        accept: &'s dyn Fn(&[usize], usize) -> bool,
        out: Vec<Vec<usize>>,
    }
    impl Search<'_> {
        fn go(&mut self, k: usize, table: &mut Vec<usize>) -> Result<()> {
            self.visited += 1;
            cap_check("pinned map search", self.visited, self.cap)?;
            if k == self.order.len() {
                self.out.push(table.clone());
                return Ok(());
            }
            let i = self.order[k];
            let mut allowed = match self.pins[i] {
                Some(v) => self.q.singleton(v),
                None => self.q.carrier(),
            };
            for j in self
                .p
                .down_of(i)
                .iter()
                .filter(|&j| j != i && table[j] != usize::MAX)
            {
                allowed.intersect_with(self.q.up_of(table[j]));
            }
            for j in self.p.up_of(i).iter().filter(|&j| j != i) {
                if let Some(v) = self.pins[j] {
                    allowed.intersect_with(self.q.down_of(v));
                }
            }
            for v in allowed.iter() {
                table[i] = v;
                if (self.accept)(table, i) {
                    self.go(k + 1, table)?;
                }
            }
            table[i] = usize::MAX;
            Ok(())
        }
    }
    if pins.len() != p.len() {
        return Err(Error::InvalidOrder(
            "pin list length differs from domain size".into(),
        ));
    }
    if let Some(&bad) = pins.iter().flatten().find(|&&v| v >= q.len()) {
        return Err(Error::UnknownElement(bad));
    }
    let mut order: Vec<usize> = (0..p.len()).collect();
    order.sort_by_key(|&i| (p.down_of(i).len(), i));
    let mut s = Search {
        p,
        q,
        pins,
        order,
        cap,
        visited: 0,
        accept,
        out: Vec::new(),
    };
    let mut table = vec![usize::MAX; p.len()];
    s.go(0, &mut table)?;
    s.out.sort();
    Ok(s.out)
}

/// Every order embedding `p → q`.
pub fn embedding_tables(p: &FinitePoset, q: &FinitePoset, cap: usize) -> Result<Vec<Vec<usize>>> {
    if p.len() > q.len() {
        return Ok(Vec::new());
    }
    Ok(monotone_tables(p, q, cap)?
        .into_iter()
        .filter(|t| (0..p.len()).all(|i| (0..p.len()).all(|j| p.leq(i, j) == q.leq(t[i], t[j]))))
        .collect())
}
