//! Order-preserving maps between finite posets.

use crate::elemset::ElemSet;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::poset::FinitePoset;

/// Default cap on how many maps an enumeration may produce.
pub const MAP_ENUM_CAP: usize = 1 << 20;

/// A total, order-preserving function table `dom → cod`.
#[derive(Clone, Debug)]
pub struct MonotoneMap<'a> {
    dom: &'a FinitePoset,
    cod: &'a FinitePoset,
    table: Vec<usize>,
}

impl PartialEq for MonotoneMap<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table
    }
}

impl Eq for MonotoneMap<'_> {}

impl<'a> MonotoneMap<'a> {
    /// Checks totality, range and monotonicity.
    pub fn new(dom: &'a FinitePoset, cod: &'a FinitePoset, table: Vec<usize>) -> Result<Self> {
        if table.len() != dom.len() {
            return Err(Error::NotMonotone(format!(
                "table has {} entries for {} elements",
                table.len(),
                dom.len()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= cod.len()) {
            return Err(Error::UnknownElement(bad));
        }
        for (x, y) in dom.strict_pairs() {
            if !cod.leq(table[x], table[y]) {
                return Err(Error::NotMonotone(format!(
                    "{} ≤ {} but {} ≰ {}",
                    dom.label(x),
                    dom.label(y),
                    cod.label(table[x]),
                    cod.label(table[y])
                )));
            }
        }
        Ok(MonotoneMap { dom, cod, table })
    }

    /// Builds a map from `(source label, target label)` pairs.
    pub fn from_labels(
        dom: &'a FinitePoset,
        cod: &'a FinitePoset,
        pairs: &[(&str, &str)],
    ) -> Result<Self> {
        let mut table = vec![usize::MAX; dom.len()];
        for (a, b) in pairs {
            let i = dom
                .index_of(a)
                .ok_or_else(|| Error::UnknownLabel(a.to_string()))?;
            let j = cod
                .index_of(b)
                .ok_or_else(|| Error::UnknownLabel(b.to_string()))?;
            table[i] = j;
        }
        if let Some(i) = table.iter().position(|&v| v == usize::MAX) {
            return Err(Error::NotMonotone(format!(
                "no image given for `{}`",
                dom.label(i)
            )));
        }
        Self::new(dom, cod, table)
    }

    pub fn identity(p: &'a FinitePoset) -> Self {
        MonotoneMap {
            dom: p,
            cod: p,
            table: (0..p.len()).collect(),
        }
    }

    pub fn constant(dom: &'a FinitePoset, cod: &'a FinitePoset, value: usize) -> Result<Self> {
        Self::new(dom, cod, vec![value; dom.len()])
    }

    pub fn dom(&self) -> &'a FinitePoset {
        self.dom
    }

    pub fn cod(&self) -> &'a FinitePoset {
        self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `f(A)`.
    pub fn image(&self, a: &ElemSet) -> ElemSet {
        ElemSet::from_indices(self.cod.len(), a.iter().map(|x| self.table[x]))
    }

    /// `f⁻¹(B)`.
    pub fn preimage(&self, b: &ElemSet) -> ElemSet {
        ElemSet::from_indices(
            self.dom.len(),
            (0..self.dom.len()).filter(|&x| b.contains(self.table[x])),
        )
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after<'b>(&self, first: &MonotoneMap<'b>) -> Result<MonotoneMap<'b>>
    where
        'a: 'b,
    {
        if first.cod != self.dom {
            return Err(Error::InvalidOrder(
                "composition of maps with mismatched posets".into(),
            ));
        }
        Ok(MonotoneMap {
            dom: first.dom,
            cod: self.cod,
            table: first.table.iter().map(|&y| self.table[y]).collect(),
        })
    }

    /// `x ≤ y` iff `f(x) ≤ f(y)`.
    pub fn is_order_embedding(&self) -> bool {
        (0..self.dom.len()).all(|x| {
            (0..self.dom.len())
                .all(|y| self.dom.leq(x, y) == self.cod.leq(self.table[x], self.table[y]))
        })
    }

    pub fn is_identity(&self) -> bool {
        self.table.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Renders the table as `a↦b, ..`.
    pub fn describe(&self) -> String {
        let parts: Vec<String> = self
            .table
            .iter()
            .enumerate()
            .map(|(i, &v)| format!("{}↦{}", self.dom.label(i), self.cod.label(v)))
            .collect();
        parts.join(", ")
    }
}

/// Every monotone map `p → q`, in lexicographic table order.
pub fn enumerate_monotone_maps<'a>(
    p: &'a FinitePoset,
    q: &'a FinitePoset,
) -> Result<Vec<MonotoneMap<'a>>> {
    enumerate_monotone_maps_capped(p, q, MAP_ENUM_CAP)
}

pub fn enumerate_monotone_maps_capped<'a>(
    p: &'a FinitePoset,
    q: &'a FinitePoset,
    cap: usize,
) -> Result<Vec<MonotoneMap<'a>>> {
    Ok(enumerate::monotone_tables(p, q, cap)?
        .into_iter()
        .map(|table| MonotoneMap {
            dom: p,
            cod: q,
            table,
        })
        .collect())
}

/// Every order embedding `p → q`.
pub fn enumerate_embeddings<'a>(
    p: &'a FinitePoset,
    q: &'a FinitePoset,
) -> Result<Vec<MonotoneMap<'a>>> {
    Ok(enumerate::embedding_tables(p, q, MAP_ENUM_CAP)?
        .into_iter()
        .map(|table| MonotoneMap {
            dom: p,
            cod: q,
            table,
        })
        .collect())
}
