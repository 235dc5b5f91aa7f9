//! Fixed-universe bitsets over element indices.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use smallvec::SmallVec;

const WORD: usize = 64;

/// A subset of `{0, .., n-1}` for a fixed universe size `n`.
///
/// Sets are totally ordered by their value as a binary number (bit `i`
/// has weight `2^i`), which is the canonical order used by every set
/// family in the crate.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElemSet {
    n: usize,
    words: SmallVec<[u64; 2]>,
}

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

impl ElemSet {
    pub fn empty(n: usize) -> Self {
        ElemSet {
            n,
            words: SmallVec::from_elem(0, words_for(n)),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for (w, word) in s.words.iter_mut().enumerate() {
            let lo = w * WORD;
            if lo >= n {
                break;
            }
            let hi = (lo + WORD).min(n);
            *word = if hi - lo == WORD {
                u64::MAX
            } else {
                (1u64 << (hi - lo)) - 1
            };
        }
        s
    }

    pub fn singleton(n: usize, i: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(i);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(n: usize, it: I) -> Self {
        let mut s = Self::empty(n);
        for i in it {
            s.insert(i);
        }
        s
    }

    /// Builds a set from the low `n` bits of `bits`. Requires `n <= 64`.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        assert!(
            n <= WORD,
            "from_bits needs a universe of at most 64 elements"
        );
        let mask = if n == WORD { u64::MAX } else { (1u64 << n) - 1 };
        let mut s = Self::empty(n);
        s.words[0] = bits & mask;
        s
    }

    /// The set as a bit pattern, if the universe fits in one word.
    pub fn to_bits(&self) -> Option<u64> {
        (self.n <= WORD).then(|| self.words[0])
    }

    /// Size of the universe this set lives in.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.n && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.n, "index {i} outside universe of size {}", self.n);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.n {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
    }

    pub fn union_with(&mut self, other: &ElemSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &ElemSet) {
        debug_assert_eq!(self.n, other.n);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn union(&self, other: &ElemSet) -> ElemSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &ElemSet) -> ElemSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &ElemSet) -> ElemSet {
        let mut s = self.clone();
        for (a, b) in s.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        s
    }

    pub fn complement(&self) -> ElemSet {
        Self::full(self.n).difference(self)
    }

    pub fn is_subset(&self, other: &ElemSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &ElemSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            set: self,
            word: 0,
            bits: self.words[0],
        }
    }

    /// All subsets of `self`, in increasing canonical order.
    ///
    /// Panics if `self` has more than 63 members.
    pub fn subsets(&self) -> impl Iterator<Item = ElemSet> + '_ {
        let members: Vec<usize> = self.iter().collect();
        assert!(members.len() < 64, "too many members to enumerate subsets");
        let n = self.n;
        (0u64..(1u64 << members.len())).map(move |mask| {
            let mut s = ElemSet::empty(n);
            for (k, &m) in members.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    s.insert(m);
                }
            }
            s
        })
    }

    /// All subsets of the universe `{0..n-1}`. Requires `n < 64`.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = ElemSet> {
        assert!(n < WORD);
        (0u64..(1u64 << n)).map(move |b| ElemSet::from_bits(n, b))
    }
}

pub struct Iter<'a> {
    set: &'a ElemSet,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.bits != 0 {
                let tz = self.bits.trailing_zeros() as usize;
                self.bits &= self.bits - 1;
                return Some(self.word * WORD + tz);
            }
            self.word += 1;
            if self.word >= self.set.words.len() {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
    }
}

impl<'a> IntoIterator for &'a ElemSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl Ord for ElemSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            for (a, b) in self.words.iter().rev().zip(other.words.iter().rev()) {
                match a.cmp(b) {
                    Ordering::Equal => continue,
                    ord => return ord,
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for ElemSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElemSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for &ElemSet {
    type Output = ElemSet;
    fn bitor(self, rhs: &ElemSet) -> ElemSet {
        self.union(rhs)
    }
}

impl BitAnd for &ElemSet {
    type Output = ElemSet;
    fn bitand(self, rhs: &ElemSet) -> ElemSet {
        self.intersection(rhs)
    }
}

impl Sub for &ElemSet {
    type Output = ElemSet;
    fn sub(self, rhs: &ElemSet) -> ElemSet {
        self.difference(rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_complement_span_words() {
        let f = ElemSet::full(70);
        assert_eq!(f.len(), 70);
        assert!(f.contains(69));
        assert!(!f.contains(70));
        let s = ElemSet::from_indices(70, [0, 65]);
        let c = s.complement();
        assert_eq!(c.len(), 68);
        assert!(!c.contains(65));
        assert_eq!(c.iter().last(), Some(69));
    }

    #[test]
    fn canonical_order_is_numeric() {
        let a = ElemSet::from_indices(3, [0, 1]); // 3
        let b = ElemSet::from_indices(3, [2]); // 4
        assert!(a < b);
        let wide_lo = ElemSet::from_indices(100, [63]);
        let wide_hi = ElemSet::from_indices(100, [64]);
        assert!(wide_lo < wide_hi);
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let s = ElemSet::from_indices(5, [1, 3, 4]);
        let subs: Vec<_> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.iter().all(|t| t.is_subset(&s)));
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
    }

    proptest! {
        #[test]
        fn set_algebra_matches_bits(a in 0u64..1024, b in 0u64..1024) {
            let x = ElemSet::from_bits(10, a);
            let y = ElemSet::from_bits(10, b);
            prop_assert_eq!((&x | &y).to_bits(), Some(a | b));
            prop_assert_eq!((&x & &y).to_bits(), Some(a & b));
            prop_assert_eq!((&x - &y).to_bits(), Some(a & !b));
            prop_assert_eq!(x.is_subset(&y), a & !b == 0);
            prop_assert_eq!(x.cmp(&y), a.cmp(&b));
            prop_assert_eq!(x.iter().count(), a.count_ones() as usize);
        }
    }
}
