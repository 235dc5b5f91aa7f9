//! A deliberately naive reference implementation.
//!
//! Everything here follows the definitions literally: it quantifies over
//! every subset, never uses the generator reduction, the Alexandrov fast
//! paths, or any library helper beyond reading the order relation.

#![allow(dead_code)]

use zdt::{ElemSet, FinitePoset, SubsetSystem};

pub type Mask = u64;

#[derive(Clone, Debug)]
pub struct OPoset {
    pub n: usize,
    pub leq: Vec<Vec<bool>>,
}

pub fn bit(i: usize) -> Mask {
    1 << i
}

pub fn has(m: Mask, i: usize) -> bool {
    m >> i & 1 == 1
}

pub fn members(m: Mask, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| has(m, i)).collect()
}

pub fn to_mask(s: &ElemSet) -> Mask {
    s.iter().fold(0, |m, i| m | bit(i))
}

pub fn to_set(n: usize, m: Mask) -> ElemSet {
    ElemSet::from_indices(n, (0..n).filter(|&i| has(m, i)))
}

impl OPoset {
    pub fn from(p: &FinitePoset) -> Self {
        let n = p.len();
        OPoset {
            n,
            leq: (0..n)
                .map(|i| (0..n).map(|j| p.leq(i, j)).collect())
                .collect(),
        }
    }

    pub fn from_relation(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        OPoset {
            n,
            leq: (0..n).map(|i| (0..n).map(|j| f(i, j)).collect()).collect(),
        }
    }

    pub fn full(&self) -> Mask {
        if self.n == 64 {
            u64::MAX
        } else {
            (1 << self.n) - 1
        }
    }

    pub fn subsets(&self) -> impl Iterator<Item = Mask> {
        assert!(self.n <= 20, "oracle only handles small carriers");
        0..(1u64 << self.n)
    }

    pub fn up(&self, a: Mask) -> Mask {
        (0..self.n)
            .filter(|&p| (0..self.n).any(|x| has(a, x) && self.leq[x][p]))
            .fold(0, |m, p| m | bit(p))
    }

    pub fn down(&self, a: Mask) -> Mask {
        (0..self.n)
            .filter(|&p| (0..self.n).any(|x| has(a, x) && self.leq[p][x]))
            .fold(0, |m, p| m | bit(p))
    }

    pub fn ub(&self, a: Mask) -> Mask {
        (0..self.n)
            .filter(|&p| (0..self.n).all(|x| !has(a, x) || self.leq[x][p]))
            .fold(0, |m, p| m | bit(p))
    }

    pub fn lb(&self, a: Mask) -> Mask {
        (0..self.n)
            .filter(|&p| (0..self.n).all(|x| !has(a, x) || self.leq[p][x]))
            .fold(0, |m, p| m | bit(p))
    }

    pub fn cut(&self, e: Mask) -> Mask {
        self.lb(self.ub(e))
    }

    pub fn rel_cut(&self, e: Mask, a: Mask) -> Mask {
        let u = self.ub(e) & a;
        (0..self.n)
            .filter(|&p| has(a, p) && (0..self.n).all(|m| !has(u, m) || self.leq[p][m]))
            .fold(0, |m, p| m | bit(p))
    }

    pub fn sup(&self, a: Mask) -> Option<usize> {
        let u = self.ub(a);
        (0..self.n).find(|&s| has(u, s) && (0..self.n).all(|t| !has(u, t) || self.leq[s][t]))
    }

    pub fn inf(&self, a: Mask) -> Option<usize> {
        let l = self.lb(a);
        (0..self.n).find(|&s| has(l, s) && (0..self.n).all(|t| !has(l, t) || self.leq[t][s]))
    }

    pub fn is_lower(&self, a: Mask) -> bool {
        self.down(a) == a
    }

    pub fn is_upper(&self, a: Mask) -> bool {
        self.up(a) == a
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq[i][j] || self.leq[j][i]
    }

    pub fn is_filtered(&self, a: Mask) -> bool {
        a != 0
            && members(a, self.n).iter().all(|&i| {
                members(a, self.n)
                    .iter()
                    .all(|&j| (0..self.n).any(|k| has(a, k) && self.leq[k][i] && self.leq[k][j]))
            })
    }

    /// Restriction to `a`, with the index map back into `self`.
    pub fn restrict(&self, a: Mask) -> (OPoset, Vec<usize>) {
        let idx = members(a, self.n);
        let sub = OPoset::from_relation(idx.len(), |i, j| self.leq[idx[i]][idx[j]]);
        (sub, idx)
    }
}

pub fn lift(idx: &[usize], m: Mask) -> Mask {
    idx.iter()
        .enumerate()
        .filter(|(k, _)| has(m, *k))
        .fold(0, |acc, (_, &i)| acc | bit(i))
}

pub fn pull(idx: &[usize], m: Mask) -> Mask {
    idx.iter()
        .enumerate()
        .filter(|(_, &i)| has(m, i))
        .fold(0, |acc, (k, _)| acc | bit(k))
}

pub fn z_contains(p: &OPoset, z: SubsetSystem, s: Mask) -> bool {
    if s == 0 {
        return false;
    }
    let ms = members(s, p.n);
    match z {
        SubsetSystem::Singletons => ms.len() == 1,
        SubsetSystem::Chains => ms.iter().all(|&i| ms.iter().all(|&j| p.comparable(i, j))),
        SubsetSystem::Directed => ms.iter().all(|&i| {
            ms.iter()
                .all(|&j| ms.iter().any(|&k| p.leq[i][k] && p.leq[j][k]))
        }),
        SubsetSystem::Finite => true,
        SubsetSystem::Connected => {
            let mut seen = bit(ms[0]);
            loop {
                let mut next = seen;
                for &i in &ms {
                    if has(seen, i) {
                        for &j in &ms {
                            if p.comparable(i, j) {
                                next |= bit(j);
                            }
                        }
                    }
                }
                if next == seen {
                    break;
                }
                seen = next;
            }
            seen == s
        }
    }
}

pub fn z_members(p: &OPoset, z: SubsetSystem) -> Vec<Mask> {
    p.subsets().filter(|&s| z_contains(p, z, s)).collect()
}

pub struct OZ {
    pub p: OPoset,
    pub z: SubsetSystem,
    pub zm: Vec<Mask>,
}

impl OZ {
    pub fn new(p: OPoset, z: SubsetSystem) -> Self {
        let zm = z_members(&p, z);
        OZ { p, z, zm }
    }

    pub fn of(p: &FinitePoset, z: SubsetSystem) -> Self {
        OZ::new(OPoset::from(p), z)
    }

    pub fn is_gamma(&self, a: Mask) -> bool {
        self.zm
            .iter()
            .all(|&s| s & !a != 0 || self.p.cut(s) & !a == 0)
    }

    pub fn is_sigma(&self, u: Mask) -> bool {
        self.zm
            .iter()
            .all(|&s| self.p.cut(s) & u == 0 || s & u != 0)
    }

    pub fn gamma(&self) -> Vec<Mask> {
        self.p.subsets().filter(|&a| self.is_gamma(a)).collect()
    }

    pub fn sigma(&self) -> Vec<Mask> {
        self.p.subsets().filter(|&u| self.is_sigma(u)).collect()
    }

    pub fn gamma_topology(&self) -> Vec<Mask> {
        let mut fam: std::collections::BTreeSet<Mask> = self.gamma().into_iter().collect();
        fam.insert(0);
        fam.insert(self.p.full());
        loop {
            let v: Vec<Mask> = fam.iter().copied().collect();
            let mut grew = false;
            for &a in &v {
                for &b in &v {
                    grew |= fam.insert(a | b);
                    grew |= fam.insert(a & b);
                }
            }
            if !grew {
                return fam.into_iter().collect();
            }
        }
    }

    pub fn closure_in(fam: &[Mask], full: Mask, m: Mask) -> Mask {
        fam.iter()
            .filter(|&&a| m & !a == 0)
            .fold(full, |acc, &a| acc & a)
    }

    pub fn closure(&self, m: Mask) -> Mask {
        Self::closure_in(&self.gamma(), self.p.full(), m)
    }

    pub fn interior(&self, m: Mask) -> Mask {
        self.sigma()
            .into_iter()
            .filter(|&u| u & !m == 0)
            .fold(0, |acc, u| acc | u)
    }

    pub fn wb_sets(&self, a: Mask, b: Mask) -> bool {
        let (ua, ub) = (self.p.up(a), self.p.up(b));
        self.zm
            .iter()
            .all(|&s| self.p.cut(s) & ub == 0 || s & ua != 0)
    }

    pub fn wb(&self, y: usize, x: usize) -> bool {
        self.wb_sets(bit(y), bit(x))
    }

    pub fn dd(&self, x: usize) -> Mask {
        (0..self.p.n)
            .filter(|&y| self.wb(y, x))
            .fold(0, |m, y| m | bit(y))
    }

    pub fn uu(&self, a: Mask) -> Mask {
        (0..self.p.n)
            .filter(|&x| self.wb_sets(a, bit(x)))
            .fold(0, |m, x| m | bit(x))
    }

    pub fn wb_above(&self, a: Mask) -> Mask {
        (0..self.p.n)
            .filter(|&x| members(a, self.p.n).iter().any(|&y| self.wb(y, x)))
            .fold(0, |m, x| m | bit(x))
    }

    pub fn in_iz(&self, w: Mask) -> bool {
        self.zm.iter().any(|&s| self.p.down(s) == w)
    }

    pub fn weak_s_cont(&self) -> bool {
        (0..self.p.n).all(|x| has(self.p.cut(self.dd(x)), x))
    }

    pub fn s_cont(&self) -> bool {
        self.weak_s_cont() && (0..self.p.n).all(|x| self.in_iz(self.dd(x)))
    }

    pub fn quasicont(&self) -> bool {
        let p = &self.p;
        // Fin P: distinct ↑F for nonempty F, ordered by reverse inclusion.
        let mut fin: Vec<Mask> = p.subsets().filter(|&f| f != 0).map(|f| p.up(f)).collect();
        fin.sort();
        fin.dedup();
        let finp = OPoset::from_relation(fin.len(), |i, j| fin[j] & !fin[i] == 0);
        (0..p.n).all(|x| {
            let fam: Vec<Mask> = p
                .subsets()
                .filter(|&f| f != 0 && self.wb_sets(f, bit(x)))
                .map(|f| p.up(f))
                .collect();
            let idx = fam.iter().fold(0u64, |m, u| {
                m | bit(fin.iter().position(|v| v == u).unwrap())
            });
            let meet = fam.iter().fold(p.full(), |m, &u| m & u);
            z_contains(&finp, self.z, idx) && meet == p.up(bit(x))
        })
    }

    fn meet_like(&self, closed: &[Mask]) -> bool {
        let p = &self.p;
        (0..p.n).all(|x| {
            self.zm.iter().all(|&d| {
                !has(p.cut(d), x)
                    || has(
                        Self::closure_in(closed, p.full(), p.down(bit(x)) & p.down(d)),
                        x,
                    )
            })
        })
    }

    pub fn weakly_meet(&self) -> bool {
        self.meet_like(&self.gamma())
    }

    pub fn meet(&self) -> bool {
        self.meet_like(&self.gamma_topology())
    }

    pub fn wmc_upsets(&self) -> bool {
        let p = &self.p;
        let sigma = self.sigma();
        (0..p.n).all(|x| {
            sigma
                .iter()
                .all(|&u| self.is_sigma(p.up(p.down(bit(x)) & u)))
        })
    }

    pub fn sub(&self, a: Mask) -> (OZ, Vec<usize>) {
        let (sp, idx) = self.p.restrict(a);
        (OZ::new(sp, self.z), idx)
    }

    pub fn locally_weakly_meet(&self) -> bool {
        (0..self.p.n).all(|x| self.sub(self.p.down(bit(x))).0.weakly_meet())
    }

    pub fn separation(&self) -> bool {
        let p = &self.p;
        let sigma = self.sigma();
        // Lower topology: closed sets generated by principal filters.
        let mut closed: std::collections::BTreeSet<Mask> = (0..p.n).map(|i| p.up(bit(i))).collect();
        closed.insert(0);
        closed.insert(p.full());
        loop {
            let v: Vec<Mask> = closed.iter().copied().collect();
            let mut grew = false;
            for &a in &v {
                for &b in &v {
                    grew |= closed.insert(a | b);
                    grew |= closed.insert(a & b);
                }
            }
            if !grew {
                break;
            }
        }
        let opens: Vec<Mask> = closed.iter().map(|&c| p.full() & !c).collect();
        (0..p.n).all(|x| {
            (0..p.n).all(|y| {
                p.leq[x][y]
                    || sigma
                        .iter()
                        .any(|&u| has(u, x) && opens.iter().any(|&v| has(v, y) && u & v == 0))
            })
        })
    }

    pub fn beneath(&self, x: usize, y: usize) -> bool {
        self.gamma()
            .into_iter()
            .filter(|&a| a != 0)
            .all(|a| !has(self.p.cut(a), y) || has(a, x))
    }

    pub fn beneath_set(&self, y: usize) -> Mask {
        (0..self.p.n)
            .filter(|&x| self.beneath(x, y))
            .fold(0, |m, x| m | bit(x))
    }

    pub fn compacts(&self) -> Mask {
        (0..self.p.n)
            .filter(|&x| self.beneath(x, x))
            .fold(0, |m, x| m | bit(x))
    }

    pub fn delta_cont(&self) -> bool {
        (0..self.p.n).all(|a| has(self.p.cut(self.beneath_set(a)), a))
    }

    pub fn prealgebraic(&self) -> bool {
        let k = self.compacts();
        (0..self.p.n).all(|x| has(self.p.cut(k & self.p.down(bit(x))), x))
    }

    pub fn lower_hereditary(&self) -> bool {
        let gamma = self.gamma();
        gamma.iter().all(|&a| {
            let (sub, idx) = self.sub(a);
            let mut own: Vec<Mask> = sub.gamma().into_iter().map(|m| lift(&idx, m)).collect();
            own.sort();
            let mut trace: Vec<Mask> = gamma.iter().map(|&b| b & a).collect();
            trace.sort();
            trace.dedup();
            own == trace
        })
    }

    /// The five lower-hereditariness conditions, literally.
    pub fn lh_conditions(&self) -> [bool; 5] {
        let p = &self.p;
        let gamma = self.gamma();
        let c1 = self.lower_hereditary();
        let c2 = (0..p.n).all(|x| {
            let (sub, idx) = self.sub(p.down(bit(x)));
            gamma.iter().all(|&b| sub.is_gamma(pull(&idx, b)))
        });
        let rel_ok = |a: Mask| {
            let (sub, idx) = self.sub(a);
            sub.zm.iter().all(|&d| {
                let d = lift(&idx, d);
                p.rel_cut(d, a) == p.cut(d)
            })
        };
        let c3 = (0..p.n).all(|x| rel_ok(p.down(bit(x))));
        let c4 = gamma.iter().all(|&a| rel_ok(a));
        let c5 = self.zm.iter().all(|&d| p.is_filtered(p.ub(d)));
        [c1, c2, c3, c4, c5]
    }

    pub fn is_zcpo(&self) -> bool {
        self.zm.iter().all(|&d| self.p.sup(d).is_some())
    }
}

/// Tables of every monotone map between two oracle posets.
pub fn monotone_maps(p: &OPoset, q: &OPoset) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let total = q.n.pow(p.n as u32);
    for code in 0..total {
        let mut c = code;
        let t: Vec<usize> = (0..p.n)
            .map(|_| {
                let v = c % q.n;
                c /= q.n;
                v
            })
            .collect();
        if (0..p.n).all(|i| (0..p.n).all(|j| !p.leq[i][j] || q.leq[t[i]][t[j]])) {
            out.push(t);
        }
    }
    out
}

pub fn image(t: &[usize], a: Mask) -> Mask {
    t.iter()
        .enumerate()
        .filter(|(i, _)| has(a, *i))
        .fold(0, |m, (_, &v)| m | bit(v))
}

pub fn preimage(t: &[usize], b: Mask) -> Mask {
    t.iter()
        .enumerate()
        .filter(|(_, &v)| has(b, v))
        .fold(0, |m, (i, _)| m | bit(i))
}

/// Every reflexive relation on `n` points passing antisymmetry and
/// transitivity, as oracle posets.
pub fn all_orders(n: usize) -> Vec<OPoset> {
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for code in 0u64..(1 << off.len()) {
        let mut leq = vec![vec![false; n]; n];
        for (i, row) in leq.iter_mut().enumerate() {
            row[i] = true;
        }
        for (k, &(i, j)) in off.iter().enumerate() {
            if has(code, k) {
                leq[i][j] = true;
            }
        }
        let anti = (0..n).all(|i| (0..n).all(|j| i == j || !(leq[i][j] && leq[j][i])));
        let trans =
            (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(leq[i][j] && leq[j][k]) || leq[i][k])));
        if anti && trans {
            out.push(OPoset { n, leq });
        }
    }
    out
}
