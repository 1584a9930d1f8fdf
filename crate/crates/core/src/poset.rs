//! Finite posets given by a cover relation.
//!
//! A [`Poset`] stores its Hasse diagram together with the reachability
//! closure as dense bitset rows, one for the up-set and one for the down-set
//! of every element. `leq` is a single bit lookup and the interval `[a, b]`
//! is the intersection `up(a) & down(b)`.

use std::collections::{BinaryHeap, HashMap};
use std::cmp::Reverse;
use std::fmt::{self, Write as _};
use std::hash::Hash;
use std::ops::Mul;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct Poset<T> {
    elements: Vec<T>,
    index: HashMap<T, usize>,
    covers: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    topo_rank: Vec<usize>,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    dropped_covers: usize,
}

impl<T: Clone + Eq + Hash> Poset<T> {
    /// Build from elements and a (possibly redundant) list of `(low, high)`
    /// index pairs. Redundant pairs are dropped and counted in
    /// [`Poset::dropped_covers`].
    pub fn build(elements: Vec<T>, covers: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let len = elements.len();
        let mut index = HashMap::with_capacity(len);
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::DuplicateElement { index: i });
            }
        }

        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (low, high) in covers {
            if low >= len || high >= len {
                return Err(Error::CoverOutOfRange { low, high, len });
            }
            if low == high {
                return Err(Error::CycleDetected);
            }
            edges.push((low, high));
        }
        let raw = edges.len();
        edges.sort_unstable();
        edges.dedup();
        let mut dropped_covers = raw - edges.len();

        let mut succ = vec![Vec::new(); len];
        for &(a, b) in &edges {
            succ[a].push(b);
        }
        let order = topological_order(len, &succ)?;
        let mut topo_rank = vec![0; len];
        for (rank, &v) in order.iter().enumerate() {
            topo_rank[v] = rank;
        }

        let mut up = vec![FixedBitSet::with_capacity(len); len];
        for &v in order.iter().rev() {
            let mut row = FixedBitSet::with_capacity(len);
            row.insert(v);
            for &w in &succ[v] {
                row.union_with(&up[w]);
            }
            up[v] = row;
        }

        // an edge a -> b is redundant when b is above another successor of a
        let reduced: Vec<(usize, usize)> = edges
            .iter()
            .copied()
            .filter(|&(a, b)| !succ[a].iter().any(|&c| c != b && up[c].contains(b)))
            .collect();
        dropped_covers += edges.len() - reduced.len();

        let mut down = vec![FixedBitSet::with_capacity(len); len];
        for (a, row) in up.iter().enumerate() {
            for b in row.ones() {
                down[b].insert(a);
            }
        }

        let mut upper = vec![Vec::new(); len];
        let mut lower = vec![Vec::new(); len];
        for &(a, b) in &reduced {
            upper[a].push(b);
            lower[b].push(a);
        }

        Ok(Poset { elements, index, covers: reduced, upper, lower, topo_rank, up, down, dropped_covers })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &T) -> Result<usize> {
        self.index.get(e).copied().ok_or(Error::UnknownElement)
    }

    /// Hasse diagram edges, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Number of input pairs discarded as duplicates or implied by others.
    pub fn dropped_covers(&self) -> usize {
        self.dropped_covers
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn up_set(&self, i: usize) -> &FixedBitSet {
        &self.up[i]
    }

    pub fn down_set(&self, i: usize) -> &FixedBitSet {
        &self.down[i]
    }

    pub fn leq_at(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    pub fn leq(&self, a: &T, b: &T) -> Result<bool> {
        Ok(self.leq_at(self.index_of(a)?, self.index_of(b)?))
    }

    /// Indices of `[a, b]`; empty unless `a <= b`.
    pub fn interval_at(&self, a: usize, b: usize) -> FixedBitSet {
        let mut set = self.up[a].clone();
        set.intersect_with(&self.down[b]);
        set
    }

    pub fn interval_elements(&self, a: &T, b: &T) -> Result<Vec<T>> {
        let (a, b) = (self.index_of(a)?, self.index_of(b)?);
        Ok(self.interval_at(a, b).ones().map(|i| self.elements[i].clone()).collect())
    }

    /// Length of the longest chain from `a` to `b`, by DP over a topological
    /// order of the interval.
    pub fn height_at(&self, a: usize, b: usize) -> Option<usize> {
        if !self.leq_at(a, b) {
            return None;
        }
        let members = self.sorted_members(&self.interval_at(a, b));
        let mut longest: HashMap<usize, usize> = HashMap::with_capacity(members.len());
        longest.insert(a, 0);
        for &v in &members {
            let Some(&here) = longest.get(&v) else { continue };
            for &w in &self.upper[v] {
                if self.leq_at(w, b) {
                    let entry = longest.entry(w).or_insert(0);
                    *entry = (*entry).max(here + 1);
                }
            }
        }
        longest.get(&b).copied()
    }

    pub fn interval_height(&self, a: &T, b: &T) -> Result<usize> {
        self.height_at(self.index_of(a)?, self.index_of(b)?).ok_or(Error::NotComparable)
    }

    /// Whether `[a, b]` is totally ordered: its members, sorted
    /// topologically, must be pairwise consecutive-comparable.
    pub fn is_chain_at(&self, a: usize, b: usize) -> Option<bool> {
        if !self.leq_at(a, b) {
            return None;
        }
        let members = self.sorted_members(&self.interval_at(a, b));
        Some(members.windows(2).all(|w| self.leq_at(w[0], w[1])))
    }

    /// Whether exactly one maximal chain runs from `a` to `b`, counting
    /// Hasse-diagram paths inside the interval (saturating at 2).
    pub fn has_unique_maximal_chain_at(&self, a: usize, b: usize) -> Option<bool> {
        if !self.leq_at(a, b) {
            return None;
        }
        let members = self.sorted_members(&self.interval_at(a, b));
        let mut paths: HashMap<usize, u8> = HashMap::with_capacity(members.len());
        paths.insert(a, 1);
        for &v in &members {
            let Some(&here) = paths.get(&v) else { continue };
            for &w in &self.upper[v] {
                if self.leq_at(w, b) {
                    let entry = paths.entry(w).or_insert(0);
                    *entry = (*entry + here).min(2);
                }
            }
        }
        Some(paths.get(&b).copied() == Some(1))
    }

    pub fn is_linear_interval(&self, a: &T, b: &T) -> Result<bool> {
        self.is_chain_at(self.index_of(a)?, self.index_of(b)?).ok_or(Error::NotComparable)
    }

    pub fn has_unique_maximal_chain(&self, a: &T, b: &T) -> Result<bool> {
        self.has_unique_maximal_chain_at(self.index_of(a)?, self.index_of(b)?)
            .ok_or(Error::NotComparable)
    }

    /// Counts `T` (elements) and `U` (nontrivial linear intervals).
    pub fn linear_polynomial(&self) -> LinearPolynomial {
        let mut nontrivial = 0u64;
        for a in 0..self.len() {
            for b in self.up[a].ones() {
                if b != a && self.is_chain_at(a, b) == Some(true) {
                    nontrivial += 1;
                }
            }
        }
        LinearPolynomial { trivial: self.len() as u64, nontrivial }
    }

    /// Every pair has a least upper bound and a greatest lower bound.
    pub fn is_lattice(&self) -> bool {
        let bounded = |rows: &[FixedBitSet], a: usize, b: usize| {
            let mut common = rows[a].clone();
            common.intersect_with(&rows[b]);
            let size = common.count_ones(..);
            size > 0 && common.ones().any(|c| rows[c].count_ones(..) == size && rows[c].is_subset(&common))
        };
        (0..self.len()).all(|a| {
            (a + 1..self.len()).all(|b| bounded(&self.up, a, b) && bounded(&self.down, a, b))
        })
    }

    /// Cartesian product ordered componentwise; element `(i, j)` sits at
    /// index `i * other.len() + j`.
    pub fn product<U: Clone + Eq + Hash>(&self, other: &Poset<U>) -> Poset<(T, U)> {
        let m = other.len();
        let elements: Vec<(T, U)> = self
            .elements
            .iter()
            .flat_map(|a| other.elements.iter().map(move |b| (a.clone(), b.clone())))
            .collect();
        let mut covers = Vec::new();
        for &(a, a2) in &self.covers {
            for j in 0..m {
                covers.push((a * m + j, a2 * m + j));
            }
        }
        for i in 0..self.len() {
            for &(b, b2) in &other.covers {
                covers.push((i * m + b, i * m + b2));
            }
        }
        Poset::build(elements, covers).expect("product of posets is a poset")
    }

    fn sorted_members(&self, set: &FixedBitSet) -> Vec<usize> {
        let mut members: Vec<usize> = set.ones().collect();
        members.sort_unstable_by_key(|&v| self.topo_rank[v]);
        members
    }
}

impl<T: Clone + Eq + Hash + fmt::Display> Poset<T> {
    /// Graphviz rendering of the Hasse diagram, edges pointing upwards.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "digraph {name} {{").unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        for (i, e) in self.elements.iter().enumerate() {
            writeln!(out, "  n{i} [label=\"{e}\"];").unwrap();
        }
        for &(a, b) in &self.covers {
            writeln!(out, "  n{a} -> n{b};").unwrap();
        }
        out.push_str("}\n");
        out
    }

    /// `{"elements": [...], "covers": [[i, j], ...]}`
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Export {
            elements: Vec<String>,
            covers: Vec<[usize; 2]>,
        }
        let export = Export {
            elements: self.elements.iter().map(|e| e.to_string()).collect(),
            covers: self.covers.iter().map(|&(a, b)| [a, b]).collect(),
        };
        serde_json::to_value(export).expect("plain data serializes")
    }
}

/// Kahn's algorithm, smallest index first so the order is deterministic.
fn topological_order(len: usize, succ: &[Vec<usize>]) -> Result<Vec<usize>> {
    let mut indegree = vec![0usize; len];
    for targets in succ {
        for &w in targets {
            indegree[w] += 1;
        }
    }
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..len).filter(|&v| indegree[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(len);
    while let Some(Reverse(v)) = ready.pop() {
        order.push(v);
        for &w in &succ[v] {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                ready.push(Reverse(w));
            }
        }
    }
    if order.len() == len {
        Ok(order)
    } else {
        Err(Error::CycleDetected)
    }
}

/// `T + U·ε` with `ε² = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct LinearPolynomial {
    pub trivial: u64,
    pub nontrivial: u64,
}

impl LinearPolynomial {
    pub fn new(trivial: u64, nontrivial: u64) -> Self {
        LinearPolynomial { trivial, nontrivial }
    }
}

impl Mul for LinearPolynomial {
    type Output = LinearPolynomial;

    fn mul(self, rhs: Self) -> Self {
        LinearPolynomial {
            trivial: self.trivial * rhs.trivial,
            nontrivial: self.trivial * rhs.nontrivial + self.nontrivial * rhs.trivial,
        }
    }
}

impl fmt::Display for LinearPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}ε", self.trivial, self.nontrivial)
    }
}

/// Chain `0 < 1 < ... < len-1`.
pub fn chain(len: usize) -> Poset<usize> {
    Poset::build((0..len).collect(), (1..len).map(|i| (i - 1, i))).expect("chain")
}

/// Discrete poset on `len` elements.
pub fn antichain(len: usize) -> Poset<usize> {
    Poset::build((0..len).collect(), std::iter::empty()).expect("antichain")
}
