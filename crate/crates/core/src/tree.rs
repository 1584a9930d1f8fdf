//! Planar rooted binary trees and the Tamari lattice of left rotations.
//!
//! Trees print in bracket form: a leaf is `.` and a node is `(LR)`, so the
//! single-node tree `Y` is `(..)`. Nodes are numbered in preorder from 0 and
//! leaves left to right from 0.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::alt_tamari::{upper_covers, IncrementFunction};
use crate::dyck::{DyckPath, Step};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Leaf,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// An edge of a tree. `Below { node, side }` is the edge from the node with
/// preorder index `node` down to its `side` child; `Root` is the edge between
/// the root and the root node, which cannot take a plug.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Edge {
    Root,
    Below { node: usize, side: Side },
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> BinaryTree {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    /// The tree with one node.
    pub fn y() -> BinaryTree {
        BinaryTree::node(BinaryTree::Leaf, BinaryTree::Leaf)
    }

    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Leaf => 0,
            BinaryTree::Node(l, r) => l.size() + r.size() + 1,
        }
    }

    pub fn leaves(&self) -> usize {
        self.size() + 1
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, BinaryTree::Leaf)
    }

    /// Swap left and right everywhere.
    pub fn mirror(&self) -> BinaryTree {
        match self {
            BinaryTree::Leaf => BinaryTree::Leaf,
            BinaryTree::Node(l, r) => BinaryTree::node(r.mirror(), l.mirror()),
        }
    }

    /// Every tree obtained by one left rotation
    /// `(A (B C)) -> ((A B) C)`, in preorder of the rotated node. These are
    /// the upper covers in the Tamari lattice.
    pub fn left_rotation_covers(&self) -> Vec<BinaryTree> {
        let mut out = Vec::new();
        self.collect_rotations(&mut |t| t, &mut out);
        out
    }

    fn collect_rotations(&self, wrap: &mut dyn FnMut(BinaryTree) -> BinaryTree, out: &mut Vec<BinaryTree>) {
        let BinaryTree::Node(l, r) = self else { return };
        if let BinaryTree::Node(b, c) = r.as_ref() {
            let rotated = BinaryTree::node(BinaryTree::node((**l).clone(), (**b).clone()), (**c).clone());
            out.push(wrap(rotated));
        }
        let right = (**r).clone();
        l.collect_rotations(&mut |t| wrap(BinaryTree::node(t, right.clone())), out);
        let left = (**l).clone();
        r.collect_rotations(&mut |t| wrap(BinaryTree::node(left.clone(), t)), out);
    }

    /// Rotation at preorder node `s`, expressed as plugging: returns the
    /// marked tree `M` and the tree `X` such that the rotation goes from
    /// `M` with `X` plugged right of `s` to `M` with `X` plugged left of `s`.
    /// `None` when `s` has a leaf as right child.
    pub fn rotation_as_plugging(&self, s: usize) -> Option<(BinaryTree, BinaryTree)> {
        let mut plugged = None;
        let marked = self.rewrite_at(s, &mut |t| {
            let BinaryTree::Node(a, r) = t else { return None };
            let BinaryTree::Node(b, c) = r.as_ref() else { return None };
            plugged = Some((**b).clone());
            Some(BinaryTree::node((**a).clone(), (**c).clone()))
        })?;
        Some((marked, plugged?))
    }

    /// Identify the root node of `other` with leaf `k` of `self`.
    pub fn graft(&self, k: usize, other: &BinaryTree) -> Result<BinaryTree> {
        if k > self.size() {
            return Err(Error::LeafOutOfRange { leaf: k, max: self.size() });
        }
        let mut counter = 0;
        Ok(self.graft_inner(k, other, &mut counter))
    }

    fn graft_inner(&self, k: usize, other: &BinaryTree, counter: &mut usize) -> BinaryTree {
        match self {
            BinaryTree::Leaf => {
                let here = *counter;
                *counter += 1;
                if here == k {
                    other.clone()
                } else {
                    BinaryTree::Leaf
                }
            }
            BinaryTree::Node(l, r) => {
                let l = l.graft_inner(k, other, counter);
                let r = r.graft_inner(k, other, counter);
                BinaryTree::node(l, r)
            }
        }
    }

    /// Insert a new node on `edge` carrying `other` as its second child.
    /// On a left edge the old subtree stays left and `other` goes right;
    /// on a right edge the other way round.
    pub fn plug(&self, edge: Edge, other: &BinaryTree) -> Result<BinaryTree> {
        let Edge::Below { node, side } = edge else { return Err(Error::RootEdgeForbidden) };
        if node >= self.size() {
            return Err(Error::NodeOutOfRange { node, size: self.size() });
        }
        let out = self.rewrite_at(node, &mut |t| {
            let BinaryTree::Node(l, r) = t else { unreachable!() };
            Some(match side {
                Side::Left => BinaryTree::node(BinaryTree::node((**l).clone(), other.clone()), (**r).clone()),
                Side::Right => BinaryTree::node((**l).clone(), BinaryTree::node(other.clone(), (**r).clone())),
            })
        });
        Ok(out.expect("node index checked"))
    }

    /// Replace the subtree rooted at preorder node `target`.
    fn rewrite_at(
        &self,
        target: usize,
        f: &mut dyn FnMut(&BinaryTree) -> Option<BinaryTree>,
    ) -> Option<BinaryTree> {
        fn go(
            t: &BinaryTree,
            target: usize,
            counter: &mut usize,
            f: &mut dyn FnMut(&BinaryTree) -> Option<BinaryTree>,
        ) -> Option<Option<BinaryTree>> {
            let BinaryTree::Node(l, r) = t else { return Some(None) };
            let here = *counter;
            *counter += 1;
            if here == target {
                return f(t).map(Some);
            }
            let new_l = go(l, target, counter, f)?;
            let new_r = go(r, target, counter, f)?;
            Some(match (new_l, new_r) {
                (None, None) => None,
                (nl, nr) => Some(BinaryTree::node(nl.unwrap_or((**l).clone()), nr.unwrap_or((**r).clone()))),
            })
        }
        let mut counter = 0;
        go(self, target, &mut counter, f)?
    }

    /// Leaf ranges `(first, last)` spanned by every node except the root node.
    pub fn proper_leaf_spans(&self) -> HashSet<(usize, usize)> {
        fn go(t: &BinaryTree, offset: usize, is_root: bool, out: &mut HashSet<(usize, usize)>) -> usize {
            match t {
                BinaryTree::Leaf => 1,
                BinaryTree::Node(l, r) => {
                    let left = go(l, offset, false, out);
                    let right = go(r, offset + left, false, out);
                    if !is_root {
                        out.insert((offset, offset + left + right - 1));
                    }
                    left + right
                }
            }
        }
        let mut out = HashSet::new();
        go(self, 0, true, &mut out);
        out
    }

    /// Encode as a Dyck path: a leaf is empty and
    /// `(L R) -> enc(R) u enc(L) d`. Left rotations become δ-rotations for
    /// `δ ≡ 1`.
    pub fn to_path(&self) -> DyckPath {
        let mut steps = Vec::with_capacity(2 * self.size());
        self.encode(&mut steps);
        DyckPath::from_steps(&steps).expect("tree encoding is Dyck")
    }

    fn encode(&self, out: &mut Vec<Step>) {
        if let BinaryTree::Node(l, r) = self {
            r.encode(out);
            out.push(Step::Up);
            l.encode(out);
            out.push(Step::Down);
        }
    }

    /// Inverse of [`BinaryTree::to_path`].
    pub fn from_path(path: &DyckPath) -> BinaryTree {
        fn decode(steps: &[Step]) -> BinaryTree {
            if steps.is_empty() {
                return BinaryTree::Leaf;
            }
            // start of the last return to the axis
            let mut height = 0i64;
            let mut last_start = 0;
            for (i, s) in steps.iter().enumerate() {
                if height == 0 {
                    last_start = i;
                }
                height += if *s == Step::Up { 1 } else { -1 };
            }
            let right = decode(&steps[..last_start]);
            let left = decode(&steps[last_start + 1..steps.len() - 1]);
            BinaryTree::node(left, right)
        }
        decode(&path.to_steps())
    }
}

/// Tree to path, see [`BinaryTree::to_path`].
pub fn tree_to_path(tree: &BinaryTree) -> DyckPath {
    tree.to_path()
}

/// All trees of size `n`, ordered by left-subtree size then recursively.
pub fn enumerate_trees(n: usize) -> Result<Vec<BinaryTree>> {
    let cap = crate::enumeration_cap();
    if n > cap {
        return Err(Error::SizeTooLarge { size: n, cap });
    }
    let mut by_size: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::Leaf]];
    for m in 1..=n {
        let mut trees = Vec::new();
        for left in 0..m {
            for l in &by_size[left] {
                for r in &by_size[m - 1 - left] {
                    trees.push(BinaryTree::node(l.clone(), r.clone()));
                }
            }
        }
        by_size.push(trees);
    }
    Ok(by_size.swap_remove(n))
}

/// Right comb `r_n`: every internal edge goes right.
pub fn right_comb(n: usize) -> Result<BinaryTree> {
    if n == 0 {
        return Err(Error::EmptySize);
    }
    Ok((1..n).fold(BinaryTree::y(), |t, _| BinaryTree::node(BinaryTree::Leaf, t)))
}

/// Left comb `ℓ_n`: every internal edge goes left.
pub fn left_comb(n: usize) -> Result<BinaryTree> {
    if n == 0 {
        return Err(Error::EmptySize);
    }
    Ok((1..n).fold(BinaryTree::y(), |t, _| BinaryTree::node(t, BinaryTree::Leaf)))
}

/// Whether `bottom <= top` in the Tamari lattice, by searching upwards from
/// the image of `bottom` along δ-rotations with `δ ≡ 1`.
pub fn tamari_leq(bottom: &BinaryTree, top: &BinaryTree) -> bool {
    let n = bottom.size();
    if top.size() != n {
        return false;
    }
    let (start, goal) = (bottom.to_path(), top.to_path());
    if n == 0 {
        return start == goal;
    }
    let delta = IncrementFunction::tamari(n);
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        if p == goal {
            return true;
        }
        if !p.includes(&goal).unwrap_or(false) {
            continue;
        }
        for (_, q) in upper_covers(&delta, &p) {
            if seen.insert(q) {
                queue.push_back(q);
            }
        }
    }
    false
}

/// A Tamari interval `[bottom, top]` of trees.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeInterval {
    bottom: BinaryTree,
    top: BinaryTree,
}

impl TreeInterval {
    pub fn new(bottom: BinaryTree, top: BinaryTree) -> Result<Self> {
        if !tamari_leq(&bottom, &top) {
            return Err(Error::InvalidInterval);
        }
        Ok(TreeInterval { bottom, top })
    }

    pub fn trivial(tree: BinaryTree) -> Self {
        TreeInterval { bottom: tree.clone(), top: tree }
    }

    pub fn bottom(&self) -> &BinaryTree {
        &self.bottom
    }

    pub fn top(&self) -> &BinaryTree {
        &self.top
    }

    pub fn size(&self) -> usize {
        self.bottom.size()
    }

    /// Graft `other` on leaf `k` of both ends.
    pub fn graft(&self, k: usize, other: &TreeInterval) -> Result<TreeInterval> {
        Ok(TreeInterval { bottom: self.bottom.graft(k, &other.bottom)?, top: self.top.graft(k, &other.top)? })
    }

    /// Images of both ends under [`BinaryTree::to_path`].
    pub fn to_paths(&self) -> (DyckPath, DyckPath) {
        (self.bottom.to_path(), self.top.to_path())
    }
}

/// `R_n = [r_{n+1}, (r_n, leaf)]` in `Tam_{n+1}`.
pub fn build_r(n: usize) -> Result<TreeInterval> {
    let bottom = right_comb(n + 1)?;
    let top = BinaryTree::node(right_comb(n)?, BinaryTree::Leaf);
    Ok(TreeInterval { bottom, top })
}

/// `L_n = [(leaf, ℓ_n), ℓ_{n+1}]` in `Tam_{n+1}`, the mirror image of `R_n`.
pub fn build_l(n: usize) -> Result<TreeInterval> {
    let bottom = BinaryTree::node(BinaryTree::Leaf, left_comb(n)?);
    let top = left_comb(n + 1)?;
    Ok(TreeInterval { bottom, top })
}

/// An interval is new when its ends share no node spanning the same proper
/// range of leaves; a shared one is where another interval was grafted.
pub fn is_new_interval(interval: &TreeInterval) -> bool {
    interval.bottom.proper_leaf_spans().is_disjoint(&interval.top.proper_leaf_spans())
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Leaf => f.write_str("."),
            BinaryTree::Node(l, r) => write!(f, "({l}{r})"),
        }
    }
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree{self}")
    }
}

impl FromStr for BinaryTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        fn parse(chars: &[char], pos: &mut usize) -> Option<BinaryTree> {
            match chars.get(*pos)? {
                '.' => {
                    *pos += 1;
                    Some(BinaryTree::Leaf)
                }
                '(' => {
                    *pos += 1;
                    let l = parse(chars, pos)?;
                    let r = parse(chars, pos)?;
                    (chars.get(*pos) == Some(&')')).then(|| {
                        *pos += 1;
                        BinaryTree::node(l, r)
                    })
                }
                _ => None,
            }
        }
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut pos = 0;
        match parse(&chars, &mut pos) {
            Some(t) if pos == chars.len() => Ok(t),
            _ => Err(Error::BadTree { text: s.to_string() }),
        }
    }
}
