mod common;

use std::collections::HashSet;

use alt_tamari::alt_tamari::build_alt_tamari;
use alt_tamari::tree::{build_l, build_r, enumerate_trees, left_comb, right_comb, tamari_leq, Edge, Side, TreeInterval};
use alt_tamari::{BinaryTree, DyckPath, IncrementFunction};
use common::{bits, catalan, rotations};
use proptest::prelude::*;

fn t(s: &str) -> BinaryTree {
    s.parse().unwrap()
}

/// `u·enc(L)·d·enc(R)`, the encoding that reads left subtrees first.
fn left_first(tree: &BinaryTree) -> String {
    match tree {
        BinaryTree::Leaf => String::new(),
        BinaryTree::Node(l, r) => format!("u{}d{}", left_first(l), left_first(r)),
    }
}

#[test]
fn left_first_encoding_is_not_monotone() {
    let y = BinaryTree::y();
    let balanced = BinaryTree::node(y.clone(), y);
    assert_eq!(left_first(&balanced), "uuddud");
    let covers = balanced.left_rotation_covers();
    assert_eq!(covers, vec![left_comb(3).unwrap()]);
    assert_eq!(left_first(&covers[0]), "uuuddd");
    // but the only δ ≡ 1 rotation of uuddud lands elsewhere
    assert_eq!(rotations(&bits("111"), "uuddud"), vec!["uududd".to_string()]);
}

#[test]
fn encoding_is_an_isomorphism_onto_tamari_paths() {
    for n in 0..=7 {
        let trees = enumerate_trees(n).unwrap();
        assert_eq!(trees.len() as u128, catalan(n));
        let images: HashSet<DyckPath> = trees.iter().map(BinaryTree::to_path).collect();
        assert_eq!(images.len(), trees.len());
        if n == 0 {
            continue;
        }
        let d = bits(&"1".repeat(n));
        for tree in &trees {
            let mut via_tree: Vec<String> = tree.left_rotation_covers().iter().map(|s| s.to_path().to_string()).collect();
            let mut via_path = rotations(&d, &tree.to_path().to_string());
            via_tree.sort();
            via_path.sort();
            assert_eq!(via_tree, via_path, "{tree}");
        }
    }
}

#[test]
fn combs_are_the_extremes() {
    for n in 1..=6 {
        let poset = build_alt_tamari(&IncrementFunction::tamari(n)).unwrap();
        let bottom = right_comb(n).unwrap().to_path();
        let top = left_comb(n).unwrap().to_path();
        assert_eq!(bottom, DyckPath::zigzag(n));
        assert_eq!(top, DyckPath::pyramid(n));
        for p in poset.elements() {
            assert!(poset.leq(&bottom, p).unwrap() && poset.leq(p, &top).unwrap());
        }
    }
}

#[test]
fn smallest_intervals_coincide() {
    let (l, r) = (build_l(1).unwrap(), build_r(1).unwrap());
    assert_eq!(l, r);
    assert_eq!(l.to_paths(), (DyckPath::parse("udud").unwrap(), DyckPath::parse("uudd").unwrap()));
}

#[test]
fn interval_checks_order() {
    assert!(TreeInterval::new(right_comb(4).unwrap(), left_comb(4).unwrap()).is_ok());
    assert!(TreeInterval::new(left_comb(4).unwrap(), right_comb(4).unwrap()).is_err());
    assert!(!tamari_leq(&left_comb(3).unwrap(), &left_comb(4).unwrap()));
}

#[test]
fn plugging_reproduces_each_rotation() {
    for n in 1..=5 {
        for tree in enumerate_trees(n).unwrap() {
            let covers: HashSet<BinaryTree> = tree.left_rotation_covers().into_iter().collect();
            let mut found = HashSet::new();
            for s in 0..n {
                let Some((marked, plugged)) = tree.rotation_as_plugging(s) else { continue };
                let below = Edge::Below { node: s, side: Side::Right };
                let above = Edge::Below { node: s, side: Side::Left };
                assert_eq!(marked.plug(below, &plugged).unwrap(), tree);
                found.insert(marked.plug(above, &plugged).unwrap());
            }
            assert_eq!(found, covers);
        }
    }
}

fn tree_strategy() -> impl Strategy<Value = BinaryTree> {
    let leaf = Just(BinaryTree::Leaf);
    leaf.prop_recursive(5, 24, 2, |inner| (inner.clone(), inner).prop_map(|(l, r)| BinaryTree::node(l, r)))
}

proptest! {
    #[test]
    fn mirror_is_an_involution(tree in tree_strategy()) {
        prop_assert_eq!(tree.mirror().mirror(), tree.clone());
        prop_assert_eq!(tree.mirror().size(), tree.size());
    }

    #[test]
    fn path_round_trip(tree in tree_strategy()) {
        let path = tree.to_path();
        prop_assert_eq!(path.size(), tree.size());
        prop_assert_eq!(BinaryTree::from_path(&path), tree.clone());
        prop_assert_eq!(tree.to_string().parse::<BinaryTree>().unwrap(), tree);
    }

    #[test]
    fn grafting_adds_sizes(a in tree_strategy(), b in tree_strategy(), k in 0usize..32) {
        let k = k % a.leaves();
        let g = a.graft(k, &b).unwrap();
        prop_assert_eq!(g.size(), a.size() + b.size());
        prop_assert_eq!(g.leaves(), a.leaves() + b.leaves() - 1);
    }

    #[test]
    fn rotation_goes_up(tree in tree_strategy()) {
        for s in tree.left_rotation_covers() {
            prop_assert!(tamari_leq(&tree, &s));
            prop_assert!(!tamari_leq(&s, &tree));
        }
    }
}

#[test]
fn grafted_intervals_are_not_new() {
    let base = build_r(2).unwrap();
    let other = TreeInterval::trivial(t("(..)"));
    let g = base.graft(1, &other).unwrap();
    assert!(!alt_tamari::tree::is_new_interval(&g));
    assert!(alt_tamari::tree::is_new_interval(&base));
}
