//! Finite rooted binary subtrees of the infinite binary tree, stored by their
//! leaf antichain.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::words::{Vertex, Word};

/// A finite full binary tree rooted at ε, identified with its set of leaves.
///
/// The leaves form a finite complete antichain. Iteration order is the padded
/// lexicographic order, which on an antichain is left-to-right order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tree {
    leaves: BTreeSet<Word>,
}

impl Tree {
    /// The one-leaf tree `{ε}`.
    pub fn trivial() -> Self {
        Tree {
            leaves: BTreeSet::from([Word::empty()]),
        }
    }

    pub fn from_leaves<I: IntoIterator<Item = Word>>(leaves: I) -> Result<Self> {
        let leaves: BTreeSet<Word> = leaves.into_iter().collect();
        validate_leaves(&leaves)?;
        Ok(Tree { leaves })
    }

    /// Builds a tree from leaves known to form a complete antichain.
    pub(crate) fn from_leaves_unchecked(leaves: BTreeSet<Word>) -> Self {
        debug_assert!(validate_leaves(&leaves).is_ok(), "{leaves:?}");
        Tree { leaves }
    }

    /// The smallest tree having every given word as an internal node.
    pub fn with_nodes<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> Self {
        let mut internal = BTreeSet::new();
        for w in words {
            for n in 0..=w.len() {
                internal.insert(w.prefix(n));
            }
        }
        Self::from_internal(&internal)
    }

    /// The tree whose internal nodes are exactly `internal` (prefix-closed).
    fn from_internal(internal: &BTreeSet<Word>) -> Self {
        if internal.is_empty() {
            return Tree::trivial();
        }
        let mut leaves = BTreeSet::new();
        for n in internal {
            for b in 0..2 {
                let c = n.child(b);
                if !internal.contains(&c) {
                    leaves.insert(c);
                }
            }
        }
        Tree::from_leaves_unchecked(leaves)
    }

    pub fn leaves(&self) -> impl ExactSizeIterator<Item = &Word> + DoubleEndedIterator + Clone {
        self.leaves.iter()
    }

    pub fn leaf_set(&self) -> &BTreeSet<Word> {
        &self.leaves
    }

    pub fn num_leaves(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.leaves.len() == 1
    }

    pub fn is_leaf(&self, w: &Word) -> bool {
        self.leaves.contains(w)
    }

    /// The leaf that is a prefix of `w`, if `w` lies on or below a leaf.
    pub fn leaf_above(&self, w: &Word) -> Option<Word> {
        (0..=w.len())
            .map(|n| w.prefix(n))
            .find(|p| self.leaves.contains(p))
    }

    /// True iff `w` is an internal node.
    pub fn is_node(&self, w: &Word) -> bool {
        self.leaf_above(w).is_none()
    }

    /// Internal nodes, lex-sorted.
    pub fn nodes(&self) -> Vec<Word> {
        self.internal_set().into_iter().collect()
    }

    fn internal_set(&self) -> BTreeSet<Word> {
        let mut internal = BTreeSet::new();
        for leaf in &self.leaves {
            for n in 0..leaf.len() {
                internal.insert(leaf.prefix(n));
            }
        }
        internal
    }

    /// Maximum leaf length.
    pub fn depth(&self) -> usize {
        self.leaves.iter().map(Word::len).max().unwrap_or(0)
    }

    /// The image of a node or ζ under the order-preserving bijection
    /// `nodes ∪ {ζ} → leaves`.
    ///
    /// In left-to-right order leaves and nodes alternate, so a node goes to
    /// the rightmost leaf of its left subtree and ζ to the rightmost leaf.
    pub fn b(&self, x: &Vertex) -> Result<Word> {
        let mut w = match x {
            Vertex::Zeta => Word::empty(),
            Vertex::Word(n) => {
                if !self.is_node(n) {
                    return Err(Error::NotANode(n.to_string()));
                }
                n.child(0)
            }
        };
        while !self.leaves.contains(&w) {
            w = w.child(1);
        }
        Ok(w)
    }

    /// Inverse of [`Tree::b`].
    pub fn b_inverse(&self, leaf: &Word) -> Result<Vertex> {
        if !self.is_leaf(leaf) {
            return Err(Error::NotALeaf(leaf.to_string()));
        }
        Ok(b_preimage(leaf))
    }

    /// The full bijection as `(node or ζ, leaf)` pairs in lex order.
    pub fn b_map(&self) -> Vec<(Vertex, Word)> {
        let mut domain: Vec<Vertex> = self.nodes().into_iter().map(Vertex::Word).collect();
        domain.push(Vertex::Zeta);
        domain.into_iter().zip(self.leaves.iter().cloned()).collect()
    }

    pub fn add_caret(&self, leaf: &Word) -> Result<Tree> {
        if !self.leaves.contains(leaf) {
            return Err(Error::NotALeaf(leaf.to_string()));
        }
        let mut leaves = self.leaves.clone();
        leaves.remove(leaf);
        leaves.insert(leaf.child(0));
        leaves.insert(leaf.child(1));
        Ok(Tree { leaves })
    }

    /// Removes the caret below `node`; both children must be leaves.
    pub fn remove_caret(&self, node: &Word) -> Result<Tree> {
        let (c0, c1) = (node.child(0), node.child(1));
        if !self.leaves.contains(&c0) || !self.leaves.contains(&c1) {
            return Err(Error::NotANode(format!("{node} (children are not both leaves)")));
        }
        let mut leaves = self.leaves.clone();
        leaves.remove(&c0);
        leaves.remove(&c1);
        leaves.insert(node.clone());
        Ok(Tree { leaves })
    }

    /// The coarsest common refinement (lattice join).
    pub fn common_expansion(&self, other: &Tree) -> Tree {
        let mut internal = self.internal_set();
        internal.extend(other.internal_set());
        Self::from_internal(&internal)
    }

    /// True iff every leaf of `self` lies on or below a leaf of `coarser`.
    pub fn refines(&self, coarser: &Tree) -> bool {
        self.leaves.iter().all(|l| coarser.leaf_above(l).is_some())
    }

    /// `l_x(T)`: the word length of the leaf `b_T(x)`.
    pub fn leaf_depth(&self, x: &Vertex) -> Result<usize> {
        self.b(x).map(|l| l.len())
    }

    /// Number of nodes strictly between `lo` and `hi` in lex order; an absent
    /// endpoint is unbounded.
    pub fn gap_count(&self, lo: Option<&Word>, hi: Option<&Word>) -> Result<usize> {
        for w in [lo, hi].into_iter().flatten() {
            if !self.is_node(w) {
                return Err(Error::NotANode(w.to_string()));
            }
        }
        Ok(self
            .internal_set()
            .iter()
            .filter(|z| lo.map_or(true, |l| l < *z) && hi.map_or(true, |h| *z < h))
            .count())
    }

    /// Mirror image under bit complement.
    pub fn bar(&self) -> Tree {
        Tree::from_leaves_unchecked(self.leaves.iter().map(Word::bar).collect())
    }

    /// `T_n`: `T_1` has two leaves and `T_n` adds carets to the first two
    /// leaves of `T_{n-1}`.
    pub fn build_tn(n: usize) -> Result<Tree> {
        if n == 0 {
            return Err(Error::OutOfRange {
                index: 0,
                reason: "T_n needs n >= 1".into(),
            });
        }
        let mut t = Tree::trivial().add_caret(&Word::empty())?;
        for _ in 1..n {
            let first: Vec<Word> = t.leaves().take(2).cloned().collect();
            for leaf in &first {
                t = t.add_caret(leaf)?;
            }
        }
        Ok(t)
    }
}

/// `b_T^{-1}` on a leaf: drop trailing ones, then the final zero. A leaf made
/// only of ones is the image of ζ. The result does not depend on the tree.
pub(crate) fn b_preimage(leaf: &Word) -> Vertex {
    let bits = leaf.bits();
    match bits.iter().rposition(|&b| b == 0) {
        None => Vertex::Zeta,
        Some(i) => Vertex::Word(leaf.prefix(i)),
    }
}

fn validate_leaves(leaves: &BTreeSet<Word>) -> Result<()> {
    if leaves.is_empty() {
        return Err(Error::InvalidTree("no leaves".into()));
    }
    let mut internal = BTreeSet::new();
    for leaf in leaves {
        for n in 0..leaf.len() {
            let p = leaf.prefix(n);
            if leaves.contains(&p) {
                return Err(Error::InvalidTree(format!("{p} is a prefix of {leaf}")));
            }
            internal.insert(p);
        }
    }
    for n in &internal {
        for b in 0..2 {
            let c = n.child(b);
            if !internal.contains(&c) && !leaves.contains(&c) {
                return Err(Error::InvalidTree(format!("node {n} is missing child {c}")));
            }
        }
    }
    Ok(())
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for leaf in &self.leaves {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{leaf}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for Tree {
    type Err = Error;

    /// Parses the canonical space-separated, lex-sorted leaf list.
    fn from_str(s: &str) -> Result<Self> {
        let words = s
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Word>>>()?;
        if words.windows(2).any(|p| p[0] >= p[1]) {
            return Err(Error::Parse(format!("tree leaves not lex-sorted: {s:?}")));
        }
        Tree::from_leaves(words)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }
    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }
    fn v(s: &str) -> Vertex {
        s.parse().unwrap()
    }

    /// All trees with at most `max_leaves` leaves, by repeated caret addition.
    pub(crate) fn all_trees(max_leaves: usize) -> Vec<Tree> {
        let mut seen = BTreeSet::from([Tree::trivial()]);
        let mut frontier = vec![Tree::trivial()];
        while let Some(tree) = frontier.pop() {
            if tree.num_leaves() == max_leaves {
                continue;
            }
            for leaf in tree.leaves().cloned().collect::<Vec<_>>() {
                let next = tree.add_caret(&leaf).unwrap();
                if seen.insert(next.clone()) {
                    frontier.push(next);
                }
            }
        }
        seen.into_iter().collect()
    }

    #[test]
    fn nodes_examples() {
        assert!(Tree::trivial().nodes().is_empty());
        assert_eq!(t("0 10 11").nodes(), vec![w("e"), w("1")]);
        assert_eq!(t("00 01 1").nodes(), vec![w("0"), w("e")]);
    }

    #[test]
    fn b_map_examples() {
        assert_eq!(Tree::trivial().b_map(), vec![(Vertex::Zeta, w("e"))]);
        assert_eq!(
            t("0 10 11").b_map(),
            vec![(v("e"), w("0")), (v("1"), w("10")), (Vertex::Zeta, w("11"))]
        );
        assert_eq!(
            t("0 100 101 11").b_map(),
            vec![
                (v("e"), w("0")),
                (v("10"), w("100")),
                (v("1"), w("101")),
                (Vertex::Zeta, w("11"))
            ]
        );
    }

    #[test]
    fn b_agrees_with_sorted_pairing_on_small_trees() {
        for tree in all_trees(8) {
            for (x, leaf) in tree.b_map() {
                assert_eq!(tree.b(&x).unwrap(), leaf);
                assert_eq!(tree.b_inverse(&leaf).unwrap(), x);
            }
        }
    }

    #[test]
    fn add_caret_examples() {
        assert_eq!(Tree::trivial().add_caret(&w("e")).unwrap(), t("0 1"));
        assert_eq!(t("0 1").add_caret(&w("1")).unwrap(), t("0 10 11"));
        assert_eq!(t("0 10 11").add_caret(&w("0")).unwrap(), t("00 01 10 11"));
        assert_eq!(
            t("0 1").add_caret(&w("e")),
            Err(Error::NotALeaf("e".into()))
        );
    }

    #[test]
    fn common_expansion_examples() {
        let a = t("0 10 11");
        assert_eq!(a.common_expansion(&a), a);
        assert_eq!(t("0 1").common_expansion(&a), a);
        assert_eq!(a.common_expansion(&t("00 01 1")), t("00 01 10 11"));
    }

    #[test]
    fn leaf_depth_examples() {
        assert_eq!(Tree::trivial().leaf_depth(&Vertex::Zeta), Ok(0));
        assert_eq!(t("0 10 11").leaf_depth(&Vertex::Zeta), Ok(2));
        assert!(t("0 10 11").leaf_depth(&v("0")).is_err());
        assert!(t("0 10 11").leaf_depth(&v("111")).is_err());
    }

    #[test]
    fn gap_count_examples() {
        let full = t("00 01 10 11");
        assert_eq!(full.gap_count(Some(&w("0")), Some(&w("e"))), Ok(0));
        assert_eq!(full.gap_count(None, None), Ok(3));
        // base tree for Σ_3: nodes 00, 0, e
        let base = Tree::with_nodes([&w("00"), &w("0"), &w("e")]);
        assert_eq!(base.gap_count(None, Some(&w("00"))), Ok(0));
        assert_eq!(base.gap_count(Some(&w("00")), Some(&w("0"))), Ok(0));
        assert_eq!(base.gap_count(Some(&w("0")), Some(&w("e"))), Ok(0));
        assert_eq!(base.gap_count(Some(&w("e")), None), Ok(0));
        assert!(full.gap_count(Some(&w("00")), None).is_err());
    }

    #[test]
    fn tn_examples() {
        assert_eq!(Tree::build_tn(1).unwrap(), t("0 1"));
        assert_eq!(Tree::build_tn(2).unwrap(), t("00 01 10 11"));
        assert_eq!(Tree::build_tn(3).unwrap(), t("000 001 010 011 10 11"));
        assert_eq!(Tree::build_tn(4).unwrap().num_leaves(), 8);
        assert!(Tree::build_tn(0).is_err());
    }

    #[test]
    fn parse_rejects_non_canonical() {
        assert!("1 0".parse::<Tree>().is_err());
        assert!("0 10".parse::<Tree>().is_err());
        assert!("0 0 1".parse::<Tree>().is_err());
        assert_eq!(t("e"), Tree::trivial());
        assert_eq!(t("00 01 1").to_string(), "00 01 1");
    }

    #[test]
    fn leaves_exceed_nodes_by_one_and_b_preserves_order() {
        for tree in all_trees(8) {
            assert_eq!(tree.num_leaves(), tree.nodes().len() + 1);
            let pairs = tree.b_map();
            for p in pairs.windows(2) {
                assert!(p[0].0 < p[1].0 && p[0].1 < p[1].1);
            }
        }
    }

    #[test]
    fn caret_does_not_disturb_other_b_values() {
        for tree in all_trees(6) {
            for leaf in tree.leaves() {
                let bigger = tree.add_caret(leaf).unwrap();
                for (x, image) in tree.b_map() {
                    if &image != leaf {
                        assert_eq!(bigger.b(&x).unwrap(), image);
                    }
                }
                assert_eq!(bigger.remove_caret(leaf).unwrap(), tree);
            }
        }
    }

    fn arb_tree() -> impl Strategy<Value = Tree> {
        proptest::collection::vec(any::<prop::sample::Index>(), 0..7).prop_map(|picks| {
            let mut tree = Tree::trivial();
            for p in picks {
                let leaf = p.get(&tree.leaves().cloned().collect::<Vec<_>>()).clone();
                tree = tree.add_caret(&leaf).unwrap();
            }
            tree
        })
    }

    proptest! {
        #[test]
        fn common_expansion_is_a_join(a in arb_tree(), b in arb_tree(), c in arb_tree()) {
            let ab = a.common_expansion(&b);
            prop_assert_eq!(&ab, &b.common_expansion(&a));
            prop_assert_eq!(a.common_expansion(&a), a.clone());
            prop_assert_eq!(ab.common_expansion(&c), a.common_expansion(&b.common_expansion(&c)));
            prop_assert!(ab.refines(&a) && ab.refines(&b));
        }
    }
}
