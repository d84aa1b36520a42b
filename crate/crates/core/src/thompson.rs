//! Tree-pair diagrams and Thompson's groups `F ≤ T ≤ V`.
//!
//! An element is stored as a reduced leaf bijection `leaf of L ↦ leaf of R`;
//! the two trees are the key set and the value set. Elements act on the
//! left, so [`VElement::multiply`]`(v, w)` is the composite `v ∘ w`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::trees::{b_preimage, Tree};
use crate::words::{Vertex, Word};

/// A possibly unreduced tree-pair diagram `(L, R, f)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreePairDiagram {
    pairs: BTreeMap<Word, Word>,
}

impl TreePairDiagram {
    /// `perm[i] = j` sends the `i`-th leaf of `left` to the `j`-th leaf of
    /// `right`, both counted in lex order.
    pub fn new(left: &Tree, right: &Tree, perm: &[usize]) -> Result<Self> {
        if left.num_leaves() != right.num_leaves() {
            return Err(Error::InvalidDiagram(format!(
                "leaf counts differ: {} vs {}",
                left.num_leaves(),
                right.num_leaves()
            )));
        }
        if perm.len() != left.num_leaves() {
            return Err(Error::InvalidDiagram("permutation has wrong length".into()));
        }
        let mut seen = vec![false; perm.len()];
        for &j in perm {
            if j >= perm.len() || std::mem::replace(&mut seen[j], true) {
                return Err(Error::InvalidDiagram("leaf map is not a bijection".into()));
            }
        }
        let rights: Vec<&Word> = right.leaves().collect();
        let pairs = left
            .leaves()
            .zip(perm)
            .map(|(l, &j)| (l.clone(), rights[j].clone()))
            .collect();
        Ok(TreePairDiagram { pairs })
    }

    /// The order-preserving diagram `(L, R)` of an element of F.
    pub fn order_preserving(left: &Tree, right: &Tree) -> Result<Self> {
        let perm: Vec<usize> = (0..left.num_leaves()).collect();
        Self::new(left, right, &perm)
    }

    /// Builds a diagram from explicit leaf pairs, validating both trees.
    pub fn from_pairs<I: IntoIterator<Item = (Word, Word)>>(pairs: I) -> Result<Self> {
        let pairs: BTreeMap<Word, Word> = pairs.into_iter().collect();
        Tree::from_leaves(pairs.keys().cloned())?;
        let right: BTreeSet<Word> = pairs.values().cloned().collect();
        if right.len() != pairs.len() {
            return Err(Error::InvalidDiagram("leaf map is not injective".into()));
        }
        Tree::from_leaves(right)?;
        Ok(TreePairDiagram { pairs })
    }

    pub fn identity_on(tree: &Tree) -> Self {
        TreePairDiagram {
            pairs: tree.leaves().map(|l| (l.clone(), l.clone())).collect(),
        }
    }

    pub fn left(&self) -> Tree {
        Tree::from_leaves_unchecked(self.pairs.keys().cloned().collect())
    }

    pub fn right(&self) -> Tree {
        Tree::from_leaves_unchecked(self.pairs.values().cloned().collect())
    }

    pub fn pairs(&self) -> &BTreeMap<Word, Word> {
        &self.pairs
    }

    pub fn num_leaves(&self) -> usize {
        self.pairs.len()
    }

    /// `perm[i] = j` in the convention of [`TreePairDiagram::new`].
    pub fn permutation(&self) -> Vec<usize> {
        let right: Vec<&Word> = self.pairs.values().collect::<BTreeSet<_>>().into_iter().collect();
        self.pairs
            .values()
            .map(|r| right.binary_search(&r).expect("value is a right leaf"))
            .collect()
    }

    fn leaf_above(&self, w: &Word) -> Option<(Word, Word)> {
        (0..=w.len()).find_map(|n| {
            let p = w.prefix(n);
            self.pairs.get(&p).map(|img| (p, img.clone()))
        })
    }

    /// Refines the left tree to `target` (which must refine it), carrying the
    /// right tree along by suffix.
    pub fn expand_left_to(&self, target: &Tree) -> Result<Self> {
        let mut pairs = BTreeMap::new();
        for x in target.leaves() {
            let (l, img) = self.leaf_above(x).ok_or_else(|| {
                Error::InvalidDiagram(format!("{x} is not below a left leaf"))
            })?;
            let s = x.prefix_split(&l).expect("l is a prefix of x");
            pairs.insert(x.clone(), img.concat(&s));
        }
        Ok(TreePairDiagram { pairs })
    }

    /// Refines the right tree to `target` (which must refine it).
    pub fn expand_right_to(&self, target: &Tree) -> Result<Self> {
        Ok(self.inverse().expand_left_to(target)?.inverse())
    }

    pub fn inverse(&self) -> Self {
        TreePairDiagram {
            pairs: self.pairs.iter().map(|(l, r)| (r.clone(), l.clone())).collect(),
        }
    }

    /// Collapses matched sibling carets until none remain.
    pub fn reduce(&self) -> VElement {
        let mut pairs = self.pairs.clone();
        let mut work: Vec<Word> = pairs.keys().filter_map(Word::parent).collect();
        work.sort();
        work.dedup();
        while let Some(p) = work.pop() {
            if let Some(u) = collapsible(&pairs, &p) {
                pairs.remove(&p.child(0));
                pairs.remove(&p.child(1));
                pairs.insert(p.clone(), u);
                if let Some(gp) = p.parent() {
                    work.push(gp);
                }
            }
        }
        VElement(TreePairDiagram { pairs })
    }

    /// Sibling pairs `(w, u)` such that the caret under `w` maps onto the caret
    /// under `u` in order.
    pub fn collapsible_carets(&self) -> Vec<Word> {
        let parents: BTreeSet<Word> = self.pairs.keys().filter_map(Word::parent).collect();
        parents
            .into_iter()
            .filter(|p| collapsible(&self.pairs, p).is_some())
            .collect()
    }

    /// Collapses the caret below `node`, if it is collapsible.
    pub fn collapse(&self, node: &Word) -> Option<Self> {
        let u = collapsible(&self.pairs, node)?;
        let mut pairs = self.pairs.clone();
        pairs.remove(&node.child(0));
        pairs.remove(&node.child(1));
        pairs.insert(node.clone(), u);
        Some(TreePairDiagram { pairs })
    }

    /// Adds a caret at the left leaf `leaf` and at its image.
    pub fn add_matched_caret(&self, leaf: &Word) -> Result<Self> {
        let img = self
            .pairs
            .get(leaf)
            .ok_or_else(|| Error::NotALeaf(leaf.to_string()))?
            .clone();
        let mut pairs = self.pairs.clone();
        pairs.remove(leaf);
        pairs.insert(leaf.child(0), img.child(0));
        pairs.insert(leaf.child(1), img.child(1));
        Ok(TreePairDiagram { pairs })
    }
}

fn collapsible(pairs: &BTreeMap<Word, Word>, p: &Word) -> Option<Word> {
    let a = pairs.get(&p.child(0))?;
    let b = pairs.get(&p.child(1))?;
    if a.last_bit() == Some(0) && b.last_bit() == Some(1) {
        let u = a.parent()?;
        if b.parent().as_ref() == Some(&u) {
            return Some(u);
        }
    }
    None
}

impl fmt::Display for TreePairDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let perm = self
            .permutation()
            .iter()
            .enumerate()
            .map(|(i, j)| format!("{i}:{j}"))
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "L={};R={};f={}", self.left(), self.right(), perm)
    }
}

impl fmt::Debug for TreePairDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for TreePairDiagram {
    type Err = Error;

    /// Parses `L=<tree>;R=<tree>;f=<i:j,...>`.
    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.trim().split(';');
        let mut field = |key: &str| -> Result<String> {
            let part = parts
                .next()
                .ok_or_else(|| Error::Parse(format!("missing field {key}")))?;
            part.trim()
                .strip_prefix(key)
                .and_then(|r| r.strip_prefix('='))
                .map(str::to_string)
                .ok_or_else(|| Error::Parse(format!("expected {key}=..., got {part:?}")))
        };
        let left: Tree = field("L")?.parse()?;
        let right: Tree = field("R")?.parse()?;
        let f = field("f")?;
        let mut perm = vec![usize::MAX; left.num_leaves()];
        for (k, entry) in f.split(',').enumerate() {
            let (i, j) = entry
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("bad map entry {entry:?}")))?;
            let i: usize = i.trim().parse().map_err(|_| Error::Parse(format!("bad index {i:?}")))?;
            let j: usize = j.trim().parse().map_err(|_| Error::Parse(format!("bad index {j:?}")))?;
            if i != k || i >= perm.len() {
                return Err(Error::Parse(format!("map entries must be listed as 0:..,1:..; got {entry:?}")));
            }
            perm[i] = j;
        }
        TreePairDiagram::new(&left, &right, &perm)
    }
}

/// An element of Thompson's group V, held as its reduced tree-pair diagram.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VElement(TreePairDiagram);

/// The four standard generators of V.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    A,
    B,
    C,
    D,
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(Generator::A),
            "B" => Ok(Generator::B),
            "C" => Ok(Generator::C),
            "D" => Ok(Generator::D),
            _ => Err(Error::UnknownGenerator(s.to_string())),
        }
    }
}

/// The families βₙ, γₙ, δₙ built from the standard generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Beta,
    Gamma,
    Delta,
}

impl VElement {
    pub fn identity() -> Self {
        VElement(TreePairDiagram::identity_on(&Tree::trivial()))
    }

    pub fn diagram(&self) -> &TreePairDiagram {
        &self.0
    }

    pub fn left(&self) -> Tree {
        self.0.left()
    }

    pub fn right(&self) -> Tree {
        self.0.right()
    }

    pub fn is_identity(&self) -> bool {
        self.0.pairs.len() == 1
    }

    /// The composite `self ∘ other`.
    pub fn multiply(&self, other: &VElement) -> VElement {
        let middle = other.right().common_expansion(&self.left());
        let first = other
            .0
            .expand_right_to(&middle)
            .expect("common expansion refines the right tree");
        let second = self
            .0
            .expand_left_to(&middle)
            .expect("common expansion refines the left tree");
        let pairs = first
            .pairs
            .into_iter()
            .map(|(a, t)| {
                let img = second.pairs[&t].clone();
                (a, img)
            })
            .collect();
        TreePairDiagram { pairs }.reduce()
    }

    pub fn invert(&self) -> VElement {
        VElement(self.0.inverse())
    }

    pub fn pow(&self, n: i64) -> VElement {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut acc = VElement::identity();
        for _ in 0..n.unsigned_abs() {
            acc = acc.multiply(&base);
        }
        acc
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &VElement) -> VElement {
        g.invert().multiply(self).multiply(g)
    }

    /// True iff the leaf bijection preserves left-to-right order.
    pub fn is_in_f(&self) -> bool {
        self.0.pairs.values().collect::<Vec<_>>().windows(2).all(|p| p[0] < p[1])
    }

    /// True iff the leaf bijection preserves the cyclic order of leaves.
    pub fn is_in_t(&self) -> bool {
        let perm = self.0.permutation();
        let k = perm.len();
        (0..k).all(|i| perm[i] == (perm[0] + i) % k)
    }

    /// Mirror image under bit complement of both trees.
    pub fn mirror(&self) -> VElement {
        VElement(TreePairDiagram {
            pairs: self.0.pairs.iter().map(|(l, r)| (l.bar(), r.bar())).collect(),
        })
    }

    /// Image of a vertex under the splitting `ι(v)`: nodes of `L` and ζ go
    /// through `b_R⁻¹ ∘ f ∘ b_L`, everything else by leaf-prefix substitution.
    pub fn iota_image(&self, x: &Vertex) -> Vertex {
        let leaf = match x {
            Vertex::Zeta => self.rightmost_left_leaf(),
            Vertex::Word(w) => match self.0.leaf_above(w) {
                Some((l, img)) => {
                    let s = w.prefix_split(&l).expect("l is a prefix of w");
                    return Vertex::Word(img.concat(&s));
                }
                None => {
                    let mut leaf = w.child(0);
                    while !self.0.pairs.contains_key(&leaf) {
                        leaf = leaf.child(1);
                    }
                    leaf
                }
            },
        };
        b_preimage(&self.0.pairs[&leaf])
    }

    fn rightmost_left_leaf(&self) -> Word {
        self.0.pairs.keys().next_back().expect("non-empty").clone()
    }

    /// The standard generators: A and B generate F, C is the order-three
    /// rotation of T, D the leaf transposition `0 ↔ 10` of V.
    pub fn generator(g: Generator) -> VElement {
        let t = |s: &str| s.parse::<Tree>().expect("literal tree");
        let d = match g {
            Generator::A => TreePairDiagram::order_preserving(&t("0 10 11"), &t("00 01 1")),
            Generator::B => {
                TreePairDiagram::order_preserving(&t("0 10 110 111"), &t("0 100 101 11"))
            }
            Generator::C => TreePairDiagram::new(&t("0 10 11"), &t("0 10 11"), &[2, 0, 1]),
            Generator::D => TreePairDiagram::new(&t("0 10 11"), &t("0 10 11"), &[1, 0, 2]),
        };
        d.expect("generator literal").reduce()
    }

    /// βₙ = α^{-(n-1)} β α^{n-1}, γₙ = α^{-(n-1)} γ β^{n-1},
    /// δ₀ = δ, δ₁ = γ₂⁻¹ δ γ₂ and δₙ = α^{-(n-1)} δ₁ α^{n-1}.
    pub fn derived_generator(family: Family, n: i64) -> Result<VElement> {
        let a = VElement::generator(Generator::A);
        let min = if family == Family::Delta { 0 } else { 1 };
        if n < min {
            return Err(Error::OutOfRange {
                index: n,
                reason: format!("{family:?} is defined for n >= {min}"),
            });
        }
        let shift = |x: &VElement| a.pow(-(n - 1)).multiply(x).multiply(&a.pow(n - 1));
        Ok(match family {
            Family::Beta => shift(&VElement::generator(Generator::B)),
            Family::Gamma => a
                .pow(-(n - 1))
                .multiply(&VElement::generator(Generator::C))
                .multiply(&VElement::generator(Generator::B).pow(n - 1)),
            Family::Delta if n == 0 => VElement::generator(Generator::D),
            Family::Delta => {
                let g2 = VElement::derived_generator(Family::Gamma, 2)?;
                let d1 = VElement::generator(Generator::D).conjugate_by(&g2);
                shift(&d1)
            }
        })
    }
}

impl fmt::Display for VElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for VElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for VElement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<TreePairDiagram>().map(|d| d.reduce())
    }
}

impl From<TreePairDiagram> for VElement {
    fn from(d: TreePairDiagram) -> Self {
        d.reduce()
    }
}
