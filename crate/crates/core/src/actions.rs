//! Orbits and stabilisers of the actions of F, T and V on tuples of vertices,
//! the elements `λ_{n,i}`, the subgroups `Lₙ` and the leaf-depth characters.
//!
//! Witnesses always map the base tuple `(0^{n-1}, …, 0, ε)` onto the target.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::presentations::{beta_word, delta_word, GroupWord};
use crate::thompson::{TreePairDiagram, VElement};
use crate::trees::Tree;
use crate::words::{is_cyclically_ordered, Vertex, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Sigma,
    Lambda,
    Delta,
}

impl Flavor {
    fn prefix(self) -> char {
        match self {
            Flavor::Sigma => 'S',
            Flavor::Lambda => 'L',
            Flavor::Delta => 'D',
        }
    }
}

/// An element of `Σₙ`, `Λₙ` or `Δₙ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexTuple {
    flavor: Flavor,
    entries: Vec<Vertex>,
}

impl VertexTuple {
    pub fn new(flavor: Flavor, entries: Vec<Vertex>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::MalformedTuple("tuple is empty".into()));
        }
        let mut sorted = entries.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != entries.len() {
            return Err(Error::MalformedTuple("entries repeat".into()));
        }
        match flavor {
            Flavor::Sigma => {
                if entries.iter().any(Vertex::is_zeta) {
                    return Err(Error::MalformedTuple("ζ is not allowed in Σₙ".into()));
                }
                if entries.windows(2).any(|p| p[0] >= p[1]) {
                    return Err(Error::MalformedTuple("Σₙ entries must increase".into()));
                }
            }
            Flavor::Lambda => {
                if !is_cyclically_ordered(&entries) {
                    return Err(Error::MalformedTuple("Λₙ entries must be cyclically ordered".into()));
                }
            }
            Flavor::Delta => {}
        }
        Ok(VertexTuple { flavor, entries })
    }

    /// `(0^{n-1}, …, 0, ε)`.
    pub fn base(flavor: Flavor, n: usize) -> Result<Self> {
        Self::new(flavor, base_entries(n))
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn entries(&self) -> &[Vertex] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_depth(&self) -> usize {
        self.entries.iter().map(Vertex::depth).max().unwrap_or(0)
    }

    /// The tuple with each entry mapped through `g`, revalidated.
    pub fn map(&self, g: impl Fn(&Vertex) -> Vertex) -> Result<Self> {
        Self::new(self.flavor, self.entries.iter().map(g).collect())
    }
}

fn base_entries(n: usize) -> Vec<Vertex> {
    (1..=n).map(|i| Vertex::Word(Word::zeros(n - i))).collect()
}

impl fmt::Display for VertexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.entries.iter().map(Vertex::to_string).collect();
        write!(f, "{}:{}", self.flavor.prefix(), body.join(","))
    }
}

impl fmt::Debug for VertexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for VertexTuple {
    type Err = Error;

    /// Parses `S:0,e`, `L:e,z` or `D:z,e`.
    fn from_str(s: &str) -> Result<Self> {
        let (flavor, body) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::MalformedTuple(format!("missing flavor prefix in {s:?}")))?;
        let flavor = match flavor {
            "S" => Flavor::Sigma,
            "L" => Flavor::Lambda,
            "D" => Flavor::Delta,
            other => return Err(Error::MalformedTuple(format!("unknown flavor {other:?}"))),
        };
        let entries = body
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<Vertex>>>()?;
        Self::new(flavor, entries)
    }
}

fn require_flavor(t: &VertexTuple, flavor: Flavor) -> Result<()> {
    if t.flavor == flavor {
        Ok(())
    } else {
        Err(Error::MalformedTuple(format!("expected a {flavor:?} tuple, got {t}")))
    }
}

fn words_of(t: &VertexTuple) -> Vec<Word> {
    t.entries.iter().filter_map(|x| x.as_word().cloned()).collect()
}

fn add_right_vine(mut tree: Tree, leaf: Word, carets: usize) -> Tree {
    let mut at = leaf;
    for _ in 0..carets {
        tree = tree.add_caret(&at).expect("vine grows at a leaf");
        at = at.child(1);
    }
    tree
}

/// An element of F whose splitting maps `0^{n-i}` to the `i`-th target.
pub fn sigma_witness(targets: &VertexTuple) -> Result<VElement> {
    require_flavor(targets, Flavor::Sigma)?;
    let xs = words_of(targets);
    let n = xs.len();
    let right = Tree::with_nodes(xs.iter());
    let gap = |lo: Option<&Word>, hi: Option<&Word>| {
        right.gap_count(lo, hi).expect("targets are nodes")
    };
    let mut left = Tree::with_nodes(base_entries(n).iter().filter_map(Vertex::as_word));
    left = add_right_vine(left, Word::zeros(n), gap(None, Some(&xs[0])));
    for i in 1..n {
        let mut leaf = Word::zeros(n - i);
        leaf = leaf.child(1);
        left = add_right_vine(left, leaf, gap(Some(&xs[i - 1]), Some(&xs[i])));
    }
    left = add_right_vine(left, Word::ones(1), gap(Some(&xs[n - 1]), None));
    Ok(TreePairDiagram::order_preserving(&left, &right)?.reduce())
}

/// The element of V represented by `(tree, tree, perm)` where `perm` is given
/// on positions in `nodes(tree) ∪ {ζ}`.
fn position_permutation(tree: &Tree, perm: &[usize]) -> Result<VElement> {
    Ok(TreePairDiagram::new(tree, tree, perm)?.reduce())
}

fn slots(tree: &Tree) -> Vec<Vertex> {
    let mut s: Vec<Vertex> = tree.nodes().into_iter().map(Vertex::Word).collect();
    s.push(Vertex::Zeta);
    s
}

fn minimal_tree(t: &VertexTuple) -> Tree {
    Tree::with_nodes(words_of(t).iter())
}

/// An element of T whose splitting maps the base tuple onto `targets`.
pub fn lambda_witness(targets: &VertexTuple) -> Result<VElement> {
    require_flavor(targets, Flavor::Lambda)?;
    if let Ok(w) = as_sigma(targets) {
        return sigma_witness(&w);
    }
    let tree = minimal_tree(targets);
    let first = tree.b(&targets.entries[0])?;
    let tree = tree.add_caret(&first)?;
    let slots = slots(&tree);
    let m = slots.len() - 1;
    let free = slots
        .iter()
        .position(|x| x.as_word() == Some(&first))
        .expect("new node is a slot");
    let k = (m - free) % (m + 1);
    let perm: Vec<usize> = (0..=m).map(|p| (p + k) % (m + 1)).collect();
    let rotation = position_permutation(&tree, &perm)?;
    finish_with_sigma(targets, rotation)
}

/// An element of V whose splitting maps the base tuple onto `targets`.
pub fn delta_witness(targets: &VertexTuple) -> Result<VElement> {
    require_flavor(targets, Flavor::Delta)?;
    if let Ok(w) = as_sigma(targets) {
        return sigma_witness(&w);
    }
    let tree = minimal_tree(targets);
    let leftmost = tree.leaves().next().expect("trees have leaves").clone();
    let tree = tree.add_caret(&leftmost)?;
    let slots = slots(&tree);
    let pos: Vec<usize> = targets
        .entries
        .iter()
        .map(|x| slots.iter().position(|s| s == x).expect("target is a slot"))
        .collect();
    let mut perm = vec![usize::MAX; slots.len()];
    for (i, &p) in pos.iter().enumerate() {
        perm[p] = i;
    }
    let mut next = pos.len();
    for p in perm.iter_mut().filter(|p| **p == usize::MAX) {
        *p = next;
        next += 1;
    }
    let sorter = position_permutation(&tree, &perm)?;
    finish_with_sigma(targets, sorter)
}

fn as_sigma(t: &VertexTuple) -> Result<VertexTuple> {
    VertexTuple::new(Flavor::Sigma, t.entries.clone())
}

/// Given `u` sending the targets to an increasing tuple of words, returns
/// `u⁻¹ ∘ sigma_witness(u(targets))`.
fn finish_with_sigma(targets: &VertexTuple, u: VElement) -> Result<VElement> {
    let moved = VertexTuple::new(
        Flavor::Sigma,
        targets.entries.iter().map(|x| u.iota_image(x)).collect(),
    )?;
    Ok(u.invert().multiply(&sigma_witness(&moved)?))
}

/// Any of the three witnesses, by tuple flavor.
pub fn witness(targets: &VertexTuple) -> Result<VElement> {
    match targets.flavor {
        Flavor::Sigma => sigma_witness(targets),
        Flavor::Lambda => lambda_witness(targets),
        Flavor::Delta => delta_witness(targets),
    }
}

/// The groups whose stabiliser generators are tabulated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StabilizerGroup {
    QF,
    TQT,
    TQV,
}

/// Generators of the stabiliser of `(0, ε)` in F (QF), of `(ε, ζ)` in T
/// (tQT) and of `(ε, ζ)` in V (tQV), as words in `a, b, c, d`.
pub fn stabilizer_generators(g: StabilizerGroup) -> Vec<GroupWord> {
    let w = |s: &str| s.parse::<GroupWord>().expect("literal word");
    match g {
        StabilizerGroup::QF => vec![
            w("b"),
            w("Aba"),
            w("aaaBAA"),
            w("aabbABaBAA"),
            w("abbABaBA"),
            w("abAbbABaBaBA"),
        ],
        StabilizerGroup::TQT => vec![w("b"), w("Aba"), w("aaBA"), w("abbABaBA")],
        StabilizerGroup::TQV => {
            let a = w("a");
            let b2 = beta_word(2);
            let b3 = beta_word(3);
            let ab2 = a.concat(&b2);
            let wrap = |mid: &GroupWord| ab2.concat(mid).concat(&ab2.inverse());
            let alpha_p = w("aa").concat(&w("BCadAcb")).concat(&w("AB"));
            let beta_p = a
                .concat(&b2)
                .concat(&b2)
                .concat(&b3.inverse())
                .concat(&b2.inverse())
                .concat(&a.inverse());
            let gamma_p = wrap(
                &w("d")
                    .concat(&delta_word(2))
                    .concat(&delta_word(1))
                    .concat(&w("d")),
            );
            let delta_p = wrap(
                &delta_word(1)
                    .concat(&delta_word(0))
                    .concat(&delta_word(1)),
            );
            vec![alpha_p, beta_p, gamma_p, delta_p, w("aaBA"), w("b")]
        }
    }
}

/// The tuple each stabiliser set fixes.
pub fn stabilized_tuple(g: StabilizerGroup) -> Vec<Vertex> {
    match g {
        StabilizerGroup::QF => vec![Vertex::word("0"), Vertex::root()],
        StabilizerGroup::TQT | StabilizerGroup::TQV => vec![Vertex::root(), Vertex::Zeta],
    }
}

/// The embedding `V → V′` gluing the subtree under 0 at 00 and the subtree
/// under 1 at 10, fixing the leaves 01 and 11.
pub fn embed_v_prime(v: &VElement) -> VElement {
    let glue = |w: &Word| {
        let mut bits = vec![w.bits()[0], 0];
        bits.extend_from_slice(&w.bits()[1..]);
        Word::from_bits(&bits)
    };
    let d = if v.is_identity() {
        v.diagram().clone()
    } else {
        let mut pairs: Vec<(Word, Word)> =
            v.diagram().pairs().iter().map(|(l, r)| (glue(l), glue(r))).collect();
        pairs.push((Word::from_bits(&[0, 1]), Word::from_bits(&[0, 1])));
        pairs.push((Word::from_bits(&[1, 1]), Word::from_bits(&[1, 1])));
        TreePairDiagram::from_pairs(pairs).expect("glued trees are complete")
    };
    d.reduce()
}

/// The element `λ_{n,i}` of F: `Tₙ` with a caret on its `2i`-th leaf, over
/// `Tₙ` with a caret on its `(2i-1)`-th leaf.
pub fn lambda_ni(n: i64, i: i64) -> Result<VElement> {
    if n < 1 || i < 1 || i > n {
        return Err(Error::OutOfRange {
            index: i,
            reason: format!("λ_(n,i) needs 1 <= i <= n, got n = {n}"),
        });
    }
    let t = Tree::build_tn(n as usize)?;
    let leaves: Vec<Word> = t.leaves().cloned().collect();
    let i = i as usize;
    let left = t.add_caret(&leaves[2 * i - 1])?;
    let right = t.add_caret(&leaves[2 * i - 2])?;
    Ok(TreePairDiagram::order_preserving(&left, &right)?.reduce())
}

/// The vertices `0^{n-2}, …, 0, ε, ζ` whose `b`-images in `Tₙ` are its
/// even-numbered leaves.
pub fn ln_coordinates(n: usize) -> Vec<Vertex> {
    let mut out = base_entries(n - 1);
    out.push(Vertex::Zeta);
    out
}

/// True iff `ι(v)` fixes the full subtrees below the even-numbered leaves of
/// `Tₙ` pointwise.
pub fn in_ln(v: &VElement, n: usize) -> Result<bool> {
    if n < 2 {
        return Err(Error::OutOfRange {
            index: n as i64,
            reason: "Lₙ is defined for n >= 2".into(),
        });
    }
    if v.is_identity() {
        return Ok(true);
    }
    let t = Tree::build_tn(n)?;
    let pairs = v.diagram().pairs();
    let fixed = t.leaves().skip(1).step_by(2).all(|leaf| {
        (0..=leaf.len()).any(|k| {
            let p = leaf.prefix(k);
            pairs.get(&p) == Some(&p)
        })
    });
    Ok(fixed)
}

/// A representative of `v` in which `x` is a node of the left tree.
fn diagram_with_node(v: &VElement, x: &Vertex) -> TreePairDiagram {
    let mut d = v.diagram().clone();
    if let Vertex::Word(w) = x {
        while !d.left().is_node(w) {
            let leaf = d.left().leaf_above(w).expect("some leaf is a prefix of x or below it");
            d = d.add_matched_caret(&leaf).expect("leaf of the left tree");
        }
    }
    d
}

/// `χ̃ₓ(v) = l_x(L) − l_x(R)` for `v` fixing `x`.
pub fn tilde_chi(x: &Vertex, v: &VElement) -> Result<i64> {
    if &v.iota_image(x) != x {
        return Err(Error::NotStabilized(x.to_string()));
    }
    let d = diagram_with_node(v, x);
    let l = d.left().leaf_depth(x)? as i64;
    let r = d.right().leaf_depth(x)? as i64;
    Ok(l - r)
}

/// `(χ₀(f), χ₁(f))` for `f ∈ F`, with `χ₁ = χ̃_ζ` and `χ₀ = χ₁ ∘ ν`.
pub fn chi(f: &VElement) -> Result<(i64, i64)> {
    if !f.is_in_f() {
        return Err(Error::NotAMember("F".into()));
    }
    Ok((
        tilde_chi(&Vertex::Zeta, &f.mirror())?,
        tilde_chi(&Vertex::Zeta, f)?,
    ))
}

/// Exponents and result of [`conj_into_ln`]: `w = Π λ_{n,i}^{bᵢ} · v · Π λ_{n,i}^{-aᵢ}`,
/// where `aᵢ` and `bᵢ` are the excess leaf depths of the i-th coordinate in the
/// padded left and right trees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LnNormalization {
    pub a: Vec<i64>,
    pub b: Vec<i64>,
    pub w: VElement,
}

/// Conjugates an element fixing `(0^{n-2}, …, 0, ε, ζ)` into `Lₙ`.
pub fn conj_into_ln(n: usize, v: &VElement) -> Result<LnNormalization> {
    if n < 2 {
        return Err(Error::OutOfRange {
            index: n as i64,
            reason: "Lₙ is defined for n >= 2".into(),
        });
    }
    let coords = ln_coordinates(n);
    if let Some(x) = coords.iter().find(|x| &v.iota_image(x) != *x) {
        return Err(Error::NotStabilized(x.to_string()));
    }
    let tn = Tree::build_tn(n)?;
    let targets: Vec<usize> = coords.iter().map(|x| tn.leaf_depth(x).expect("node of Tₙ")).collect();

    let mut d = v.diagram().clone();
    for x in &coords {
        if let Vertex::Word(w) = x {
            while !d.left().is_node(w) || !d.right().is_node(w) {
                let leaf = d.left().leaf_above(w).expect("prefix leaf");
                d = d.add_matched_caret(&leaf)?;
            }
        }
    }
    loop {
        let (left, right) = (d.left(), d.right());
        let short = coords.iter().zip(&targets).find(|(x, &t)| {
            left.leaf_depth(x).unwrap() < t || right.leaf_depth(x).unwrap() < t
        });
        match short {
            Some((x, _)) => d = d.add_matched_caret(&left.b(x)?)?,
            None => break,
        }
    }
    let (left, right) = (d.left(), d.right());
    let a: Vec<i64> = coords
        .iter()
        .zip(&targets)
        .map(|(x, &t)| left.leaf_depth(x).unwrap() as i64 - t as i64)
        .collect();
    let b: Vec<i64> = coords
        .iter()
        .zip(&targets)
        .map(|(x, &t)| right.leaf_depth(x).unwrap() as i64 - t as i64)
        .collect();

    let lambdas: Vec<VElement> = (1..=n as i64).map(|i| lambda_ni(n as i64, i).unwrap()).collect();
    let mut w = VElement::identity();
    for (l, &e) in lambdas.iter().zip(&b) {
        w = w.multiply(&l.pow(e));
    }
    w = w.multiply(v);
    for (l, &e) in lambdas.iter().zip(&a).rev() {
        w = w.multiply(&l.pow(-e));
    }
    Ok(LnNormalization { a, b, w })
}

/// Exponents and result of [`conj_into_l2`]: `w = λ^c μ^d v λ^{-a} μ^{-b}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct L2Normalization {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub w: VElement,
}

pub fn conj_into_l2(v: &VElement) -> Result<L2Normalization> {
    let r = conj_into_ln(2, v)?;
    Ok(L2Normalization {
        a: r.a[0],
        b: r.a[1],
        c: r.b[0],
        d: r.b[1],
        w: r.w,
    })
}

/// An element of F fixing ε, 0 and 1 with `χ = (0, a)`.
pub fn bnsr_witness_fixing(a: i64) -> VElement {
    let base = Tree::with_nodes([Word::empty(), Word::ones(1), Word::ones(2)].iter());
    let k = a.unsigned_abs() as usize;
    let mut left = base.clone();
    let mut right = base;
    for _ in 0..k {
        let largest = left.leaves().next_back().unwrap().clone();
        left = left.add_caret(&largest).unwrap();
        let second = right.leaves().rev().nth(1).unwrap().clone();
        right = right.add_caret(&second).unwrap();
    }
    let f = TreePairDiagram::order_preserving(&left, &right)
        .expect("equal leaf counts")
        .reduce();
    if a < 0 {
        f.invert()
    } else {
        f
    }
}

/// An element of F with `χ = (0, 0)` whose splitting sends `0 ↦ x1`, `ε ↦ x2`.
pub fn kernel_transitivity_witness(x1: &Word, x2: &Word) -> Result<VElement> {
    if x1 >= x2 {
        return Err(Error::MalformedTuple(format!("{x1} must be lex-below {x2}")));
    }
    let t = VertexTuple::new(Flavor::Sigma, vec![x1.clone().into(), x2.clone().into()])?;
    let f = sigma_witness(&t)?.invert();
    let (c0, c1) = chi(&f)?;
    let f1 = bnsr_witness_fixing(-c1);
    let f0 = bnsr_witness_fixing(-c0);
    Ok(f0.mirror().multiply(&f1).multiply(&f).invert())
}
