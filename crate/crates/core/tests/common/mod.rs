#![allow(dead_code)]

use qv_core::actions::{Flavor, VertexTuple};
use qv_core::presentations::{evaluate, symbols_for};
use qv_core::quasi::{membership, GroupName, QElement};
use qv_core::{FinitePermutation, GroupWord, Tree, TreePairDiagram, VElement, Vertex, Word};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_word_in(rng: &mut ChaCha8Rng, symbols: &[char], max_len: usize) -> GroupWord {
    let len = rng.gen_range(0..=max_len);
    let text: String = (0..len)
        .map(|_| {
            let c = *symbols.choose(rng).unwrap();
            if rng.gen_bool(0.5) {
                c.to_ascii_uppercase()
            } else {
                c
            }
        })
        .collect();
    text.parse().unwrap()
}

pub fn random_word(rng: &mut ChaCha8Rng, g: GroupName, max_len: usize) -> GroupWord {
    random_word_in(rng, symbols_for(g).unwrap(), max_len)
}

pub fn random_product(rng: &mut ChaCha8Rng, gens: &[GroupWord], max_len: usize) -> GroupWord {
    let len = rng.gen_range(0..=max_len);
    (0..len).fold(GroupWord::empty(), |acc, _| {
        let x = gens.choose(rng).unwrap();
        acc.concat(&if rng.gen_bool(0.5) { x.clone() } else { x.inverse() })
    })
}

pub fn eval(w: &GroupWord) -> QElement {
    evaluate(w, GroupName::TQV).unwrap()
}

/// A random element of `g`; for QT and QV a transposition repairs the image of ζ.
pub fn random_element(rng: &mut ChaCha8Rng, g: GroupName, max_len: usize) -> QElement {
    let alphabet = match g {
        GroupName::QT => GroupName::TQT,
        GroupName::QV => GroupName::TQV,
        other => other,
    };
    let mut q = evaluate(&random_word(rng, alphabet, max_len), alphabet).unwrap();
    let z = q.apply(&Vertex::Zeta);
    if matches!(g, GroupName::QT | GroupName::QV) && z != Vertex::Zeta {
        q = QElement::from_permutation(FinitePermutation::transposition(&z, &Vertex::Zeta))
            .multiply(&q);
    }
    assert!(membership(&q, g));
    q
}

pub fn random_v(rng: &mut ChaCha8Rng, max_len: usize) -> VElement {
    eval(&random_word(rng, GroupName::V, max_len)).v
}

pub fn random_f(rng: &mut ChaCha8Rng, max_len: usize) -> VElement {
    eval(&random_word(rng, GroupName::F, max_len)).v
}

pub fn random_vertex(rng: &mut ChaCha8Rng, max_depth: usize, zeta: bool) -> Vertex {
    if zeta && rng.gen_ratio(1, 8) {
        return Vertex::Zeta;
    }
    let len = rng.gen_range(0..=max_depth);
    let bits: Vec<u8> = (0..len).map(|_| rng.gen_range(0..2)).collect();
    Vertex::Word(Word::from_bits(&bits))
}

pub fn random_tuple(rng: &mut ChaCha8Rng, flavor: Flavor, n: usize, max_depth: usize) -> VertexTuple {
    let zeta = flavor != Flavor::Sigma;
    let mut entries: Vec<Vertex> = Vec::new();
    while entries.len() < n {
        let x = random_vertex(rng, max_depth, zeta);
        if !entries.contains(&x) {
            entries.push(x);
        }
    }
    match flavor {
        Flavor::Sigma => entries.sort(),
        Flavor::Lambda => {
            entries.sort();
            let k = rng.gen_range(0..n);
            entries.rotate_left(k);
        }
        Flavor::Delta => {}
    }
    VertexTuple::new(flavor, entries).unwrap()
}

/// A random tree with at most `max_leaves` leaves, none deeper than `max_depth`.
pub fn random_tree(rng: &mut ChaCha8Rng, max_leaves: usize, max_depth: usize) -> Tree {
    let target = rng.gen_range(1..=max_leaves);
    let mut t = Tree::trivial();
    while t.num_leaves() < target {
        let open: Vec<Word> = t.leaves().filter(|l| l.len() < max_depth).cloned().collect();
        let Some(l) = open.choose(rng) else { break };
        t = t.add_caret(l).unwrap();
    }
    t
}

/// A random unreduced diagram: two trees of equal size and a random bijection.
pub fn random_diagram(rng: &mut ChaCha8Rng, max_leaves: usize, max_depth: usize) -> TreePairDiagram {
    loop {
        let l = random_tree(rng, max_leaves, max_depth);
        let r = random_tree(rng, max_leaves, max_depth);
        if l.num_leaves() == r.num_leaves() {
            let mut perm: Vec<usize> = (0..l.num_leaves()).collect();
            if rng.gen_bool(0.5) {
                perm.shuffle(rng);
            }
            return TreePairDiagram::new(&l, &r, &perm).unwrap();
        }
    }
}
