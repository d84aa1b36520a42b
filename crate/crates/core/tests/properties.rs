mod common;

use std::cmp::Ordering;

use proptest::prelude::*;
use qv_core::presentations::{builtin_presentation, evaluate, is_identity};
use qv_core::quasi::{equals, iota, nu, oracle_depth, pi, pointwise_agree, GroupName, QElement};
use qv_core::words::{cyclic_order, lex_compare};
use qv_core::{GroupWord, Tree, VElement, Vertex, Word};

fn word_strategy(alphabet: &'static str, max: usize) -> impl Strategy<Value = GroupWord> {
    proptest::string::string_regex(&format!("[{alphabet}]{{0,{max}}}"))
        .unwrap()
        .prop_map(|s| s.parse().unwrap())
}

fn tqv(max: usize) -> impl Strategy<Value = GroupWord> {
    word_strategy("sabcdSABCD", max)
}

fn q(w: &GroupWord) -> QElement {
    evaluate(w, GroupName::TQV).unwrap()
}

fn bits() -> impl Strategy<Value = Word> {
    proptest::collection::vec(0u8..2, 0..7).prop_map(|b| Word::from_bits(&b))
}

fn vertex() -> impl Strategy<Value = Vertex> {
    prop_oneof![1 => Just(Vertex::Zeta), 7 => bits().prop_map(Vertex::Word)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn multiplication_is_associative(a in tqv(6), b in tqv(6), c in tqv(6)) {
        let (x, y, z) = (q(&a), q(&b), q(&c));
        prop_assert_eq!(x.multiply(&y).multiply(&z), x.multiply(&y.multiply(&z)));
    }

    #[test]
    fn identity_and_inverses(a in tqv(10)) {
        let x = q(&a);
        prop_assert_eq!(x.multiply(&QElement::identity()), x.clone());
        prop_assert_eq!(QElement::identity().multiply(&x), x.clone());
        prop_assert!(x.multiply(&x.invert()).is_identity());
        prop_assert!(is_identity(&a.concat(&a.inverse()), GroupName::TQV).unwrap());
    }

    #[test]
    fn evaluation_is_pointwise_composition(a in tqv(5), b in tqv(5), x in vertex()) {
        let (p, r) = (q(&a), q(&b));
        prop_assert_eq!(q(&a.concat(&b)).apply(&x), p.apply(&r.apply(&x)));
    }

    #[test]
    fn relators_are_a_congruence(g in tqv(6), i in 0usize..64, j in 0usize..64) {
        let rels = builtin_presentation(GroupName::TQV).unwrap().all_relators();
        let (r1, r2) = (&rels[i % rels.len()].word, &rels[j % rels.len()].word);
        prop_assert!(is_identity(&r1.conj(&g), GroupName::TQV).unwrap());
        prop_assert!(is_identity(&r1.concat(r2), GroupName::TQV).unwrap());
    }

    #[test]
    fn canonical_equality_matches_pointwise(a in tqv(7), b in tqv(7)) {
        let (x, y) = (q(&a), q(&b));
        prop_assert_eq!(equals(&x, &y), pointwise_agree(&x, &y, oracle_depth(&x, &y)));
    }

    #[test]
    fn serialization_round_trips(a in tqv(10)) {
        let x = q(&a);
        prop_assert_eq!(x.to_string().parse::<QElement>().unwrap(), x.clone());
        prop_assert_eq!(x.v.to_string().parse::<VElement>().unwrap(), x.v.clone());
        prop_assert_eq!(a.to_string().parse::<GroupWord>().unwrap(), a);
    }

    #[test]
    fn nu_is_an_involutive_automorphism(a in tqv(6), b in tqv(6), x in vertex()) {
        let (p, r) = (q(&a), q(&b));
        prop_assert_eq!(nu(&nu(&p)), p.clone());
        prop_assert_eq!(nu(&p.multiply(&r)), nu(&p).multiply(&nu(&r)));
        prop_assert_eq!(nu(&p).apply(&x), p.apply(&x.bar()).bar());
    }

    #[test]
    fn splitting_is_a_section(a in word_strategy("abcdABCD", 10)) {
        let v = q(&a).v;
        prop_assert_eq!(pi(&iota(&v)), v.clone());
        prop_assert!(iota(&v).sigma.is_identity());
    }

    #[test]
    fn f_and_t_membership(a in word_strategy("abAB", 8), c in word_strategy("abcABC", 8)) {
        prop_assert!(q(&a).v.is_in_f());
        prop_assert!(q(&c).v.is_in_t());
        prop_assert!(q(&a).apply(&Vertex::Zeta) == Vertex::Zeta);
    }

    #[test]
    fn lex_order_padding(w in bits()) {
        let x = Vertex::Word(w.clone());
        prop_assert_eq!(lex_compare(&Vertex::Word(w.child(0)), &x), Ordering::Less);
        prop_assert_eq!(lex_compare(&x, &Vertex::Word(w.child(1))), Ordering::Less);
        prop_assert_eq!(lex_compare(&x, &Vertex::Zeta), Ordering::Less);
    }

    #[test]
    fn bar_reverses_lex_order(x in bits(), y in bits()) {
        let (a, b) = (Vertex::Word(x), Vertex::Word(y));
        prop_assert_eq!(lex_compare(&a.bar(), &b.bar()), lex_compare(&b, &a));
    }

    #[test]
    fn cyclic_order_is_rotation_invariant(x in vertex(), y in vertex(), z in vertex()) {
        prop_assert_eq!(cyclic_order(&x, &y, &z), cyclic_order(&y, &z, &x));
    }

    #[test]
    fn common_expansion_refines_both(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let (s, t) = (common::random_tree(&mut rng, 8, 5), common::random_tree(&mut rng, 8, 5));
        let e = s.common_expansion(&t);
        prop_assert!(e.refines(&s) && e.refines(&t));
        prop_assert!(s.refines(&Tree::trivial()));
    }

    #[test]
    fn b_map_is_order_preserving(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let t = common::random_tree(&mut rng, 10, 6);
        let map = t.b_map();
        prop_assert_eq!(map.len(), t.num_leaves());
        let leaves: Vec<&Word> = map.iter().map(|(_, l)| l).collect();
        prop_assert!(leaves.windows(2).all(|p| p[0] < p[1]));
        for (x, l) in &map {
            prop_assert_eq!(&t.b_inverse(l).unwrap(), x);
        }
    }

    #[test]
    fn reduction_is_canonical(seed in any::<u64>()) {
        let mut rng = common::rng(seed);
        let d = common::random_diagram(&mut rng, 8, 4);
        let v = d.reduce();
        prop_assert!(v.diagram().collapsible_carets().is_empty());
        for leaf in d.left().leaves().take(2) {
            prop_assert_eq!(d.add_matched_caret(leaf).unwrap().reduce(), v.clone());
        }
    }
}
