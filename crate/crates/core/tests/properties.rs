//! Randomized invariants across the word, braid and presentation layers.

use std::sync::Arc;

use curvegroups::braid::{robb_multiply, BraidWord, RobbElement};
use curvegroups::freegroup::{Alphabet, FreeEndomorphism, FreeWord};
use curvegroups::presentation::{
    simplify, tietze_eliminate, todd_coxeter, FinitePresentation, DEFAULT_COSET_LIMIT,
};
use proptest::prelude::*;

fn word(rank: usize, max_len: usize) -> impl Strategy<Value = FreeWord> {
    prop::collection::vec((0..rank, prop_oneof![Just(1i8), Just(-1i8)]), 0..=max_len)
        .prop_map(|v| FreeWord::from_signed(&v))
}

fn braid(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    word(n - 1, max_len).prop_map(move |w| BraidWord::from_free_word(n, &w).unwrap())
}

fn robb(d: usize) -> impl Strategy<Value = RobbElement> {
    (any::<bool>(), prop::collection::vec(-5i64..=5, d - 1))
        .prop_map(|(mu, exponents)| RobbElement { mu, exponents })
}

proptest! {
    #[test]
    fn reduction_is_idempotent(w in word(3, 20)) {
        prop_assert_eq!(FreeWord::reduce(w.letters().iter().copied()), w.clone());
        prop_assert!(w.mul(&w.inverse()).is_identity());
        prop_assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn parse_inverts_format(w in word(3, 20)) {
        let al = Alphabet::numbered("x", 3);
        prop_assert_eq!(al.parse_word(&al.format_word(&w)).unwrap(), w.clone());
        prop_assert_eq!(al.parse_word(&al.format_word_compact(&w)).unwrap(), w);
    }

    #[test]
    fn conjugation_composes(w in word(3, 8), g in word(3, 6), h in word(3, 6)) {
        // w^(gh) = (w^h)^g with w^g = g w g⁻¹
        prop_assert_eq!(w.conjugate(&g.mul(&h)), w.conjugate(&h).conjugate(&g));
    }

    #[test]
    fn cyclic_key_ignores_rotation(w in word(3, 12), k in 0usize..12) {
        let c = w.cyclically_reduced();
        let letters = c.letters();
        if !letters.is_empty() {
            let k = k % letters.len();
            let rotated = FreeWord::reduce(letters[k..].iter().chain(&letters[..k]).copied());
            prop_assert_eq!(rotated.cyclic_key(), w.cyclic_key());
            prop_assert_eq!(w.inverse().cyclic_key(), w.cyclic_key());
        }
    }

    #[test]
    fn endomorphisms_distribute(
        images in prop::collection::vec(word(3, 5), 3),
        u in word(3, 10),
        v in word(3, 10),
    ) {
        let al = Arc::new(Alphabet::numbered("x", 3));
        let e = FreeEndomorphism::from_images(al, images).unwrap();
        let lhs = e.apply(&u.mul(&v)).unwrap();
        let rhs = e.apply(&u).unwrap().mul(&e.apply(&v).unwrap());
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(e.apply(&u.inverse()).unwrap(), e.apply(&u).unwrap().inverse());
    }

    #[test]
    fn artin_action_is_a_homomorphism(u in braid(5, 8), v in braid(5, 8)) {
        let uv = u.mul(&v).unwrap();
        let composed = u.artin_action().compose(&v.artin_action()).unwrap();
        let direct = uv.artin_action();
        for i in 0..5 {
            prop_assert_eq!(direct.image(i), composed.image(i));
        }
        let boundary = FreeWord::from_signed(&[(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]);
        prop_assert_eq!(uv.artin_action().apply(&boundary).unwrap(), boundary);
        prop_assert_eq!(uv.exponent_sum(), u.exponent_sum() + v.exponent_sum());
        let (pu, pv, puv) = (u.permutation(), v.permutation(), uv.permutation());
        for k in 0..5 {
            prop_assert_eq!(puv[k], pu[pv[k]]);
        }
    }

    #[test]
    fn images_follow_the_permutation(b in braid(4, 10)) {
        let act = b.artin_action();
        for (i, &p) in b.permutation().iter().enumerate() {
            let img = act.image(i);
            prop_assert_eq!(img.exponent_sum(p), 1);
            prop_assert_eq!(img.total_exponent(), 1);
        }
    }

    #[test]
    fn robb_group_axioms(a in robb(6), b in robb(6), c in robb(6)) {
        let m = |x: &RobbElement, y: &RobbElement| robb_multiply(x, y).unwrap();
        prop_assert_eq!(m(&m(&a, &b), &c), m(&a, &m(&b, &c)));
        prop_assert!(m(&a, &a.inverse()).is_identity());
        prop_assert!(m(&a.inverse(), &a).is_identity());
        prop_assert_eq!(m(&RobbElement::identity(6), &a), a.clone());
        let mu = RobbElement::mu(6);
        prop_assert_eq!(m(&mu, &a), m(&a, &mu));
    }
}

/// Finite groups given with a redundant generator `c = w(a, b)`.
const BASES: [(&str, usize); 4] = [
    ("< a, b | a^2, b^3, (a b)^5 >", 60),
    ("< a, b | a^2, b^3, (a b)^4 >", 24),
    ("< a, b | a^4, b^2 a^-2, b a b^-1 a >", 8),
    ("< a, b | a^5, b^2, (a b)^2 >", 10),
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tietze_elimination_preserves_order(k in 0usize..4, w in word(2, 6)) {
        let (text, order) = BASES[k];
        let base = FinitePresentation::parse(text).unwrap();
        let al = Alphabet::new(["a", "b", "c"]).unwrap();
        let defining = FreeWord::generator(2).inverse().mul(&w);
        let mut words: Vec<FreeWord> = base.relator_words().cloned().collect();
        words.push(defining);
        let p = FinitePresentation::from_words(Arc::new(al), words).unwrap();
        let r = p.relators().len() - 1;
        prop_assert_eq!(todd_coxeter(&p, &[], DEFAULT_COSET_LIMIT).index(), Some(order));
        let q = tietze_eliminate(&p, "c", r).unwrap();
        prop_assert_eq!(q.rank(), 2);
        prop_assert_eq!(todd_coxeter(&q, &[], DEFAULT_COSET_LIMIT).index(), Some(order));
        let s = simplify(&p, 10);
        prop_assert_eq!(todd_coxeter(&s.presentation, &[], DEFAULT_COSET_LIMIT).index(), Some(order));
    }

    #[test]
    fn presentation_display_round_trips(k in 0usize..4) {
        let p = FinitePresentation::parse(BASES[k].0).unwrap();
        prop_assert_eq!(FinitePresentation::parse(&p.to_string()).unwrap(), p);
    }
}
