use proptest::prelude::*;

use frameforge::congruence::{
    congruence_generators, is_congruential, join_congruences, principal_congruence, quotient,
};
use frameforge::corpus::{oracle_bijection, principal_join_counterexample};
use frameforge::iso::{canonical_form, is_isomorphic, AtomPermutation};
use frameforge::structure::{generated_subalgebra, relative_frame};
use frameforge::terms::{parse_quasi_identity, parse_term, BinOp, Term};
use frameforge::{frame_to_json, read_frame, BooleanFrame, Element};

fn frame_strategy(max_atoms: u32) -> impl Strategy<Value = BooleanFrame> {
    (0..=max_atoms).prop_flat_map(|k| {
        let n = 1usize << k;
        prop::collection::vec(0..n as Element, n).prop_map(move |t| BooleanFrame::new(k, t).unwrap())
    })
}

fn frame_with_perm(max_atoms: u32) -> impl Strategy<Value = (BooleanFrame, Vec<u32>)> {
    frame_strategy(max_atoms).prop_flat_map(|a| {
        let k = a.atoms();
        (Just(a), Just((0..k).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn term_strategy() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::Zero),
        Just(Term::One),
        prop::sample::select(vec!["x", "y", "z", "w1"]).prop_map(Term::var),
    ];
    leaf.prop_recursive(4, 32, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Term::not),
            inner.clone().prop_map(Term::f),
            inner.clone().prop_map(Term::g),
            (
                prop::sample::select(vec![BinOp::Meet, BinOp::Join, BinOp::Xor, BinOp::Implies]),
                inner.clone(),
                inner
            )
                .prop_map(|(op, l, r)| Term::bin(op, l, r)),
        ]
    })
}

proptest! {
    #[test]
    fn printed_terms_reparse(t in term_strategy()) {
        let printed = t.to_string();
        prop_assert_eq!(parse_term(&printed).unwrap(), t);
    }

    #[test]
    fn printed_quasi_identities_reparse(a in term_strategy(), b in term_strategy(), c in term_strategy()) {
        let text = format!("{a} <= {b} && {b} = {c} => {a} = {c}");
        let q = parse_quasi_identity(&text).unwrap();
        prop_assert_eq!(parse_quasi_identity(&q.to_string()).unwrap(), q);
    }

    #[test]
    fn permuted_frames_are_isomorphic((a, images) in frame_with_perm(4)) {
        let p = AtomPermutation::new(images).unwrap();
        let map = p.element_map();
        let mut table = vec![0; a.size()];
        for x in a.elements() {
            table[map[x as usize] as usize] = map[a.f(x) as usize];
        }
        let b = BooleanFrame::new(a.atoms(), table).unwrap();
        let found = is_isomorphic(&a, &b).expect("isomorphic");
        prop_assert!(found.is_isomorphism(&a, &b));
        let (ca, cb) = (canonical_form(&a, 8).unwrap(), canonical_form(&b, 8).unwrap());
        prop_assert_eq!(ca.table(), cb.table());
    }

    #[test]
    fn generators_are_congruential_and_meet_closed(a in frame_strategy(4)) {
        let gens = congruence_generators(&a);
        prop_assert!(gens.contains(&0));
        prop_assert!(gens.contains(&a.top()));
        for &x in &gens {
            prop_assert!(is_congruential(&a, x).unwrap());
            for &y in &gens {
                prop_assert!(gens.contains(&(x & y)));
            }
        }
    }

    #[test]
    fn principal_join_identity(a in frame_strategy(4)) {
        prop_assert_eq!(principal_join_counterexample(&a).unwrap(), None);
    }

    #[test]
    fn generators_match_oracle(a in frame_strategy(3)) {
        prop_assert!(oracle_bijection(&a).unwrap());
    }

    #[test]
    fn principal_congruence_is_least(a in frame_strategy(3), x in any::<u32>(), y in any::<u32>()) {
        let x = x & a.top();
        let y = y & a.top();
        let p = principal_congruence(&a, x, y).unwrap();
        prop_assert!(is_congruential(&a, p).unwrap());
        for g in congruence_generators(&a) {
            if (x ^ y) & !g == 0 {
                prop_assert_eq!(p & !g, 0);
            }
        }
        let j = join_congruences(&a, p, 0).unwrap();
        prop_assert_eq!(j, p);
    }

    #[test]
    fn quotient_atom_count(a in frame_strategy(4), pick in any::<prop::sample::Index>()) {
        let gens = congruence_generators(&a);
        let g = gens[pick.index(gens.len())];
        let (q, map) = quotient(&a, g).unwrap();
        prop_assert_eq!(q.atoms(), (!g & a.top()).count_ones());
        for x in a.elements() {
            prop_assert_eq!(map[a.f(x) as usize], q.f(map[x as usize]));
            prop_assert_eq!(map[x as usize] == 0, x & !g == 0);
        }
    }

    #[test]
    fn relative_frames_embed(a in frame_strategy(4), seeds in prop::collection::vec(any::<u32>(), 0..3)) {
        let seeds: Vec<Element> = seeds.into_iter().map(|s| s & a.top()).collect();
        let sub = generated_subalgebra(&a, &seeds).unwrap();
        for s in &seeds {
            prop_assert!(sub.contains(*s));
        }
        let (rel, embed) = relative_frame(&a, &sub).unwrap();
        prop_assert_eq!(embed.len(), rel.size());
        for x in rel.elements() {
            prop_assert_eq!(embed[rel.f(x) as usize], a.f(embed[x as usize]));
        }
    }

    #[test]
    fn json_round_trip(a in frame_strategy(5)) {
        prop_assert_eq!(read_frame(&frame_to_json(&a)).unwrap(), a);
    }
}
