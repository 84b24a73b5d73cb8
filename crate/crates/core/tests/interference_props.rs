mod common;

use morphlab::classic::{fibonacci, NamedMorphism};
use morphlab::interference::{
    barrier_certificate, factorizable, is_strongly_interference_free, InterferenceChecker, InterferenceWitness,
    DEFAULT_BARRIER_CAP,
};
use morphlab::oracles::{brute_force_interference, enumerate_interfered_factorizations, Budget};
use morphlab::words::reverse;
use morphlab::{Morphism, Word};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{binary_source_morphisms, m, strings_over, w, words_up_to};

#[test]
fn passes_split_the_witness_space() {
    // Forward pass finds witnesses with z non-empty, the reversed pass those
    // with x non-empty; together they cover all interfered factorizations.
    let budget = Budget::default();
    for phi in binary_source_morphisms(&['a', 'b'], 3).into_iter().filter(Morphism::is_injective) {
        let rev_phi = phi.reversal();
        for u in words_up_to(phi.source(), 4) {
            let img = phi.apply(&u).unwrap();
            let all = enumerate_interfered_factorizations(&phi, &img, &budget).unwrap();
            let fwd = factorizable(&phi, &img).unwrap();
            let bwd = factorizable(&rev_phi, &reverse(&img)).unwrap();
            assert_eq!(fwd.is_some(), all.iter().any(|f| !f.z.is_empty()), "{phi} u={u}");
            assert_eq!(bwd.is_some(), all.iter().any(|f| !f.x.is_empty()), "{phi} u={u}");
            if let Some(f) = fwd {
                assert!(f.is_valid_for(&phi, &img) && !f.z.is_empty());
            }
        }
    }
}

#[test]
fn three_letter_sources_agree_with_oracle() {
    let budget = Budget::default();
    let images = strings_over(&['a', 'b'], 1, 2);
    let mut checked = 0;
    for x in &images {
        for y in &images {
            for z in &images {
                let phi = Morphism::from_rules(&[('a', x), ('b', y), ('c', z)]).unwrap();
                if !phi.is_injective() {
                    continue;
                }
                let checker = InterferenceChecker::new(&phi).unwrap();
                for u in words_up_to(phi.source(), 4) {
                    let fast = checker.decide(&u).unwrap();
                    let slow = brute_force_interference(&phi, &u, &budget).unwrap();
                    assert_eq!(fast.interference_free, slow.is_none(), "{phi} u={u}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn barrier_certificates_are_sound() {
    for phi in binary_source_morphisms(&['a', 'b'], 3).into_iter().filter(Morphism::is_injective) {
        let checker = InterferenceChecker::new(&phi).unwrap();
        for u in words_up_to(phi.source(), 7) {
            if let Some((l, r)) = barrier_certificate(&phi, &u, DEFAULT_BARRIER_CAP).unwrap() {
                assert!(l.is_prefix_of(&u) && r.is_suffix_of(&u));
                assert!(checker.decide(&u).unwrap().interference_free, "{phi} u={u} barrier=({l}, {r})");
            }
        }
    }
}

#[test]
fn strongly_if_morphisms_are_if_on_random_words() {
    let mut rng = StdRng::seed_from_u64(7);
    for nm in NamedMorphism::ALL {
        let phi = nm.morphism();
        if !is_strongly_interference_free(&phi).unwrap().holds() {
            continue;
        }
        let checker = InterferenceChecker::new(&phi).unwrap();
        let k = phi.source().len() as u8;
        for _ in 0..200 {
            let len = rng.gen_range(1..=32);
            let syms: Vec<u8> = (0..len).map(|_| rng.gen_range(0..k)).collect();
            let u = Word::from_symbols(phi.source(), syms).unwrap();
            assert!(checker.decide(&u).unwrap().interference_free, "{nm} u={u}");
        }
    }
}

#[test]
fn inner_factor_witness() {
    // φ(b) = a sits strictly inside φ(a) = bab.
    let phi = m("a->bab;b->a");
    let u = w("b");
    let d = InterferenceChecker::new(&phi).unwrap().decide(&u).unwrap();
    let img = phi.apply(&u).unwrap();
    assert!(!d.interference_free);
    assert!(matches!(d.witness, Some(InterferenceWitness::Inner { host: 0, offset: 2 })), "{:?}", d.witness);
    assert!(d.witness.unwrap().is_valid_for(&phi, &img));
}

#[test]
fn non_injective_morphisms_need_opt_in() {
    let phi = m("a->ab;b->abab");
    assert!(InterferenceChecker::new(&phi).is_err());
    let opts = morphlab::interference::IfOptions { allow_non_injective: true };
    let d = InterferenceChecker::with_options(&phi, opts).unwrap().decide(&w("a")).unwrap();
    assert!(d.precondition_violated);
}

proptest! {
    #[test]
    fn witnesses_reassemble(u in "[ab]{1,40}") {
        let phi = fibonacci();
        let u = w(&u);
        let d = InterferenceChecker::new(&phi).unwrap().decide(&u).unwrap();
        if let Some(wit) = d.witness {
            prop_assert!(wit.is_valid_for(&phi, &phi.apply(&u).unwrap()));
        }
    }
}
