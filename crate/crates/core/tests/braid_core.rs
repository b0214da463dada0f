use braidcable::braid::bigelow::{delta5, psi1, psi2};
use braidcable::braid::{
    artin_action, artin_action_is_trivial, bigelow_element, block_crossing, cable_word, linking_numbers,
    pure_braid_generator, random_pure_word, BraidWord,
};
use braidcable::Error;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn word(n: usize, letters: &[i64]) -> BraidWord {
    BraidWord::new(n, letters.to_vec()).unwrap()
}

fn braid_word(max_n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    (2..=max_n).prop_flat_map(move |n| {
        let letter = (1..n as i64, any::<bool>()).prop_map(|(k, neg)| if neg { -k } else { k });
        prop::collection::vec(letter, 0..=max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
    })
}

/// Braid relators of `B_n`, as words equal to the identity.
fn relators(n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 1..n as i64 {
        for j in 1..n as i64 {
            if (i - j).abs() == 1 {
                out.push(vec![i, j, i, -j, -i, -j]);
            } else if (i - j).abs() >= 2 {
                out.push(vec![i, j, -i, -j]);
            }
        }
    }
    out
}

#[test]
fn permutation_examples() {
    assert_eq!(word(3, &[1, 2, 1]).underlying_permutation(), vec![2, 1, 0]);
    assert_eq!(BraidWord::identity(4).underlying_permutation(), vec![0, 1, 2, 3]);
    assert!(bigelow_element().is_pure());
}

#[test]
fn exponent_sum_examples() {
    assert_eq!(word(3, &[1, 1, -2]).exponent_sum(), 1);
    let c = BraidWord::commutator(&word(4, &[1, 3, 2]), &word(4, &[-2, 3])).unwrap();
    assert_eq!(c.exponent_sum(), 0);
    assert_eq!(bigelow_element().exponent_sum(), 0);
}

#[test]
fn bigelow_element_is_the_commutator() {
    let beta = bigelow_element();
    assert_eq!(beta.strands(), 5);
    let s4 = BraidWord::generator(5, 4).unwrap();
    let g = BraidWord::product(5, [&psi2(), &psi1().inverse(), &s4, &psi1(), &psi2().inverse()]).unwrap();
    assert_eq!(beta, beta.free_reduce());
    let c = BraidWord::commutator(&g, &delta5()).unwrap();
    assert_eq!(c.free_reduce(), beta);
    assert!(linking_numbers(&beta).unwrap().values().all(|&v| v == 0));
}

#[test]
fn linking_number_examples() {
    let lk = linking_numbers(&pure_braid_generator(3, 1, 3).unwrap()).unwrap();
    assert_eq!((lk[&(1, 3)], lk[&(1, 2)], lk[&(2, 3)]), (1, 0, 0));
    assert!(linking_numbers(&BraidWord::identity(3))
        .unwrap()
        .values()
        .all(|&v| v == 0));
    assert_eq!(linking_numbers(&word(2, &[1, 1, 1, 1])).unwrap()[&(1, 2)], 2);
    assert!(matches!(linking_numbers(&word(2, &[1])), Err(Error::NotPure(_))));
}

#[test]
fn pure_generator_examples() {
    assert_eq!(pure_braid_generator(2, 1, 2).unwrap().letters(), &[1, 1]);
    assert_eq!(pure_braid_generator(3, 1, 3).unwrap().letters(), &[2, 1, 1, -2]);
    assert_eq!(pure_braid_generator(4, 2, 4).unwrap().letters(), &[3, 2, 2, -3]);
    assert!(pure_braid_generator(3, 2, 2).is_err());
    assert!(pure_braid_generator(3, 1, 4).is_err());
}

#[test]
fn linking_numbers_of_generators_are_indicators() {
    for n in 2..=5 {
        for i in 1..n {
            for j in i + 1..=n {
                let lk = linking_numbers(&pure_braid_generator(n, i, j).unwrap()).unwrap();
                for (&pair, &v) in &lk {
                    assert_eq!(v, i64::from(pair == (i, j)), "ξ_{i}{j} at {pair:?}");
                }
            }
        }
    }
}

#[test]
fn cable_examples() {
    let c = cable_word(&word(2, &[1]), 2).unwrap();
    assert_eq!(c.strands(), 4);
    assert_eq!(c.letters(), &[2, 1, 3, 2]);
    assert_eq!(c.underlying_permutation(), vec![2, 3, 0, 1]);
    assert!(c.letters().iter().all(|&k| k > 0));

    let w = word(3, &[1, -2]);
    assert_eq!(cable_word(&w, 1).unwrap(), w);

    let e = cable_word(&BraidWord::identity(2), 3).unwrap();
    assert_eq!((e.strands(), e.len()), (6, 0));

    assert_eq!(cable_word(&w, 0), Err(Error::InvalidCablingParameter(0)));
    assert_eq!(block_crossing(1, 2), vec![2, 1, 3, 2]);
}

#[test]
fn artin_action_examples() {
    assert!(artin_action_is_trivial(&word(2, &[1, -1])));
    assert!(artin_action_is_trivial(&word(3, &[1, 2, 1, -2, -1, -2])));
    assert!(!artin_action_is_trivial(&word(2, &[1])));
    assert!(!artin_action_is_trivial(&bigelow_element()));
    assert_eq!(artin_action(&BraidWord::identity(3)).len(), 3);
}

#[test]
fn word_parsing() {
    assert_eq!(BraidWord::parse(4, "2 1 3 2").unwrap().letters(), &[2, 1, 3, 2]);
    assert_eq!(BraidWord::parse(3, "  ").unwrap().len(), 0);
    assert!(matches!(BraidWord::parse(3, "1 x"), Err(Error::Parse(_))));
    assert!(matches!(
        BraidWord::parse(3, "3"),
        Err(Error::GeneratorOutOfRange { .. })
    ));
    assert!(BraidWord::new(3, vec![0]).is_err());
    assert_eq!(word(4, &[2, 1, -3]).to_string(), "2 1 -3");
}

#[test]
fn random_pure_words_are_pure() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let w = random_pure_word(4, 20, &mut rng).unwrap();
        assert!(w.is_pure());
        assert!(w.len() <= 20);
    }
}

#[test]
fn cabling_respects_braid_relations() {
    for n in 2..=4 {
        for r in 1..=3i64 {
            for rel in relators(n) {
                let c = cable_word(&word(n, &rel), r).unwrap();
                assert!(artin_action_is_trivial(&c), "n = {n}, r = {r}, relator {rel:?}");
            }
        }
    }
}

proptest! {
    #[test]
    fn cable_permutation_moves_blocks(w in braid_word(4, 12), r in 1usize..=3) {
        let n = w.strands();
        let p = w.underlying_permutation();
        let c = cable_word(&w, r as i64).unwrap().underlying_permutation();
        for pos in 0..n {
            for s in 0..r {
                prop_assert_eq!(c[r * pos + s], r * p[pos] + s);
            }
        }
    }

    #[test]
    fn cable_exponent_sum_scales(w in braid_word(4, 12), r in 1i64..=3) {
        prop_assert_eq!(cable_word(&w, r).unwrap().exponent_sum(), r * r * w.exponent_sum());
    }

    #[test]
    fn cabling_is_multiplicative(a in braid_word(3, 6), tail in prop::collection::vec(prop_oneof![Just(1i64), Just(-1), Just(2), Just(-2)], 0..6), r in 1i64..=3) {
        let b = BraidWord::new(3, tail).unwrap();
        let a = BraidWord::new(3, a.letters().iter().copied().filter(|k| k.abs() < 3).collect()).unwrap();
        let lhs = cable_word(&a.concat(&b).unwrap(), r).unwrap();
        let rhs = cable_word(&a, r).unwrap().concat(&cable_word(&b, r).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn triviality_survives_free_reduction_and_relators(w in braid_word(4, 10), pos in any::<prop::sample::Index>(), pick in any::<prop::sample::Index>()) {
        let n = w.strands();
        let base = artin_action_is_trivial(&w);
        prop_assert_eq!(artin_action_is_trivial(&w.free_reduce()), base);
        let rels = relators(n);
        prop_assume!(!rels.is_empty());
        let rel = &rels[pick.index(rels.len())];
        let mut letters = w.letters().to_vec();
        let at = pos.index(letters.len() + 1);
        letters.splice(at..at, rel.iter().copied());
        prop_assert_eq!(artin_action_is_trivial(&BraidWord::new(n, letters).unwrap()), base);
        let u = w.concat(&w.inverse()).unwrap();
        prop_assert!(artin_action_is_trivial(&u));
    }

    #[test]
    fn linking_numbers_are_additive(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_pure_word(4, 12, &mut rng).unwrap();
        let b = random_pure_word(4, 12, &mut rng).unwrap();
        let (la, lb) = (linking_numbers(&a).unwrap(), linking_numbers(&b).unwrap());
        let lab = linking_numbers(&a.concat(&b).unwrap()).unwrap();
        for (k, v) in lab {
            prop_assert_eq!(v, la[&k] + lb[&k]);
        }
    }
}
