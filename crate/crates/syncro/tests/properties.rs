//! Property tests for the structural invariants the library relies on.

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use syncro::automaton::Word;
use syncro::criteria::{
    distance_reduction_check, half_cycle_check, unit_reduction_check, verdict, Justification,
    MaxScStatus, VerdictBudget,
};
use syncro::oracle::{
    oracle_completely_reachable, oracle_state_complexity, oracle_two_sets_distinguishable,
    random_cyclic_defect,
};
use syncro::power::{
    all_two_sets_distinguishable, depth_within, is_completely_reachable, level_reachable,
    shortest_reset, syn_state_complexity, PowerAutomaton, Scope, DEFAULT_CAP,
};
use syncro::structure::{
    binary_structure, find_cyclic_word, near_full_reachability, rank_profile,
    reachability_certificate,
};
use syncro::{SemiAutomaton, StateSet, Transformation};

fn automaton(max_n: usize, max_k: usize) -> impl Strategy<Value = SemiAutomaton> {
    (1..=max_n, 1..=max_k).prop_flat_map(|(n, k)| {
        prop::collection::vec(prop::collection::vec(0..n, k), n)
            .prop_map(move |delta| SemiAutomaton::new(n, k, delta).unwrap())
    })
}

fn automaton_and_words(
    max_n: usize,
    max_k: usize,
    max_len: usize,
) -> impl Strategy<Value = (SemiAutomaton, Word, Word)> {
    automaton(max_n, max_k).prop_flat_map(move |a| {
        let k = a.k();
        (
            Just(a),
            prop::collection::vec(0..k, 0..=max_len).prop_map(Word::new),
            prop::collection::vec(0..k, 0..=max_len).prop_map(Word::new),
        )
    })
}

/// Cycle-plus-defect automata on letters (defect, cycle), seeded so that
/// proptest can shrink the seed.
fn cyclic_defect(min_n: usize, max_n: usize) -> impl Strategy<Value = SemiAutomaton> {
    (min_n..=max_n, any::<u64>()).prop_map(|(n, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_cyclic_defect(n, &mut rng)
    })
}

fn ceiling(n: usize) -> usize {
    (1usize << n) - n
}

proptest! {
    #[test]
    fn word_action_is_a_homomorphism((a, u, v) in automaton_and_words(7, 3, 6)) {
        let tu = a.transformation(&u).unwrap();
        let tv = a.transformation(&v).unwrap();
        let tuv = a.transformation(&u.concat(&v)).unwrap();
        prop_assert_eq!(&tu.then(&tv), &tuv);

        let full = StateSet::full(a.n());
        prop_assert_eq!(a.apply(&full, &u).unwrap(), tu.apply_set(&full));
    }

    #[test]
    fn rank_never_increases((a, u, v) in automaton_and_words(7, 3, 6)) {
        let tu = a.transformation(&u).unwrap();
        let tv = a.transformation(&v).unwrap();
        let tuv = tu.then(&tv);
        prop_assert!(tuv.rank() <= tu.rank().min(tv.rank()));
    }

    #[test]
    fn powers_compose(image in prop::collection::vec(0..6usize, 1..=6), i in 0usize..8, j in 0usize..8) {
        let n = image.len();
        let image: Vec<usize> = image.into_iter().map(|q| q % n).collect();
        let t = Transformation::new(image).unwrap();
        prop_assert_eq!(t.pow(i).then(&t.pow(j)), t.pow(i + j));
    }

    #[test]
    fn state_set_roundtrips(n in 1usize..=10, mask in any::<u64>()) {
        let mask = mask & ((1u64 << n) - 1);
        let s = StateSet::from_mask(n, mask);
        prop_assert_eq!(s.mask(), mask);
        prop_assert_eq!(StateSet::from_states(n, &s.states()), s);
    }

    #[test]
    fn subset_graph_is_consistent(a in automaton(7, 3)) {
        let n = a.n();
        let full = PowerAutomaton::build(&a, Scope::Full, DEFAULT_CAP).unwrap();
        prop_assert_eq!(full.node_count(), (1usize << n) - 1);
        let reach = PowerAutomaton::build(&a, Scope::Reachable, DEFAULT_CAP).unwrap();
        prop_assert!(reach.node_count() <= full.node_count());
        prop_assert_eq!(reach.depth(reach.start()), Some(0));

        for pa in [&reach, &full] {
            for id in 0..pa.node_count() {
                for letter in 0..a.k() {
                    let succ = pa.successor(id, letter);
                    let expected = a.letter_transformation(letter).apply_set(&pa.node_set(id));
                    prop_assert_eq!(pa.node_set(succ), expected);
                    if let (Some(d), Some(ds)) = (pa.depth(id), pa.depth(succ)) {
                        prop_assert!(ds <= d + 1);
                    }
                }
            }
        }
    }

    #[test]
    fn reset_words_reset(a in automaton(7, 3)) {
        let full = StateSet::full(a.n());
        match shortest_reset(&a, DEFAULT_CAP).unwrap() {
            Some(w) => {
                prop_assert_eq!(a.apply(&full, &w).unwrap().len(), 1);
                prop_assert!(w.is_empty() == (a.n() == 1));
            }
            None => {
                prop_assert_eq!(syn_state_complexity(&a, DEFAULT_CAP).unwrap(), 1);
                prop_assert!(a.n() > 1);
            }
        }
    }

    #[test]
    fn complexity_stays_under_the_ceiling(a in automaton(7, 3)) {
        let sc = syn_state_complexity(&a, DEFAULT_CAP).unwrap();
        prop_assert!(sc >= 1);
        prop_assert!(sc <= ceiling(a.n()));
        let empty = shortest_reset(&a, DEFAULT_CAP).unwrap().is_none();
        prop_assert_eq!(sc == 1, empty || a.n() == 1);
    }

    #[test]
    fn cyclic_word_search_returns_cycles(a in automaton(6, 3)) {
        if let Some(w) = find_cyclic_word(&a, a.n() * a.n()) {
            prop_assert!(a.transformation(&w).unwrap().is_cyclic());
        }
    }

    #[test]
    fn certificate_implies_complete_reachability(a in automaton(7, 3)) {
        if reachability_certificate(&a).is_some() {
            prop_assert!(is_completely_reachable(&a, DEFAULT_CAP).unwrap().ok);
            let rep = depth_within(&a, DEFAULT_CAP, |n, size| n * (n - size)).unwrap();
            prop_assert!(rep.ok, "{:?}", rep.violation);
        }
    }

    #[test]
    fn near_full_structural_matches_search(a in automaton(7, 3)) {
        let rep = near_full_reachability(&a, DEFAULT_CAP).unwrap();
        if rep.applicable {
            prop_assert_eq!(rep.structural, rep.reachable);
        } else {
            prop_assert!(rank_profile(&a).defect_one.len() >= a.n());
        }
    }

    #[test]
    fn binary_shape_matches_search(a in automaton(7, 2).prop_filter("binary", |a| a.k() == 2)) {
        let shape = binary_structure(&a).unwrap();
        if shape.applicable {
            prop_assert_eq!(shape.ok, level_reachable(&a, a.n() - 1, DEFAULT_CAP).unwrap());
        } else {
            prop_assert!(a.n() <= 2);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn optimized_paths_match_oracle(a in automaton(5, 3)) {
        prop_assert_eq!(
            syn_state_complexity(&a, DEFAULT_CAP).unwrap(),
            oracle_state_complexity(&a).unwrap()
        );
        prop_assert_eq!(
            is_completely_reachable(&a, DEFAULT_CAP).unwrap().ok,
            oracle_completely_reachable(&a).unwrap()
        );
        prop_assert_eq!(
            all_two_sets_distinguishable(&a, DEFAULT_CAP).unwrap().ok,
            oracle_two_sets_distinguishable(&a).unwrap()
        );
    }

    #[test]
    fn unit_check_is_the_restricted_check(a in cyclic_defect(2, 7)) {
        let defect = Word::new(vec![0]);
        let cycle = Word::new(vec![1]);
        let unit = unit_reduction_check(&a, &defect, &cycle).unwrap();
        let general = distance_reduction_check(&a, &defect, &cycle).unwrap();
        if unit.satisfied {
            prop_assert!(general.satisfied);
            prop_assert_eq!(unit.witness.unwrap().d, 1);
        }
    }

    #[test]
    fn satisfied_criteria_are_sound(a in cyclic_defect(3, 7)) {
        let defect = Word::new(vec![0]);
        let cycle = Word::new(vec![1]);
        let fired = distance_reduction_check(&a, &defect, &cycle).unwrap().satisfied
            || half_cycle_check(&a, &defect, &cycle).unwrap().satisfied;
        if fired && is_completely_reachable(&a, DEFAULT_CAP).unwrap().ok {
            prop_assert_eq!(oracle_state_complexity(&a).unwrap(), ceiling(a.n()));
        }
    }

    #[test]
    fn verdicts_carry_their_evidence(a in automaton(6, 3)) {
        let budget = VerdictBudget { use_oracle: true, ..VerdictBudget::default() };
        let v = verdict(&a, &budget);
        let max = (1u128 << a.n()) - a.n() as u128;
        match v.max_sc {
            MaxScStatus::Proved => {
                prop_assert_eq!(v.sc_claimed, Some(max));
                let exact = v.justification.iter().any(|j| {
                    matches!(j, Justification::ExactComplexity { sc } if *sc == max)
                });
                let reachable = v.justification.iter().any(|j| matches!(
                    j,
                    Justification::StructuralReachability { .. }
                        | Justification::ExhaustiveReachability { .. }
                ));
                let distinguishable = v.justification.iter().any(|j| matches!(
                    j,
                    Justification::DistanceReduction { .. }
                        | Justification::HalfCycle { .. }
                        | Justification::ExhaustivePairCheck { ok: true, .. }
                ));
                prop_assert!(exact || (reachable && distinguishable));
                if !exact {
                    prop_assert!(v
                        .justification
                        .iter()
                        .any(|j| matches!(j, Justification::CombinedMaximality)));
                }
            }
            MaxScStatus::Refuted => {
                prop_assert!(v.sc_claimed.is_some_and(|sc| sc < max));
            }
            MaxScStatus::Unknown => prop_assert_eq!(v.sc_claimed, None),
        }
        // The exact value, when claimed, matches the oracle.
        if let Some(sc) = v.sc_claimed {
            prop_assert_eq!(sc, oracle_state_complexity(&a).unwrap() as u128);
        }
    }
}
