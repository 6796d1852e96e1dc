mod common;

use std::collections::BTreeSet;

use common::family;
use proptest::prelude::*;
use rainbow_order::enumerate::enumerate_trees;
use rainbow_order::flip::{
    antisymmetry_check, expected_pairs, flip_results, satisfies_flip_condition, verify_thm1,
    verify_thm1_with, CodePair, FlipTable,
};
use rainbow_order::tree::canonical_code;
use rainbow_order::Execution;

/// The per-edge intersection table against a direct per-pair scan.
#[test]
fn table_agrees_with_pairwise_scan() {
    for n in 5..=8 {
        let table = FlipTable::build(n, Execution::Sequential).unwrap();
        let from_table: BTreeSet<CodePair> = table.pairs().into_iter().collect();
        let cat = enumerate_trees(n).unwrap();
        let mut direct = BTreeSet::new();
        for (c1, t1) in cat.entries() {
            for (c2, t2) in cat.entries() {
                if c1 != c2 && satisfies_flip_condition(t1, t2).unwrap().satisfied {
                    direct.insert(CodePair {
                        t1: c1.clone(),
                        t2: c2.clone(),
                    });
                }
            }
        }
        assert_eq!(from_table, direct, "order {n}");
    }
}

#[test]
fn flip_results_are_trees_of_the_same_order() {
    for n in 2..=9 {
        for t in enumerate_trees(n).unwrap().representatives() {
            for &e in t.edges() {
                for code in flip_results(t, e).unwrap() {
                    assert_eq!(code.order(), n);
                }
            }
        }
    }
}

#[test]
fn flip_of_p5_middle_edge_has_max_degree_three() {
    let p5 = family("path:5");
    // Brute force over every pair: only reconnections give trees.
    for &e in p5.edges() {
        for a in 0..5 {
            for b in a + 1..5 {
                if let Ok(t) = p5.flip(e, (a, b)) {
                    assert!(t.max_degree() <= 3);
                    if (a, b) != e {
                        assert!(flip_results(&p5, e).unwrap().contains(&canonical_code(&t)));
                    }
                }
            }
        }
    }
}

#[test]
fn documented_classifications() {
    let c5 = verify_thm1(5).unwrap();
    assert!(c5.matches);
    assert_eq!(c5.found.len(), 2);
    let c7 = verify_thm1(7).unwrap();
    assert!(c7.matches);
    assert_eq!(c7.found.len(), 4);
    assert!(c7.extra.is_empty() && c7.missing.is_empty());
    let c8 = verify_thm1(8).unwrap();
    assert_eq!(c8.found.len(), 1);
    assert!(c8.found[0].t1_family.contains(&"star_plus:6".to_string()));
    assert_eq!(c8.found[0].t2_family, ["star:7"]);
    for n in [5, 6, 10] {
        assert!(antisymmetry_check(n).unwrap());
    }
}

#[test]
fn classification_is_independent_of_execution() {
    let a = verify_thm1_with(10, Execution::Sequential).unwrap();
    let b = verify_thm1_with(10, Execution::Parallel).unwrap();
    assert_eq!(a.found, b.found);
    assert_eq!(a.same_degree_sequence, b.same_degree_sequence);
}

#[test]
fn pairs_sort_by_t2_then_t1() {
    let table = FlipTable::build(9, Execution::default()).unwrap();
    let pairs = table.pairs();
    assert!(pairs
        .windows(2)
        .all(|w| (&w[0].t2, &w[0].t1) < (&w[1].t2, &w[1].t1)));
}

#[test]
fn expected_pairs_have_their_order() {
    for n in 5..=15 {
        for (a, b) in expected_pairs(n) {
            assert_eq!(a.order(), n);
            assert_eq!(b.order(), n);
            assert_ne!(
                canonical_code(&a.build().unwrap()),
                canonical_code(&b.build().unwrap())
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn flip_condition_ignores_labels(
        n in 5usize..=8,
        i in any::<proptest::sample::Index>(),
        j in any::<proptest::sample::Index>(),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let cat = enumerate_trees(n).unwrap();
        let trees: Vec<_> = cat.representatives().cloned().collect();
        let t1 = &trees[i.index(trees.len())];
        let t2 = &trees[j.index(trees.len())];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(&mut rng);
        let r1 = t1.relabel(&p).unwrap();
        p.shuffle(&mut rng);
        let r2 = t2.relabel(&p).unwrap();
        let base = satisfies_flip_condition(t1, t2).unwrap();
        let moved = satisfies_flip_condition(&r1, &r2).unwrap();
        prop_assert_eq!(base.satisfied, moved.satisfied);
        prop_assert!(moved.recheck(&r2));
    }
}
