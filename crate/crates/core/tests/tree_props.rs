mod common;

use common::family;
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use rainbow_order::enumerate::enumerate_trees;
use rainbow_order::tree::{canonical_code, instances_of_order, is_isomorphic, FamilySpec, Tree};

/// Injective maps of `small` into `big` preserving adjacency.
fn is_subgraph(small: &Tree, big: &Tree) -> bool {
    fn rec(small: &Tree, big: &Tree, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let p = map.len();
        if p == small.order() {
            return true;
        }
        for h in 0..big.order() {
            if used[h] {
                continue;
            }
            let ok = small
                .neighbors(p)
                .iter()
                .filter(|&&q| q < p)
                .all(|&q| big.has_edge(map[q], h));
            if ok {
                used[h] = true;
                map.push(h);
                if rec(small, big, map, used) {
                    return true;
                }
                map.pop();
                used[h] = false;
            }
        }
        false
    }
    rec(small, big, &mut Vec::new(), &mut vec![false; big.order()])
}

#[test]
fn family_outputs_are_valid_trees_with_documented_shape() {
    for n in 1..=13 {
        for spec in instances_of_order(n) {
            let t = spec.build().unwrap();
            assert_eq!(t.order(), spec.order());
            assert_eq!(Tree::new(t.order(), t.edges().iter().copied()).unwrap(), t);
            let ds = t.degree_sequence();
            assert_eq!(ds.as_slice().iter().sum::<usize>(), 2 * (n - 1));
            assert!(ds.as_slice().windows(2).all(|w| w[0] <= w[1]));
            assert_eq!(t.centers()[0], 0, "{spec} is not center-first");
        }
    }
}

#[test]
fn documented_degree_sequences() {
    let cases: &[(&str, &[usize])] = &[
        ("path:5", &[1, 1, 2, 2, 2]),
        ("star:4", &[1, 1, 1, 1, 4]),
        ("double_star:2,2", &[1, 1, 1, 1, 3, 3]),
        ("star_plus:4", &[1, 1, 1, 1, 2, 4]),
        ("F:2", &[1, 1, 1, 1, 2, 3, 3]),
        ("F_prime:2", &[1, 1, 1, 2, 2, 2, 3]),
        ("B_star:3,1", &[1, 1, 1, 1, 2, 2, 4]),
        ("spider:1,2,3", &[1, 1, 1, 2, 2, 2, 3]),
    ];
    for (s, ds) in cases {
        assert_eq!(family(s).degree_sequence().as_slice(), *ds, "{s}");
    }
}

#[test]
fn star_plus_contains_star() {
    for k in 3..=7 {
        let plus = family(&format!("star_plus:{k}"));
        let star = family(&format!("star:{k}"));
        assert!(is_subgraph(&star, &plus));
        assert!(!is_subgraph(&family(&format!("star:{}", k + 1)), &plus));
    }
    assert!(is_isomorphic(&family("F:2"), &family("B_star:2,2")));
}

#[test]
fn spec_strings_round_trip() {
    for n in 1..=12 {
        for spec in instances_of_order(n) {
            assert_eq!(spec.to_string().parse::<FamilySpec>().unwrap(), spec);
        }
    }
}

fn tree_strategy() -> impl Strategy<Value = Tree> {
    (2usize..=10).prop_flat_map(|n| {
        proptest::collection::vec(any::<proptest::sample::Index>(), n - 1).prop_map(move |ix| {
            // Random recursive tree: vertex v attaches to some earlier vertex.
            let edges = (1..n).map(|v| (ix[v - 1].index(v), v));
            Tree::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn code_ignores_labels(t in tree_strategy(), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..t.order()).collect();
        perm.shuffle(&mut rng);
        let moved = t.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_code(&moved), canonical_code(&t));
        prop_assert!(is_isomorphic(&moved, &t));
    }

    #[test]
    fn code_decodes_to_an_isomorphic_tree(t in tree_strategy()) {
        let code = canonical_code(&t);
        prop_assert_eq!(code.order(), t.order());
        prop_assert_eq!(canonical_code(&code.to_tree()), code);
    }

    #[test]
    fn text_format_round_trips(t in tree_strategy()) {
        let text = rainbow_order::tree::write_tree(&t);
        prop_assert_eq!(rainbow_order::tree::parse_tree(&text).unwrap(), t);
    }
}

#[test]
fn every_random_tree_has_a_catalog_twin() {
    let catalogs: Vec<_> = (1..=9).map(|n| enumerate_trees(n).unwrap()).collect();
    let mut runner = proptest::test_runner::TestRunner::deterministic();
    for _ in 0..200 {
        let t = tree_strategy().new_tree(&mut runner).unwrap().current();
        if t.order() <= 9 {
            assert!(catalogs[t.order() - 1].get(&canonical_code(&t)).is_some());
        }
    }
}
