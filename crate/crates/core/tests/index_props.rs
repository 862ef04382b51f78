mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sw_forge::index::{k_subsets, min_sw_lower_bound};
use sw_forge::nested_star::hub_deficit_count;
use sw_forge::scanner::enumerate_connected_levels;
use sw_forge::steiner::SteinerSolver;
use sw_forge::{nested_star_closed_form, steiner_wiener, steiner_wiener_fast, Graph, NestedStarSpec};

fn random_spec<R: Rng>(rng: &mut R, max_n: usize, max_r: usize) -> NestedStarSpec {
    let n = rng.gen_range(2..=max_n);
    let mut hubs: Vec<usize> = (1..n - 1).collect();
    let r = rng.gen_range(0..=max_r.min(hubs.len()));
    use rand::seq::SliceRandom;
    hubs.shuffle(rng);
    hubs.truncate(r);
    hubs.sort_unstable();
    NestedStarSpec::new(n, hubs).unwrap()
}

#[test]
fn star_values_from_oracle() {
    // frozen from the subset oracle
    let s12 = Graph::star(12).unwrap();
    assert_eq!(common::oracle_index(&s12, 2), 121);
    assert_eq!(common::oracle_index(&s12, 3), 605);
    assert_eq!(steiner_wiener(&s12, 2).unwrap().value, 121);
    assert_eq!(steiner_wiener(&s12, 3).unwrap().value, 605);
}

#[test]
fn hub_3_8_values_from_oracle() {
    let g = NestedStarSpec::new(12, vec![3, 8]).unwrap().build();
    assert_eq!(common::oracle_index(&g, 2), 110);
    assert_eq!(common::oracle_index(&g, 3), 574);
}

#[test]
fn nested_star_identity_small() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..40 {
        let spec = random_spec(&mut rng, 12, 4);
        let g = spec.build();
        for k in 2..=5 {
            let generic = steiner_wiener(&g, k).unwrap();
            if k <= g.n() {
                assert_eq!(generic, nested_star_closed_form(&spec, k).unwrap(), "{spec:?} k={k}");
            }
            assert_eq!(steiner_wiener_fast(&g, k).unwrap().value, generic.value);
        }
    }
}

#[test]
fn hub_witness_property() {
    // subsets avoiding the center with d(S) = k - 1 are counted by the hub deficits
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..30 {
        let spec = random_spec(&mut rng, 12, 5);
        let g = spec.build();
        let solver = SteinerSolver::new(&g).unwrap();
        let center = 1u64 << (g.n() - 1);
        for k in 2..=5.min(g.n()) {
            let mut tight_without = 0u128;
            for mask in k_subsets(g.n(), k) {
                let d = solver.distance_of_mask(mask) as usize;
                if mask & center != 0 {
                    assert_eq!(d, k - 1);
                } else if d == k - 1 {
                    tight_without += 1;
                    let max = 63 - mask.leading_zeros() as usize;
                    assert!(spec.hubs().contains(&max));
                }
            }
            let expected: u128 = spec.hubs().iter().map(|&a| hub_deficit_count(a, k).unwrap()).sum();
            assert_eq!(tight_without, expected, "{spec:?} k={k}");
        }
    }
}

#[test]
fn hub_deficit_examples_by_counting() {
    let g = NestedStarSpec::new(12, vec![3, 8]).unwrap().build();
    let solver = SteinerSolver::new(&g).unwrap();
    let count = |a: usize, k: usize| {
        k_subsets(g.n(), k)
            .filter(|m| 63 - m.leading_zeros() as usize == a)
            .filter(|&m| solver.distance_of_mask(m) as usize == k - 1)
            .count() as u128
    };
    assert_eq!(count(8, 3), 28);
    assert_eq!(hub_deficit_count(8, 3).unwrap(), 28);
    assert_eq!(count(3, 2), 3);
    assert_eq!(hub_deficit_count(3, 2).unwrap(), 3);
}

#[test]
fn build_is_injective() {
    let mut seen = std::collections::HashMap::new();
    for n in 2..=9 {
        for mask in 0u32..1 << (n - 2) {
            let hubs: Vec<usize> = (1..n - 1).filter(|&a| mask >> (a - 1) & 1 == 1).collect();
            let spec = NestedStarSpec::new(n, hubs).unwrap();
            assert!(seen.insert(spec.build(), spec).is_none());
        }
    }
}

#[test]
fn lower_bound_over_enumerated_graphs() {
    let levels = enumerate_connected_levels(7).unwrap();
    for graphs in &levels {
        for g in graphs {
            for k in 2..=g.n().min(5) {
                let sw = steiner_wiener(g, k).unwrap().value;
                assert!(sw >= min_sw_lower_bound(g.n(), k).unwrap().value);
            }
        }
    }
}

#[test]
fn generic_index_matches_oracle_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..30 {
        let n = rng.gen_range(3..=9);
        let g = common::random_connected(&mut rng, n, 0.2);
        for k in 2..=4 {
            assert_eq!(steiner_wiener(&g, k).unwrap().value, common::oracle_index(&g, k));
        }
    }
}
