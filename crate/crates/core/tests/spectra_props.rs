use aldous_core::lr::{enumerate_admissible_star, LrCache};
use aldous_core::partitions::*;
use aldous_core::spectra::*;
use aldous_core::Partition;
use proptest::prelude::*;

const MAX_N: usize = 8;

fn shapes(n: usize) -> impl Iterator<Item = MultipartiteShape> {
    enumerate_partitions(n).into_iter().map(|eta| MultipartiteShape::new(eta).unwrap())
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

#[test]
fn block_totals_and_traces() {
    let mut cache = LrCache::new();
    for n in 1..=MAX_N {
        for shape in shapes(n) {
            let edges = shape.edge_count() as i128;
            for alpha in enumerate_partitions(n) {
                let s = block_spectrum_cached(&mut cache, &alpha, &shape).unwrap();
                let f = dimension(&alpha).unwrap();
                assert_eq!(s.total(), f, "{alpha}, {}", shape.eta());
                let q = q_value(&alpha).unwrap() as i128;
                let lhs = (n * (n - 1)) as i128 * s.trace();
                assert_eq!(lhs, 2 * edges * q * f as i128, "{alpha}, {}", shape.eta());
            }
        }
    }
}

#[test]
fn complete_graph_blocks_are_scalar() {
    for n in 1..=MAX_N {
        let shape = MultipartiteShape::new(Partition::column(n)).unwrap();
        for alpha in enumerate_partitions(n) {
            assert_eq!(block_spectrum(&alpha, &shape).unwrap(), complete_graph_block(&alpha).unwrap());
        }
    }
}

#[test]
fn cayley_traces() {
    for n in 1..=7 {
        for shape in shapes(n) {
            let s = cayley_spectrum(&shape).unwrap();
            assert_eq!(s.total(), factorial(n));
            assert_eq!(s.trace(), factorial(n) as i128 * shape.edge_count() as i128);
            assert_eq!(s.min(), Some(0));
            assert!(s.multiplicity(0) >= 1);
        }
    }
}

#[test]
fn relaxed_maximum_bounds_and_monotonicity() {
    let mut cache = LrCache::new();
    for n in 2..=MAX_N {
        let all = enumerate_partitions(n);
        let hook = Partition::hook(n);
        for shape in shapes(n) {
            let bbar: Vec<i64> = all.iter().map(|a| b_bar(a, &shape).unwrap()).collect();
            for (alpha, &bb) in all.iter().zip(&bbar) {
                assert!(lambda_max_cached(&mut cache, alpha, &shape).unwrap() <= bb, "{alpha}, {}", shape.eta());
            }
            if !shape.is_complete_graph() {
                assert_eq!(
                    b_bar(&hook, &shape).unwrap(),
                    lambda_max_cached(&mut cache, &hook, &shape).unwrap(),
                    "{}",
                    shape.eta()
                );
            }
            for (a, &ba) in all.iter().zip(&bbar) {
                for (b, &bb) in all.iter().zip(&bbar) {
                    if dominance_leq(a, b) {
                        assert!(ba <= bb, "{a} ⊴ {b} but B̄ {ba} > {bb} for {}", shape.eta());
                    }
                }
            }
        }
    }
}

#[test]
fn hook_is_the_largest_nontrivial_block() {
    let mut cache = LrCache::new();
    for n in 2..=MAX_N {
        let hook = Partition::hook(n);
        for shape in shapes(n).filter(|s| s.p() >= 2) {
            let top = lambda_max_cached(&mut cache, &hook, &shape).unwrap();
            for alpha in enumerate_partitions(n).into_iter().skip(1) {
                assert!(lambda_max_cached(&mut cache, &alpha, &shape).unwrap() <= top, "{alpha}, {}", shape.eta());
            }
        }
    }
}

#[test]
fn both_b_formulas_agree_on_relaxed_tuples() {
    for n in 1..=MAX_N {
        for eta in enumerate_partitions(n) {
            for alpha in enumerate_partitions(n) {
                for t in enumerate_admissible_star(&alpha, &eta).unwrap() {
                    assert_eq!(b_value(&alpha, &t.parts).unwrap(), b_value_inner_product(&t.parts).unwrap());
                }
            }
        }
    }
}

#[test]
fn hook_restriction_matches_enumeration() {
    let mut cache = LrCache::new();
    for n in 2..=MAX_N {
        for shape in shapes(n) {
            let closed = restriction_n_minus_1(&shape).unwrap();
            assert_eq!(closed, cache.admissible(&Partition::hook(n), shape.eta()).unwrap());
        }
    }
}

/// A random `α ⊢ n ≤ 12` split row by row into `p` weak compositions.
fn relaxed_tuple() -> impl Strategy<Value = (Partition, Vec<Vec<usize>>)> {
    (prop::collection::vec(1usize..=6, 1..=5), 1usize..=4, prop::collection::vec(0usize..100, 40))
        .prop_filter("n <= 12", |(rows, _, _)| rows.iter().sum::<usize>() <= 12)
        .prop_map(|(rows, p, seeds)| {
            let alpha = sort_to_partition(&rows);
            let mut parts = vec![vec![0usize; alpha.len()]; p];
            let mut k = 0;
            for (r, &len) in alpha.iter().enumerate() {
                for _ in 0..len {
                    parts[seeds[k % seeds.len()] % p][r] += 1;
                    k += 1;
                }
            }
            (alpha, parts)
        })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 2000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn both_b_formulas_agree_randomly((alpha, parts) in relaxed_tuple()) {
        prop_assert_eq!(b_value(&alpha, &parts).unwrap(), b_value_inner_product(&parts).unwrap());
    }
}
