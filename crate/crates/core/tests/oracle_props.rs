use aldous_core::oracle::*;
use aldous_core::partitions::{dimension, enumerate_partitions, q_value};
use aldous_core::spectra::{block_spectrum, cayley_spectrum, spectral_gap_graph};
use aldous_core::{MultipartiteShape, Partition};
use proptest::prelude::*;

fn max_deviation(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

fn shapes(n: usize) -> impl Iterator<Item = MultipartiteShape> {
    enumerate_partitions(n).into_iter().map(|eta| MultipartiteShape::new(eta).unwrap())
}

#[test]
fn adjacent_generators_satisfy_the_coxeter_relations() {
    for n in 2..=8 {
        for alpha in enumerate_partitions(n) {
            let yor = YoungOrthogonalForm::new(&alpha);
            let d = yor.dimension();
            let id = DenseSymmetricMatrix::identity(d);
            let mul = |a: &[f64], b: &[f64]| DenseSymmetricMatrix::multiply(d, a, b);
            for i in 1..n {
                let s = yor.adjacent(i);
                assert!(max_deviation(&mul(s, s), id.as_row_major()) < 1e-10);
                if i + 1 < n {
                    let t = yor.adjacent(i + 1);
                    let sts = mul(&mul(s, t), s);
                    let tst = mul(&mul(t, s), t);
                    assert!(max_deviation(&sts, &tst) < 1e-10, "{alpha}, s_{i}");
                }
                for j in i + 2..n {
                    let t = yor.adjacent(j);
                    assert!(max_deviation(&mul(s, t), &mul(t, s)) < 1e-10);
                }
            }
        }
    }
}

#[test]
fn transposition_traces_give_the_character() {
    for n in 2..=8 {
        for alpha in enumerate_partitions(n) {
            let f = dimension(&alpha).unwrap() as f64;
            let chi = 2.0 * q_value(&alpha).unwrap() as f64 * f / (n * (n - 1)) as f64;
            let yor = YoungOrthogonalForm::new(&alpha);
            assert_eq!(yor.dimension() as f64, f);
            for (a, b) in [(1, 2), (1, n), (n - 1, n)] {
                assert!((yor.transposition(a, b).trace() - chi).abs() < 1e-9, "{alpha} ({a} {b})");
            }
        }
    }
}

#[test]
fn complete_graph_blocks_are_numerically_scalar() {
    for n in 2..=7 {
        let shape = MultipartiteShape::new(Partition::column(n)).unwrap();
        for alpha in enumerate_partitions(n) {
            let m = rep_block_matrix(&alpha, &shape).unwrap();
            let q = q_value(&alpha).unwrap() as f64;
            assert!(m.max_abs_off_diagonal() < 1e-10, "{alpha}");
            for i in 0..m.order() {
                assert!((m.get(i, i) - q).abs() < 1e-10, "{alpha}");
            }
        }
    }
}

#[test]
fn graph_gap_matches_the_defining_representation() {
    for n in 2..=10 {
        for shape in shapes(n).filter(|s| s.p() >= 2) {
            let eig = symmetric_eigenvalues(&graph_laplacian(&shape).unwrap()).unwrap();
            assert!(eig[0].abs() < 1e-8);
            let gap = spectral_gap_graph(&shape).unwrap() as f64;
            assert!((eig[1] - gap).abs() < 1e-8, "{}: {} vs {gap}", shape.eta(), eig[1]);
        }
    }
}

#[test]
fn small_blocks_match_the_formula() {
    for n in 1..=5 {
        for shape in shapes(n) {
            for alpha in enumerate_partitions(n) {
                let eig = symmetric_eigenvalues(&rep_block_matrix(&alpha, &shape).unwrap()).unwrap();
                let exact = block_spectrum(&alpha, &shape).unwrap();
                assert!(compare_spectra(&exact, &eig, 1e-8).unwrap().passed, "{alpha}, {}", shape.eta());
            }
        }
    }
}

#[test]
fn small_cayley_graphs_match_the_formula() {
    for n in 1..=4 {
        for shape in shapes(n) {
            let eig = symmetric_eigenvalues(&cayley_laplacian(&shape, false).unwrap()).unwrap();
            let exact = cayley_spectrum(&shape).unwrap();
            assert!(compare_spectra(&exact, &eig, 1e-8).unwrap().passed, "{}", shape.eta());
        }
    }
}

#[test]
fn caps_are_enforced() {
    let seven = MultipartiteShape::new(Partition::new(vec![4, 3]).unwrap()).unwrap();
    assert!(cayley_laplacian(&seven, false).is_err());
    let big = Partition::new(vec![4, 3, 2, 1, 1]).unwrap();
    assert!(dimension(&big).unwrap() > REP_DIM_CAP as u128);
    let shape = MultipartiteShape::new(Partition::new(vec![6, 5]).unwrap()).unwrap();
    assert!(rep_block_matrix(&big, &shape).is_err());
}

fn partition_up_to(max_n: usize) -> impl Strategy<Value = Partition> {
    (2..=max_n).prop_flat_map(|n| {
        let all = enumerate_partitions(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn transpositions_are_involutions(alpha in partition_up_to(8), a in 0usize..8, b in 0usize..8) {
        let n = alpha.size();
        let (a, b) = (a % n + 1, b % n + 1);
        prop_assume!(a != b);
        let m = yor_matrix(&alpha, a.min(b), a.max(b));
        let d = m.order();
        let sq = DenseSymmetricMatrix::multiply(d, m.as_row_major(), m.as_row_major());
        prop_assert!(max_deviation(&sq, DenseSymmetricMatrix::identity(d).as_row_major()) < 1e-10);
    }

    #[test]
    fn conjugating_transpositions(alpha in partition_up_to(7), seed in prop::collection::vec(0usize..7, 3)) {
        let n = alpha.size();
        prop_assume!(n >= 3);
        let mut pts: Vec<usize> = seed.iter().map(|s| s % n + 1).collect();
        pts.sort_unstable();
        pts.dedup();
        prop_assume!(pts.len() == 3);
        let (a, b, c) = (pts[0], pts[1], pts[2]);
        // (a b)(b c)(a b) = (a c)
        let yor = YoungOrthogonalForm::new(&alpha);
        let d = yor.dimension();
        let ab = yor.transposition(a, b);
        let bc = yor.transposition(b, c);
        let lhs = DenseSymmetricMatrix::multiply(
            d,
            &DenseSymmetricMatrix::multiply(d, ab.as_row_major(), bc.as_row_major()),
            ab.as_row_major(),
        );
        prop_assert!(max_deviation(&lhs, yor.transposition(a, c).as_row_major()) < 1e-10);
    }

    #[test]
    fn ranking_round_trips(n in 1usize..=8, r in any::<usize>()) {
        let index = PermutationIndex::new(n);
        let k = r % index.len();
        let perm = index.unrank(k);
        prop_assert_eq!(index.rank(&perm), k);
        prop_assert_eq!(compose(&perm, &inverse(&perm)), (0..n).collect::<Vec<_>>());
    }
}
