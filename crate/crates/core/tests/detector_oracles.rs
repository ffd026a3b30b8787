mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use turan_core::constructions::{g1, turan_graph};
use turan_core::detectors::{
    clique_number, contains_clique, contains_star_forest, independence_number, is_family_free, matching_blossom,
    matching_exhaustive, max_matching_size,
};
use turan_core::oracle::enumerate_free_graphs;
use turan_core::{ForbiddenFamily, Graph, Pattern};

#[test]
fn clique_matches_subset_search_on_all_seven_vertex_classes() {
    let all = ForbiddenFamily::new([Pattern::Clique(8)]).unwrap();
    let classes = enumerate_free_graphs(7, &all, 4).unwrap();
    assert_eq!(classes.len(), 1044);
    for g in &classes {
        let omega = common::brute_clique_number(g);
        assert_eq!(clique_number(g), omega);
        for r in 1..=7 {
            assert_eq!(contains_clique(g, r), omega >= r);
        }
    }
}

#[test]
fn clique_on_turan_graph() {
    let t = turan_graph(9, 3).unwrap();
    assert_eq!(common::brute_clique_number(&t), 3);
    assert!(contains_clique(&t, 3));
    assert!(!contains_clique(&t, 4));
}

#[test]
fn matching_matches_edge_subset_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let n = rng.gen_range(1..=8);
        let p = rng.gen_range(0.1..0.7);
        let g = common::random_graph(&mut rng, n, p);
        let expected = common::brute_matching(&g);
        assert_eq!(max_matching_size(&g), expected);
        assert_eq!(matching_blossom(&g), expected);
        assert_eq!(matching_exhaustive(&g), expected);
    }
}

#[test]
fn blossom_and_exhaustive_agree_on_larger_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..300 {
        let n = rng.gen_range(9..=16);
        let p = rng.gen_range(0.05..0.4);
        let g = common::random_graph(&mut rng, n, p);
        assert_eq!(matching_blossom(&g), matching_exhaustive(&g));
    }
}

#[test]
fn petersen_matching_by_brute_force() {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    let p = Graph::from_edges(10, &edges).unwrap();
    assert_eq!(common::brute_matching(&p), 5);
    assert_eq!(max_matching_size(&p), 5);
}

#[test]
fn star_forest_matches_assignment_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..500 {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.15..0.8);
        let g = common::random_graph(&mut rng, n, p);
        let count = rng.gen_range(1..=3);
        let l = rng.gen_range(1..=3);
        assert_eq!(
            contains_star_forest(&g, count, l),
            common::brute_star_forest(&g, count, l),
            "{g:?} count={count} l={l}"
        );
    }
}

#[test]
fn single_star_is_max_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..300 {
        let n = rng.gen_range(1..=14);
        let p = rng.gen_range(0.0..0.6);
        let g = common::random_graph(&mut rng, n, p);
        for l in 1..=5 {
            assert_eq!(contains_star_forest(&g, 1, l), g.max_degree() >= l);
        }
    }
}

#[test]
fn star_forest_on_g1() {
    let g = g1(10, 2, 3).unwrap();
    assert!(!contains_star_forest(&g, 3, 3));
    assert!(!common::brute_star_forest(&g, 3, 3));
    assert!(contains_star_forest(&g, 2, 3));
    assert!(common::brute_star_forest(&g, 2, 3));
}

#[test]
fn independence_is_clique_of_complement() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..500 {
        let n = rng.gen_range(1..=12);
        let p = rng.gen_range(0.1..0.9);
        let g = common::random_graph(&mut rng, n, p);
        let alpha = independence_number(&g);
        assert_eq!(alpha, clique_number(&g.complement()));
        assert_eq!(alpha, common::brute_clique_number(&g.complement()));
    }
}

#[test]
fn freeness_is_monotone_under_edge_deletion() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    let families: Vec<ForbiddenFamily> = ["clique:3", "clique:3,starforest:2x2", "clique:4,matching:3", "starforest:3x1"]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
    for _ in 0..400 {
        let n = rng.gen_range(2..=10);
        let p = rng.gen_range(0.1..0.5);
        let g = common::random_graph(&mut rng, n, p);
        for f in &families {
            if !is_family_free(&g, f) {
                continue;
            }
            let edges: Vec<_> = g.edges().collect();
            if edges.is_empty() {
                continue;
            }
            let (u, v) = edges[rng.gen_range(0..edges.len())];
            assert!(is_family_free(&g.without_edge(u, v).unwrap(), f));
        }
    }
}

#[test]
fn star_forest_on_dense_joins() {
    // Small hubs joined to a sparse remainder: the shape of the extremal graphs.
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..300 {
        let hubs = rng.gen_range(1..=3);
        let rest = rng.gen_range(2..=7);
        let p = rng.gen_range(0.0..0.4);
        let a = common::random_graph(&mut rng, hubs, 0.5);
        let b = common::random_graph(&mut rng, rest, p);
        let g = a.join(&b).unwrap();
        let count = rng.gen_range(2..=4);
        let l = rng.gen_range(1..=3);
        assert_eq!(
            contains_star_forest(&g, count, l),
            common::brute_star_forest(&g, count, l),
            "{g:?} count={count} l={l}"
        );
    }
}
