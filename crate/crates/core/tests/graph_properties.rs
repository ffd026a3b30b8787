mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use turan_core::detectors::contains_clique;
use turan_core::{canonical_form, graph6, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn well_formed(g: &Graph) -> bool {
    let n = g.n();
    (0..n).all(|v| !g.has_edge(v, v))
        && (0..n).all(|u| (0..n).all(|v| g.has_edge(u, v) == g.has_edge(v, u)))
        && g.degrees().iter().sum::<usize>() == 2 * g.edge_count()
}

proptest! {
    #[test]
    fn join_edge_count(g in arb_graph(9), h in arb_graph(9)) {
        let j = g.join(&h).unwrap();
        prop_assert_eq!(j.edge_count(), g.edge_count() + h.edge_count() + g.n() * h.n());
        prop_assert!(well_formed(&j));
        let u = g.disjoint_union(&h).unwrap();
        prop_assert_eq!(u.edge_count(), g.edge_count() + h.edge_count());
        prop_assert!(well_formed(&u));
    }

    #[test]
    fn symmetrize_formula(g in arb_graph(10), pick in any::<(usize, usize)>()) {
        let non_edges: Vec<(usize, usize)> = (0..g.n())
            .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
            .filter(|&(u, v)| !g.has_edge(u, v))
            .collect();
        prop_assume!(!non_edges.is_empty());
        let (u, v) = non_edges[pick.0 % non_edges.len()];
        let (a, b) = if pick.1 % 2 == 0 { (u, v) } else { (v, u) };
        let h = g.symmetrize(a, b).unwrap();
        prop_assert!(well_formed(&h));
        prop_assert_eq!(h.edge_count() + g.degree(a), g.edge_count() + g.degree(b));
        prop_assert_eq!(h.neighborhood(a), g.neighborhood(b));
        for x in (0..g.n()).filter(|&x| x != a) {
            for y in (0..g.n()).filter(|&y| y != a) {
                prop_assert_eq!(h.has_edge(x, y), g.has_edge(x, y));
            }
        }
    }

    #[test]
    fn canonical_form_ignores_labels(g in arb_graph(10), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.permute(&perm)).unwrap());
    }

    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        prop_assert_eq!(graph6::decode(&graph6::encode(&g).unwrap()).unwrap(), g);
    }
}

#[test]
fn symmetrize_keeps_triangle_free() {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut trials = 0;
    while trials < 1000 {
        let n = rng.gen_range(2..=12);
        let p = rng.gen_range(0.1..0.5);
        let g = common::random_graph(&mut rng, n, p);
        if common::has_triangle(&g) {
            continue;
        }
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u == v || g.has_edge(u, v) {
            continue;
        }
        let h = g.symmetrize(u, v).unwrap();
        assert!(!contains_clique(&h, 3));
        assert!(!common::has_triangle(&h));
        trials += 1;
    }
}

#[test]
fn canonical_form_matches_brute_isomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..300 {
        let n = rng.gen_range(1..=6);
        let g = common::random_graph(&mut rng, n, 0.5);
        let h = common::random_graph(&mut rng, n, 0.5);
        let same = canonical_form(&g).unwrap() == canonical_form(&h).unwrap();
        assert_eq!(same, common::brute_isomorphic(&g, &h), "{g:?} vs {h:?}");
    }
}
