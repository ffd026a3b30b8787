//! Brute-force reference procedures shared by the integration tests. None of
//! these call into the detectors they are used to check.

#![allow(dead_code)]

use rand::Rng;
use turan_core::Graph;

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Largest clique by checking every vertex subset.
pub fn brute_clique_number(g: &Graph) -> usize {
    let n = g.n();
    let mut best = 0;
    for mask in 0u32..1 << n {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let clique = members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if clique {
            best = size;
        }
    }
    best
}

/// Largest matching by checking every edge subset.
pub fn brute_matching(g: &Graph) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    assert!(edges.len() <= 28, "edge subsets beyond 2^28 are not brute-forceable here");
    let mut best = 0;
    for mask in 0u32..1 << edges.len() {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut used = 0u64;
        let mut ok = true;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                if used >> u & 1 == 1 || used >> v & 1 == 1 {
                    ok = false;
                    break;
                }
                used |= 1 << u | 1 << v;
            }
        }
        if ok {
            best = size;
        }
    }
    best
}

/// Exhaustive assignment search: pick increasing centres and every `l`-subset
/// of each centre's unused neighbours.
pub fn brute_star_forest(g: &Graph, count: usize, l: usize) -> bool {
    fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if items.len() < k {
            return vec![];
        }
        let mut out = subsets(&items[1..], k);
        for mut rest in subsets(&items[1..], k - 1) {
            rest.insert(0, items[0]);
            out.push(rest);
        }
        out
    }
    fn go(g: &Graph, left: usize, l: usize, min_centre: usize, used: u64) -> bool {
        if left == 0 {
            return true;
        }
        for c in min_centre..g.n() {
            if used >> c & 1 == 1 {
                continue;
            }
            let free: Vec<usize> = g.neighbors(c).filter(|&w| used >> w & 1 == 0).collect();
            for leaves in subsets(&free, l) {
                let mask = leaves.iter().fold(used | 1 << c, |m, &w| m | 1 << w);
                if go(g, left - 1, l, c + 1, mask) {
                    return true;
                }
            }
        }
        false
    }
    go(g, count, l, 0, 0)
}

pub fn has_triangle(g: &Graph) -> bool {
    let n = g.n();
    (0..n).any(|a| (a + 1..n).any(|b| g.has_edge(a, b) && (b + 1..n).any(|c| g.has_edge(a, c) && g.has_edge(b, c))))
}

/// All permutations of `0..n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                rec(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.n() == h.n() && g.edge_count() == h.edge_count() && permutations(g.n()).iter().any(|p| &g.permute(p) == h)
}
