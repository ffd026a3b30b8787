//! Deterministic builders for the extremal graphs.
//!
//! Labelling conventions, relied on by the reports and graph6 output:
//! - Turán graphs put vertex `v` in part `v mod k`, so part 0 is a largest part.
//! - Joins keep the left operand at `0..n_left` and shift the right operand.
//! - The regular builder uses `V₁ = 0..⌊n/2⌋`, `V₂ = ⌊n/2⌋..n`, with the
//!   exceptional vertex (odd `n`) at `n - 1`.

use thiserror::Error;

use crate::detectors::contains_clique;
use crate::graph::{Graph, GraphError, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("{builder}: {requirement}")]
    Precondition {
        builder: &'static str,
        requirement: String,
    },
    #[error("regular builder found no eligible swap edge for n = {n}, l = {l}")]
    SwapExhausted { n: usize, l: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn precondition(builder: &'static str, requirement: impl Into<String>) -> ConstructionError {
    ConstructionError::Precondition {
        builder,
        requirement: requirement.into(),
    }
}

/// `T_k(n)`: vertex `v` lies in part `v mod k`.
pub fn turan_graph(n: usize, k: usize) -> Result<Graph, ConstructionError> {
    if k == 0 {
        return if n == 0 {
            Ok(Graph::empty(0))
        } else {
            Err(precondition("turan_graph", "k >= 1 when n > 0"))
        };
    }
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if u % k != v % k {
                g.insert_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// `K_{a,b}` with the `a` side first.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, ConstructionError> {
    Ok(Graph::empty(a).join(&Graph::empty(b))?)
}

/// Good partition attached to the regular builder's output.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionCertificate {
    pub v1: VertexSet,
    pub v2: VertexSet,
    pub exceptional: Option<usize>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("parts overlap or do not cover the vertex set")]
    NotAPartition,
    #[error("part sizes {0}|{1} are not ⌊n/2⌋|⌈n/2⌉")]
    Unbalanced(usize, usize),
    #[error("exceptional vertex must lie in V₂ and exist exactly when n is odd")]
    BadExceptional,
    #[error("edge {0}-{1} lies inside a part")]
    EdgeInsidePart(usize, usize),
}

impl PartitionCertificate {
    pub fn validate(&self, g: &Graph) -> Result<(), CertificateError> {
        let n = g.n();
        let all = VertexSet::full(n);
        if !self.v1.is_disjoint(&self.v2) || self.v1.union(&self.v2) != all {
            return Err(CertificateError::NotAPartition);
        }
        let (a, b) = (self.v1.len(), self.v2.len());
        if a != n / 2 || b != n.div_ceil(2) {
            return Err(CertificateError::Unbalanced(a, b));
        }
        match self.exceptional {
            Some(v0) if n % 2 == 1 && self.v2.contains(v0) => {}
            None if n % 2 == 0 => {}
            _ => return Err(CertificateError::BadExceptional),
        }
        let mut v2 = self.v2.clone();
        if let Some(v0) = self.exceptional {
            v2.remove(v0);
        }
        for (u, v) in g.edges() {
            if Some(u) == self.exceptional || Some(v) == self.exceptional {
                continue;
            }
            if (self.v1.contains(u) && self.v1.contains(v)) || (v2.contains(u) && v2.contains(v)) {
                return Err(CertificateError::EdgeInsidePart(u, v));
            }
        }
        Ok(())
    }

    /// `V₂` without the exceptional vertex.
    pub fn v2_regular(&self) -> VertexSet {
        let mut v2 = self.v2.clone();
        if let Some(v0) = self.exceptional {
            v2.remove(v0);
        }
        v2
    }
}

/// K₃-free `l`-regular (or almost `l`-regular) graph on `n` vertices with a
/// good partition, for `n >= l² + 2`.
pub fn good_partition_regular(n: usize, l: usize) -> Result<(Graph, PartitionCertificate), ConstructionError> {
    if n < l * l + 2 {
        return Err(precondition("good_partition_regular", format!("n >= l^2 + 2 = {}", l * l + 2)));
    }
    build_good_partition(n, l)
}

/// The same construction without the `n >= l² + 2` guard. It still fails
/// when the swap schedule runs dry or would create a triangle.
///
/// Each side is cut into `m` blocks of `l` vertices plus a remainder
/// (`a₁..a_r` in `V₁`, `b₁..b_r` and possibly `v₀` in `V₂`). Blocks are wired
/// as `K_{l,l}`, remainders as `K_{r,r}`. Then, for each `i`, `l - r` swaps
/// delete a block edge `xy` and add `x b_i`, `y a_i`; for odd `n`, `⌊l/2⌋`
/// swaps from distinct blocks delete `xy` and add `x v₀`, `y v₀`. Each swap
/// takes the lexicographically smallest eligible `(x, y)`.
pub fn build_good_partition(n: usize, l: usize) -> Result<(Graph, PartitionCertificate), ConstructionError> {
    block_construction(n, l, true)
}

fn block_construction(
    n: usize,
    l: usize,
    feed_exceptional: bool,
) -> Result<(Graph, PartitionCertificate), ConstructionError> {
    let half = n / 2;
    let odd = n % 2 == 1;
    let v1 = VertexSet::from_vertices(n, 0..half);
    let v2 = VertexSet::from_vertices(n, half..n);
    let exceptional = odd.then(|| n - 1);
    let cert = PartitionCertificate { v1, v2, exceptional };
    let mut g = Graph::empty(n);
    if l == 0 {
        return Ok((g, cert));
    }

    let blocks = half / l;
    let r = half % l;
    let x_of = |block: usize, i: usize| block * l + i;
    let y_of = |block: usize, i: usize| half + block * l + i;
    let a: Vec<usize> = (blocks * l..half).collect();
    let b: Vec<usize> = (half + blocks * l..half + blocks * l + r).collect();

    for block in 0..blocks {
        for i in 0..l {
            for j in 0..l {
                g.insert_edge(x_of(block, i), y_of(block, j));
            }
        }
    }
    for &ai in &a {
        for &bj in &b {
            g.insert_edge(ai, bj);
        }
    }

    let block_edges = |g: &Graph, block: usize| -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..l {
            for j in 0..l {
                let (x, y) = (x_of(block, i), y_of(block, j));
                if g.has_edge(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    };

    for (&ai, &bi) in a.iter().zip(&b) {
        for _ in r..l {
            let chosen = (0..blocks)
                .flat_map(|block| block_edges(&g, block))
                .find(|&(x, y)| !g.has_edge(x, bi) && !g.has_edge(y, ai));
            let (x, y) = chosen.ok_or(ConstructionError::SwapExhausted { n, l })?;
            g.delete_edge(x, y);
            g.insert_edge(x, bi);
            g.insert_edge(y, ai);
            check_swap(&g, &[(x, bi), (y, ai)], n, l)?;
        }
    }

    if let Some(v0) = exceptional.filter(|_| feed_exceptional) {
        let mut used = vec![false; blocks];
        for _ in 0..l / 2 {
            let chosen = (0..blocks).filter(|&blk| !used[blk]).find_map(|block| {
                block_edges(&g, block)
                    .into_iter()
                    .find(|&(x, y)| !g.has_edge(x, v0) && !g.has_edge(y, v0))
                    .map(|e| (block, e))
            });
            let (block, (x, y)) = chosen.ok_or(ConstructionError::SwapExhausted { n, l })?;
            used[block] = true;
            g.delete_edge(x, y);
            g.insert_edge(x, v0);
            g.insert_edge(y, v0);
            check_swap(&g, &[(x, v0), (y, v0)], n, l)?;
        }
    }
    Ok((g, cert))
}

/// New edges must not close a triangle.
fn check_swap(g: &Graph, added: &[(usize, usize)], n: usize, l: usize) -> Result<(), ConstructionError> {
    let closes_triangle = added
        .iter()
        .any(|&(u, v)| !g.neighborhood(u).is_disjoint(&g.neighborhood(v)));
    if closes_triangle {
        Err(ConstructionError::SwapExhausted { n, l })
    } else {
        Ok(())
    }
}

/// Bipartite graph with its two sides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartite {
    pub graph: Graph,
    /// `S`, of size ⌈m/2⌉.
    pub s_side: VertexSet,
    /// `T`, of size ⌊m/2⌋.
    pub t_side: VertexSet,
}

/// `R₁`: every `T`-vertex has degree exactly `l - 1`, every `S`-vertex at most `l - 1`.
///
/// Built by the regular block construction of degree `l - 1` with the
/// exceptional vertex left unfed: `T = V₁`, and `S = V₂` (odd `m`, where the
/// exceptional vertex keeps degree 0) or `S = V₁`, `T = V₂` (even `m`, where
/// the graph is regular and the result coincides with the regular builder).
/// When the swap schedule is infeasible for small `m`, falls back to
/// [`r1_round_robin`].
pub fn r1_bipartite(m: usize, l: usize) -> Result<Bipartite, ConstructionError> {
    check_r1(m, l)?;
    let Ok((graph, cert)) = block_construction(m, l - 1, false) else {
        return r1_round_robin(m, l);
    };
    let (s_side, t_side) = if m % 2 == 0 {
        (cert.v1, cert.v2)
    } else {
        (cert.v2, cert.v1)
    };
    Ok(Bipartite { graph, s_side, t_side })
}

/// `R₁` with `S = 0..⌈m/2⌉` and `T` after it, where `T`-vertex `i` is
/// joined to `S`-vertices `(i(l-1) + j) mod |S|` for `j < l - 1`.
pub fn r1_round_robin(m: usize, l: usize) -> Result<Bipartite, ConstructionError> {
    check_r1(m, l)?;
    let s_len = m.div_ceil(2);
    let t_len = m / 2;
    let mut g = Graph::empty(m);
    for i in 0..t_len {
        for j in 0..l - 1 {
            g.insert_edge(s_len + i, (i * (l - 1) + j) % s_len);
        }
    }
    Ok(Bipartite {
        graph: g,
        s_side: VertexSet::from_vertices(m, 0..s_len),
        t_side: VertexSet::from_vertices(m, s_len..m),
    })
}

fn check_r1(m: usize, l: usize) -> Result<(), ConstructionError> {
    if m == 0 || l == 0 {
        return Err(precondition("r1_bipartite", "m >= 1 and l >= 1"));
    }
    if m.div_ceil(2) < l - 1 {
        return Err(precondition("r1_bipartite", format!("⌈m/2⌉ >= l - 1 = {}", l - 1)));
    }
    Ok(())
}

/// Places `T₂(s)` on `0..s` and `rest` on `s..`, joining part 0 of `T₂(s)`
/// to `to_larger` and part 1 to `to_smaller` (both indexed within `rest`).
fn attach_t2(s: usize, rest: &Graph, to_larger: &VertexSet, to_smaller: &VertexSet) -> Result<Graph, ConstructionError> {
    let mut g = turan_graph(s, 2)?.disjoint_union(rest)?;
    for u in 0..s {
        let targets = if u % 2 == 0 { to_larger } else { to_smaller };
        for w in targets.iter() {
            g.insert_edge(u, s + w);
        }
    }
    Ok(g)
}

/// A member of 𝒢1(s) built from `T₂(s)` and the `(l-1)`-regular graph on `n - s` vertices.
pub fn g1(n: usize, s: usize, l: usize) -> Result<Graph, ConstructionError> {
    check_g1(n, s, l)?;
    let m = n - s;
    let d = l - 1;
    if m < d * d + 2 {
        return Err(precondition("g1", format!("n - s >= (l-1)^2 + 2 = {}", d * d + 2)));
    }
    g1_from(n, s, l, good_partition_regular(m, d)?)
}

/// [`g1`] without the `n - s >= (l-1)² + 2` guard; fails only if the regular
/// part cannot be built.
pub fn g1_relaxed(n: usize, s: usize, l: usize) -> Result<Graph, ConstructionError> {
    check_g1(n, s, l)?;
    g1_from(n, s, l, build_good_partition(n - s, l - 1)?)
}

fn check_g1(n: usize, s: usize, l: usize) -> Result<(), ConstructionError> {
    if l == 0 || n < s {
        return Err(precondition("g1", "l >= 1 and n >= s"));
    }
    Ok(())
}

fn g1_from(_n: usize, s: usize, _l: usize, (r, cert): (Graph, PartitionCertificate)) -> Result<Graph, ConstructionError> {
    attach_t2(s, &r, &cert.v1, &cert.v2_regular())
}

/// A member of 𝒢2(s) built from `T₂(s)` and `R₁` on `n - s` vertices.
pub fn g2(n: usize, s: usize, l: usize) -> Result<Graph, ConstructionError> {
    if n < s {
        return Err(precondition("g2", "n >= s"));
    }
    let r1 = r1_bipartite(n - s, l)?;
    attach_t2(s, &r1.graph, &r1.s_side, &r1.t_side)
}

/// `G(n, k) = T_{k-1}(s) ∨ K̄_{n-s}`.
pub fn alon_frankl_extremal(n: usize, k: usize, s: usize) -> Result<Graph, ConstructionError> {
    if k < 2 || n < s {
        return Err(precondition("alon_frankl_extremal", "k >= 2 and n >= s"));
    }
    Ok(turan_graph(s, k - 1)?.join(&Graph::empty(n - s))?)
}

/// `T_k(2s+1) ∪ K̄_{n-2s-1}`, the other candidate in the clique/matching maximum.
pub fn dense_turan_component(n: usize, k: usize, s: usize) -> Result<Graph, ConstructionError> {
    if k < 1 || n < 2 * s + 1 {
        return Err(precondition("dense_turan_component", "k >= 1 and n >= 2s + 1"));
    }
    Ok(turan_graph(2 * s + 1, k)?.disjoint_union(&Graph::empty(n - 2 * s - 1))?)
}

/// `T_{k-2}(s) ∨ R` with `R` the `(l-1)`-regular graph on `n - s` vertices.
pub fn main_extremal(n: usize, k: usize, s: usize, l: usize) -> Result<Graph, ConstructionError> {
    if k < 3 || l < 2 || n < s {
        return Err(precondition("main_extremal", "k >= 3, l >= 2 and n >= s"));
    }
    let d = l - 1;
    if n - s < d * d + 2 {
        return Err(precondition("main_extremal", format!("n - s >= (l-1)^2 + 2 = {}", d * d + 2)));
    }
    let (r, _) = good_partition_regular(n - s, d)?;
    Ok(turan_graph(s, k - 2)?.join(&r)?)
}

/// True when every vertex has degree `l`, except exactly one of degree `l - 1`
/// when `l * n` is odd.
pub fn has_regular_degrees(g: &Graph, l: usize) -> bool {
    let degrees = g.degrees();
    let low = degrees.iter().filter(|&&d| d + 1 == l).count();
    let exact = degrees.iter().filter(|&&d| d == l).count();
    let expected_low = (l * g.n()) % 2;
    low == expected_low && exact + low == g.n()
}

/// Triangle-free check used by the builder audits.
pub fn is_triangle_free(g: &Graph) -> bool {
    !contains_clique(g, 3)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detectors::{contains_star_forest, max_matching_size};

    #[test]
    fn turan_examples() {
        assert_eq!(turan_graph(5, 1).unwrap().edge_count(), 0);
        assert_eq!(turan_graph(5, 5).unwrap(), Graph::complete(5));
        assert_eq!(turan_graph(4, 2).unwrap().edge_count(), 4);
        assert!(turan_graph(3, 0).is_err());
        let t = turan_graph(9, 3).unwrap();
        assert!(!contains_clique(&t, 4));
    }

    #[test]
    fn bipartite_examples() {
        assert_eq!(complete_bipartite(1, 4).unwrap().edge_count(), 4);
        assert_eq!(complete_bipartite(0, 5).unwrap(), Graph::empty(5));
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert_eq!(max_matching_size(&k23), 2);
    }

    #[test]
    fn regular_even() {
        let (g, cert) = good_partition_regular(8, 2).unwrap();
        assert_eq!(g.edge_count(), 8);
        assert!(g.degrees().iter().all(|&d| d == 2));
        assert_eq!((cert.v1.len(), cert.v2.len()), (4, 4));
        cert.validate(&g).unwrap();
    }

    #[test]
    fn regular_odd() {
        let (g, cert) = good_partition_regular(11, 2).unwrap();
        assert!(g.degrees().iter().all(|&d| d == 2));
        assert!(is_triangle_free(&g));
        assert_eq!(cert.exceptional, Some(10));
        cert.validate(&g).unwrap();
        let mut v0 = VertexSet::empty(11);
        v0.insert(10);
        assert!(g.remove_vertices(&v0).is_bipartite());
    }

    #[test]
    fn regular_perfect_matching() {
        let (g, cert) = good_partition_regular(6, 1).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(max_matching_size(&g), 3);
        assert_eq!((cert.v1.len(), cert.v2.len()), (3, 3));
    }

    #[test]
    fn regular_precondition() {
        assert!(matches!(good_partition_regular(5, 2), Err(ConstructionError::Precondition { .. })));
        // The relaxed builder still manages C₅ here.
        let (g, _) = build_good_partition(5, 2).unwrap();
        assert!(has_regular_degrees(&g, 2) && is_triangle_free(&g));
        assert!(build_good_partition(5, 3).is_err());
    }

    #[test]
    fn r1_examples() {
        let r = r1_bipartite(9, 3).unwrap();
        assert_eq!((r.s_side.len(), r.t_side.len()), (5, 4));
        assert!(r.t_side.iter().all(|v| r.graph.degree(v) == 2));
        assert_eq!(r.graph.edge_count(), 8);
        let r = r1_bipartite(6, 1).unwrap();
        assert_eq!((r.s_side.len(), r.t_side.len(), r.graph.edge_count()), (3, 3, 0));
        let r = r1_bipartite(4, 2).unwrap();
        assert_eq!(r.graph.edge_count(), 2);
        assert!(r.s_side.iter().all(|v| r.graph.degree(v) <= 1));
        assert!(r1_bipartite(4, 4).is_err());
    }

    #[test]
    fn r1_round_robin_examples() {
        let r = r1_round_robin(9, 3).unwrap();
        assert_eq!((r.s_side.len(), r.t_side.len(), r.graph.edge_count()), (5, 4, 8));
        assert!(r.t_side.iter().all(|v| r.graph.degree(v) == 2));
        let r = r1_round_robin(4, 2).unwrap();
        assert_eq!(r.graph, Graph::from_edges(4, &[(0, 2), (1, 3)]).unwrap());
        // Too small for the block schedule; the fallback still satisfies R₁.
        let r = r1_bipartite(5, 4).unwrap();
        assert_eq!(r, r1_round_robin(5, 4).unwrap());
    }

    #[test]
    fn g1_examples() {
        let g = g1(10, 2, 3).unwrap();
        assert_eq!(g.edge_count(), 17);
        let g = g1(7, 1, 2).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!(is_triangle_free(&g));
        assert!(!contains_star_forest(&g, 2, 2));
        let (r, _) = good_partition_regular(12, 2).unwrap();
        assert_eq!(g1(12, 0, 3).unwrap(), r);
        assert!(g1(12, 3, 4).is_err());
        assert_eq!(g1_relaxed(12, 3, 4).unwrap().edge_count(), 27);
    }

    #[test]
    fn g2_examples() {
        assert_eq!(g2(12, 3, 4).unwrap().edge_count(), 28);
        assert_eq!(g2(9, 0, 3).unwrap(), r1_bipartite(9, 3).unwrap().graph);
        assert_eq!(g2(10, 2, 3).unwrap(), g1(10, 2, 3).unwrap());
        assert_eq!(g2(11, 2, 3).unwrap().edge_count(), 18);
        assert_eq!(g1(11, 2, 3).unwrap().edge_count(), 18);
    }

    #[test]
    fn alon_frankl_examples() {
        let g = alon_frankl_extremal(5, 2, 1).unwrap();
        assert_eq!(g, complete_bipartite(1, 4).unwrap());
        assert_eq!(alon_frankl_extremal(6, 4, 0).unwrap(), Graph::empty(6));
        assert_eq!(alon_frankl_extremal(7, 3, 2).unwrap().edge_count(), 11);
    }

    #[test]
    fn main_examples() {
        assert_eq!(main_extremal(30, 3, 1, 2).unwrap().edge_count(), 43);
        let (r, _) = good_partition_regular(12, 2).unwrap();
        assert_eq!(main_extremal(12, 3, 0, 3).unwrap(), r);
        let g = main_extremal(25, 4, 2, 2).unwrap();
        assert_eq!(g.edge_count(), 58);
        assert!(!contains_clique(&g, 5));
        assert!(!contains_star_forest(&g, 3, 2));
    }
}
