//! Simple undirected graphs stored as bit rows.
//!
//! Every row is `stride = ceil(n / 64)` machine words wide, so graphs with
//! `n <= 64` occupy a single word per vertex and the hot paths (oracle,
//! canonical labelling, clique search) can read a row as one `u64`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest vertex count accepted anywhere in the crate.
pub const MAX_VERTICES: usize = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("graph on {0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("cannot symmetrize a vertex onto itself ({0})")]
    SymmetrizeSameVertex(usize),
    #[error("cannot symmetrize {u} to {v}: the vertices are adjacent")]
    SymmetrizeAdjacent { u: usize, v: usize },
}

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// A set of vertex indices of some host graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut set = Self::empty(n);
        for v in 0..n {
            set.insert(v);
        }
        set
    }

    /// Builds a set from vertex indices; panics if an index is `>= n`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Self {
        let mut set = Self::empty(n);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    /// Size of the host vertex range, not the number of members.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        iter_bits(&self.words)
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & b == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter().chain(std::iter::repeat(&0)))
            .all(|(a, b)| a & !b == 0)
    }

    /// The single-word mask of the set; only meaningful when `universe() <= 64`.
    pub fn as_mask(&self) -> u64 {
        debug_assert!(self.n <= 64);
        self.words.first().copied().unwrap_or(0)
    }

    fn zip_with(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        let n = self.n.max(other.n);
        let len = words_for(n);
        let get = |s: &VertexSet, i: usize| s.words.get(i).copied().unwrap_or(0);
        VertexSet {
            n,
            words: (0..len).map(|i| f(get(self, i), get(other, i))).collect(),
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * 64 + b)
            }
        })
    })
}

/// Simple undirected graph on vertices `0..n`.
///
/// The value is immutable from the outside: every structural operation
/// returns a fresh graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph on {n} vertices exceeds {MAX_VERTICES}");
        let stride = words_for(n);
        Graph {
            n,
            stride,
            bits: vec![0; n * stride],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        if n >= 3 {
            for v in 0..n {
                g.insert_edge(v, (v + 1) % n);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.insert_edge(v - 1, v);
        }
        g
    }

    /// Builds a graph from an edge list; repeated pairs collapse to one edge.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph on at most 64 vertices from neighbour masks.
    ///
    /// The rows must be symmetric and loop-free; this is checked in debug builds.
    pub fn from_rows(rows: &[u64]) -> Self {
        let n = rows.len();
        assert!(n <= 64);
        debug_assert!((0..n).all(|v| rows[v] >> v & 1 == 0));
        debug_assert!((0..n).all(|u| (0..n).all(|v| (rows[u] >> v & 1) == (rows[v] >> u & 1))));
        Graph {
            n,
            stride: 1,
            bits: rows.to_vec(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bits[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.bits[u * self.stride + v / 64] |= 1 << (v % 64);
        self.bits[v * self.stride + u / 64] |= 1 << (u % 64);
    }

    pub(crate) fn delete_edge(&mut self, u: usize, v: usize) {
        self.bits[u * self.stride + v / 64] &= !(1 << (v % 64));
        self.bits[v * self.stride + u / 64] &= !(1 << (u % 64));
    }

    /// A copy of the graph with edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.insert_edge(u, v);
        Ok(g)
    }

    /// A copy of the graph with edge `uv` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.delete_edge(u, v);
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::LoopEdge(u));
        }
        Ok(())
    }

    pub(crate) fn row_words(&self, v: usize) -> &[u64] {
        &self.bits[v * self.stride..(v + 1) * self.stride]
    }

    /// Neighbour mask of `v`; only valid for graphs with at most 64 vertices.
    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.bits[v]
    }

    /// All neighbour masks; only valid for graphs with at most 64 vertices.
    pub fn rows(&self) -> &[u64] {
        assert!(self.n <= 64, "rows() requires n <= 64");
        &self.bits
    }

    pub fn neighborhood(&self, v: usize) -> VertexSet {
        VertexSet {
            n: self.n,
            words: self.row_words(v).to_vec(),
        }
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row_words(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row_words(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Number of edges with one end in `a` and the other in `b`; `a` and `b` must be disjoint.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter()
            .map(|u| self.neighborhood(u).intersection(b).len())
            .sum()
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.insert_edge(u, v);
                }
            }
        }
        g
    }

    /// `g ∨ h`: vertices of `h` are shifted by `g.n()` and every cross pair is joined.
    pub fn join(&self, other: &Graph) -> Result<Graph, GraphError> {
        let mut g = self.disjoint_union(other)?;
        for u in 0..self.n {
            for v in 0..other.n {
                g.insert_edge(u, self.n + v);
            }
        }
        Ok(g)
    }

    /// `g ∪ h` on vertex-disjoint copies; vertices of `h` are shifted by `g.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.insert_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.insert_edge(self.n + u, self.n + v);
        }
        Ok(g)
    }

    /// `G[S]`, with the members of `s` relabelled `0..|s|` in ascending order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, GraphError> {
        if s.universe() > self.n {
            if let Some(v) = s.iter().find(|&v| v >= self.n) {
                return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let members: Vec<usize> = s.iter().collect();
        let mut g = Graph::empty(members.len());
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// `G ∖ S`: the subgraph induced by the vertices outside `s`.
    pub fn remove_vertices(&self, s: &VertexSet) -> Graph {
        let keep = VertexSet::full(self.n).difference(s);
        let keep = VertexSet::from_vertices(self.n, keep.iter().filter(|&v| v < self.n));
        self.induced_subgraph(&keep).expect("subset of own vertices")
    }

    /// Replaces the neighbourhood of `u` by the neighbourhood of `v`.
    ///
    /// Only defined for distinct, non-adjacent `u` and `v`; the result satisfies
    /// `N(u) = N_g(v)` and `e = e(g) - d(u) + d(v)`.
    pub fn symmetrize(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SymmetrizeSameVertex(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::SymmetrizeAdjacent { u, v });
        }
        let mut g = self.clone();
        let old: Vec<usize> = self.neighbors(u).collect();
        for w in old {
            g.delete_edge(u, w);
        }
        for w in self.neighbors(v) {
            g.insert_edge(u, w);
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        g
    }

    /// Two-colouring of the graph if it is bipartite (colour `false` for the
    /// smallest vertex of each component).
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut colour: Vec<Option<bool>> = vec![None; self.n];
        let mut stack = Vec::new();
        for start in 0..self.n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            stack.push(start);
            while let Some(u) = stack.pop() {
                let cu = colour[u].unwrap();
                for w in self.neighbors(u) {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!cu);
                            stack.push(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(|c| c.unwrap()).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                i += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// JSON edge-list form `{"n": .., "edges": [[u, v], ..]}`.
    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList {
            n: self.n,
            edges: self.edges().map(|(u, v)| [u, v]).collect(),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// Serialized edge-list interchange form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl TryFrom<EdgeList> for Graph {
    type Error = GraphError;

    fn try_from(list: EdgeList) -> Result<Self, Self::Error> {
        let pairs: Vec<(usize, usize)> = list.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(list.n, &pairs)
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_edge_list().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let list = EdgeList::deserialize(deserializer)?;
        Graph::try_from(list).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn invariants_hold(g: &Graph) -> bool {
        let sym = (0..g.n()).all(|u| (0..g.n()).all(|v| g.has_edge(u, v) == g.has_edge(v, u)));
        let loopless = (0..g.n()).all(|v| !g.has_edge(v, v));
        let handshake = g.degrees().iter().sum::<usize>() == 2 * g.edge_count();
        sym && loopless && handshake
    }

    #[test]
    fn build_path_and_empty() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert!(invariants_hold(&p3));
        assert_eq!(Graph::from_edges(4, &[]).unwrap().edge_count(), 0);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::LoopEdge(1)));
    }

    #[test]
    fn join_examples() {
        let k23 = Graph::empty(2).join(&Graph::empty(3)).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert!(k23.is_bipartite());
        let wheel = Graph::empty(1).join(&Graph::cycle(4)).unwrap();
        assert_eq!(wheel.edge_count(), 8);
        let c5 = Graph::cycle(5);
        assert_eq!(Graph::empty(0).join(&c5).unwrap(), c5);
    }

    #[test]
    fn union_examples() {
        let k2 = Graph::complete(2);
        let m2 = k2.disjoint_union(&k2).unwrap();
        assert_eq!(m2, Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap());
        let c5 = Graph::cycle(5);
        assert_eq!(c5.disjoint_union(&Graph::empty(0)).unwrap(), c5);
        let s2 = Graph::from_edges(3, &[(0, 1), (0, 2)]).unwrap();
        let two = s2.disjoint_union(&s2).unwrap();
        assert_eq!((two.n(), two.edge_count()), (6, 4));
    }

    #[test]
    fn wide_graphs_use_multiword_rows() {
        let a = Graph::complete(40);
        let b = Graph::cycle(50);
        let j = a.join(&b).unwrap();
        assert_eq!(j.n(), 90);
        assert_eq!(j.edge_count(), 780 + 50 + 2000);
        assert!(j.has_edge(3, 89));
        assert!(j.has_edge(40, 89));
        assert!(!j.has_edge(41, 89));
        assert!(invariants_hold(&j));
    }

    #[test]
    fn induced_examples() {
        let c5 = Graph::cycle(5);
        let p = c5.induced_subgraph(&VertexSet::from_vertices(5, [0, 1, 2])).unwrap();
        assert_eq!(p, Graph::path(3));
        let none = c5.induced_subgraph(&VertexSet::empty(5)).unwrap();
        assert_eq!(none.n(), 0);
        let k3 = Graph::complete(5)
            .induced_subgraph(&VertexSet::from_vertices(5, [0, 2, 4]))
            .unwrap();
        assert_eq!(k3, Graph::complete(3));
    }

    #[test]
    fn symmetrize_examples() {
        let p3 = Graph::path(3);
        assert_eq!(p3.symmetrize(0, 2).unwrap(), p3);

        let g = Graph::from_edges(4, &[(2, 3)]).unwrap();
        let h = g.symmetrize(0, 2).unwrap();
        assert_eq!(h.neighbors(0).collect::<Vec<_>>(), vec![3]);
        assert_eq!(h.edge_count(), 2);
    }

    #[test]
    fn symmetrize_errors() {
        let p3 = Graph::path(3);
        assert_eq!(p3.symmetrize(0, 1), Err(GraphError::SymmetrizeAdjacent { u: 0, v: 1 }));
        assert_eq!(p3.symmetrize(2, 2), Err(GraphError::SymmetrizeSameVertex(2)));
    }

    #[test]
    fn edge_list_json_shape() {
        let g = Graph::path(3);
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        let back: Graph = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }
}
