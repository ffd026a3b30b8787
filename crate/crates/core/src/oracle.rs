//! Exhaustive ground truth for ex(n, F) at small orders.
//!
//! Graphs are generated one edge at a time. A child `H = G + e` is kept only
//! when `G` is isomorphic to `H - m(H)`, where `m(H)` is the last edge of the
//! canonical form of `H` pulled back to `H`. Every class therefore has a
//! single parent class, and duplicates among the children of one parent are
//! removed by canonical form. F-freeness is downward closed under edge
//! deletion, so pruning non-free children loses nothing.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_form, canonical_labelling, CanonCapExceeded, CanonicalForm, CANON_MAX_VERTICES};
use crate::constructions::{complete_bipartite, turan_graph};
use crate::detectors::{contains_clique, is_family_free};
use crate::family::ForbiddenFamily;
use crate::graph::{Graph, VertexSet};
use crate::graph6;

/// Largest order the enumerator accepts.
pub const ORACLE_MAX_VERTICES: usize = 11;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle enumeration supports n <= {ORACLE_MAX_VERTICES}, got {0}")]
    TooLarge(usize),
    #[error(transparent)]
    Canon(#[from] CanonCapExceeded),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

/// Result of an exhaustive run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalRecord {
    pub n: usize,
    pub family: ForbiddenFamily,
    pub ex_value: usize,
    /// graph6 of the canonical form of each extremal class, in canonical order.
    pub extremal_graphs: Vec<String>,
    /// Number of isomorphism classes of F-free graphs generated.
    pub graphs_visited: u64,
    #[serde(with = "duration_secs")]
    pub elapsed: Duration,
}

impl ExtremalRecord {
    /// Equality ignoring wall-clock time.
    pub fn same_result(&self, other: &ExtremalRecord) -> bool {
        self.n == other.n
            && self.family == other.family
            && self.ex_value == other.ex_value
            && self.extremal_graphs == other.extremal_graphs
            && self.graphs_visited == other.graphs_visited
    }

    pub fn decode_graphs(&self) -> Vec<Graph> {
        self.extremal_graphs
            .iter()
            .map(|s| graph6::decode(s).expect("record holds valid graph6"))
            .collect()
    }
}

mod duration_secs {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        let secs = f64::deserialize(d)?;
        Duration::try_from_secs_f64(secs).map_err(serde::de::Error::custom)
    }
}

fn check_n(n: usize) -> Result<(), OracleError> {
    if n > ORACLE_MAX_VERTICES {
        Err(OracleError::TooLarge(n))
    } else {
        Ok(())
    }
}

/// Canonical deletion: the last canonical edge, mapped back to `h`'s labels.
fn canonical_parent(h: &Graph) -> CanonicalForm {
    let labelling = canonical_labelling(h).expect("oracle orders are within the canonical cap");
    let canon = labelling.form.to_graph();
    let (i, j) = canon
        .edges()
        .max_by_key(|&(i, j)| (j, i))
        .expect("children have at least one edge");
    let mut vertex_at = vec![0usize; h.n()];
    for (v, &lab) in labelling.label.iter().enumerate() {
        vertex_at[lab] = v;
    }
    let parent = h.without_edge(vertex_at[i], vertex_at[j]).expect("edge endpoints are valid");
    canonical_form(&parent).expect("same order as child")
}

/// Accepted children of one class, as canonical forms.
fn children(parent: &CanonicalForm, family: &ForbiddenFamily) -> Vec<CanonicalForm> {
    let g = parent.to_graph();
    let n = g.n();
    let mut out = BTreeSet::new();
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                continue;
            }
            let h = g.with_edge(u, v).expect("valid pair");
            if !is_family_free(&h, family) {
                continue;
            }
            if canonical_parent(&h) != *parent {
                continue;
            }
            out.insert(canonical_form(&h).expect("within cap"));
        }
    }
    out.into_iter().collect()
}

fn with_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T, OracleError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| OracleError::Pool(e.to_string()))?;
    Ok(pool.install(f))
}

/// All isomorphism classes of F-free graphs on `n` vertices, grouped by edge
/// count (level `e` holds the classes with `e` edges, sorted).
fn enumerate_levels(n: usize, family: &ForbiddenFamily, jobs: usize) -> Result<Vec<Vec<CanonicalForm>>, OracleError> {
    check_n(n)?;
    let root = canonical_form(&Graph::empty(n))?;
    if !is_family_free(&Graph::empty(n), family) {
        return Ok(Vec::new());
    }
    with_pool(jobs, || {
        let mut levels = vec![vec![root]];
        loop {
            let current = levels.last().unwrap();
            let mut next: Vec<CanonicalForm> = current
                .par_iter()
                .flat_map_iter(|p| children(p, family))
                .collect();
            if next.is_empty() {
                break;
            }
            next.sort_unstable();
            debug_assert!(next.windows(2).all(|w| w[0] != w[1]), "class generated twice");
            levels.push(next);
        }
        levels
    })
}

/// One representative (the canonical form) per isomorphism class of F-free
/// graphs on `n` vertices, by edge count and then canonical order.
pub fn enumerate_free_graphs(n: usize, family: &ForbiddenFamily, jobs: usize) -> Result<Vec<Graph>, OracleError> {
    Ok(enumerate_levels(n, family, jobs)?
        .into_iter()
        .flatten()
        .map(|c| c.to_graph())
        .collect())
}

/// Exact ex(n, F) and every extremal class.
pub fn brute_force_ex(n: usize, family: &ForbiddenFamily, jobs: usize) -> Result<ExtremalRecord, OracleError> {
    let start = Instant::now();
    let levels = enumerate_levels(n, family, jobs)?;
    let visited = levels.iter().map(|l| l.len() as u64).sum();
    let ex_value = levels.len().saturating_sub(1);
    let extremal_graphs = levels
        .last()
        .map(|top| {
            top.iter()
                .map(|c| graph6::encode(&c.to_graph()).expect("oracle orders fit graph6"))
                .collect()
        })
        .unwrap_or_default();
    Ok(ExtremalRecord {
        n,
        family: family.clone(),
        ex_value,
        extremal_graphs,
        graphs_visited: visited,
        elapsed: start.elapsed(),
    })
}

pub fn enumerate_extremal(n: usize, family: &ForbiddenFamily, jobs: usize) -> Result<Vec<Graph>, OracleError> {
    Ok(brute_force_ex(n, family, jobs)?.decode_graphs())
}

/// Structural family descriptors for [`family_membership`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyDescriptor {
    /// `T₂(s)` joined to an (almost) `(l-1)`-regular graph with a good partition.
    G1 { s: usize, l: usize },
    /// `T₂(s)` joined to a bipartite `R₁` with `T`-degrees `l-1` and `S`-degrees at most `l-1`.
    G2 { s: usize, l: usize },
    /// `K_{s, n-s}`.
    CompleteBipartite { s: usize },
}

/// Whether `g` is a member of the described family, by search over the
/// placement of `T₂(s)` and over all bipartitions of the remainder.
pub fn family_membership(g: &Graph, descriptor: FamilyDescriptor) -> Result<bool, OracleError> {
    let n = g.n();
    if n > CANON_MAX_VERTICES {
        return Err(CanonCapExceeded(n).into());
    }
    match descriptor {
        FamilyDescriptor::CompleteBipartite { s } => {
            if s > n {
                return Ok(false);
            }
            let target = complete_bipartite(s, n - s).expect("small bipartite graph");
            Ok(crate::canon::are_isomorphic(g, &target)?)
        }
        FamilyDescriptor::G1 { s, l } => Ok(l >= 1 && s <= n && search_t2(g, s, |rest, a, b| g1_tail(rest, a, b, l))),
        FamilyDescriptor::G2 { s, l } => Ok(l >= 1 && s <= n && search_t2(g, s, |rest, a, b| g2_tail(rest, a, b, l))),
    }
}

/// Neighbourhoods of the two `T₂(s)` parts inside the remainder, or `None`
/// when the part is empty.
type PartNeighbours = Option<u64>;

/// Tries every placement `U` of `T₂(s)` (both orientations when the parts
/// have equal size) and hands the remainder to `tail`.
fn search_t2(g: &Graph, s: usize, tail: impl Fn(&Graph, PartNeighbours, PartNeighbours) -> bool) -> bool {
    let n = g.n();
    let t2 = turan_graph(s, 2).expect("two parts");
    let hi = s.div_ceil(2);
    let mut found = false;
    for_each_subset(n, s, &mut |u_mask: u64| {
        if found {
            return;
        }
        let u_set = VertexSet::from_vertices(n, (0..n).filter(|&v| u_mask >> v & 1 == 1));
        let inside = g.induced_subgraph(&u_set).expect("subset of g");
        if inside.edge_count() != t2.edge_count() || !crate::canon::are_isomorphic(&inside, &t2).unwrap_or(false) {
            return;
        }
        let members: Vec<usize> = u_set.iter().collect();
        let rest_vertices: Vec<usize> = (0..n).filter(|&v| u_mask >> v & 1 == 0).collect();
        let rest = g.remove_vertices(&u_set);
        let local = |v: usize| -> u64 {
            rest_vertices
                .iter()
                .enumerate()
                .filter(|&(_, &w)| g.has_edge(v, w))
                .fold(0, |m, (i, _)| m | 1 << i)
        };
        for (larger, smaller) in t2_orientations(&inside, &members, hi) {
            // Every vertex of a part must see the same set outside U.
            let uniform = |part: &[usize]| -> Option<PartNeighbours> {
                let Some(&first) = part.first() else { return Some(None) };
                let nb = local(first);
                part.iter().all(|&v| local(v) == nb).then_some(Some(nb))
            };
            let (Some(a), Some(b)) = (uniform(&larger), uniform(&smaller)) else { continue };
            if tail(&rest, a, b) {
                found = true;
                return;
            }
        }
    });
    found
}

/// The (larger, smaller) part assignments of a complete bipartite `G[U]`.
fn t2_orientations(inside: &Graph, members: &[usize], hi: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let s = members.len();
    if s == 0 {
        return vec![(vec![], vec![])];
    }
    if s == 1 {
        return vec![(members.to_vec(), vec![])];
    }
    let colour = inside.bipartition().expect("T₂(s) is bipartite");
    let side = |c: bool| -> Vec<usize> { (0..s).filter(|&i| colour[i] == c).map(|i| members[i]).collect() };
    let (p, q) = (side(false), side(true));
    let mut out = Vec::new();
    if p.len() == hi {
        out.push((p.clone(), q.clone()));
    }
    if q.len() == hi && (p.len() != hi || s % 2 == 0) {
        out.push((q, p));
    }
    out
}

fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(u64)) {
    fn rec(start: usize, n: usize, left: usize, mask: u64, f: &mut impl FnMut(u64)) {
        if left == 0 {
            f(mask);
            return;
        }
        for v in start..=n - left {
            rec(v + 1, n, left - 1, mask | 1 << v, f);
        }
    }
    if k <= n {
        rec(0, n, k, 0, f);
    }
}

/// Two-colourings of `rest` minus `skip`, one per choice of colour on each component.
fn colourings(rest: &Graph, skip: Option<usize>, f: &mut impl FnMut(u64, u64) -> bool) -> bool {
    let n = rest.n();
    let mut keep = VertexSet::full(n);
    if let Some(v) = skip {
        keep.remove(v);
    }
    let kept: Vec<usize> = keep.iter().collect();
    let sub = rest.induced_subgraph(&keep).expect("subset");
    let Some(base) = sub.bipartition() else { return false };
    let comps = sub.components();
    for flips in 0u64..1 << comps.len() {
        let (mut side0, mut side1) = (0u64, 0u64);
        for (ci, comp) in comps.iter().enumerate() {
            let flip = flips >> ci & 1 == 1;
            for &v in comp {
                if base[v] ^ flip {
                    side1 |= 1 << kept[v];
                } else {
                    side0 |= 1 << kept[v];
                }
            }
        }
        if f(side0, side1) {
            return true;
        }
    }
    false
}

fn g1_tail(rest: &Graph, a: PartNeighbours, b: PartNeighbours, l: usize) -> bool {
    let m = rest.n();
    let d = l - 1;
    if contains_clique(rest, 3) || !crate::constructions::has_regular_degrees(rest, d) {
        return false;
    }
    let odd = m % 2 == 1;
    let exceptional: Vec<Option<usize>> = if odd { (0..m).map(Some).collect() } else { vec![None] };
    for v0 in exceptional {
        let hit = colourings(rest, v0, &mut |x, y| {
            // x is V₁, y is V₂ ∖ {v₀}.
            if x.count_ones() as usize != m / 2 {
                return false;
            }
            a.is_none_or(|nb| nb == x) && b.is_none_or(|nb| nb == y)
        });
        if hit {
            return true;
        }
    }
    false
}

fn g2_tail(rest: &Graph, a: PartNeighbours, b: PartNeighbours, l: usize) -> bool {
    let m = rest.n();
    let d = l - 1;
    colourings(rest, None, &mut |x, y| {
        // x is S, y is T.
        if x.count_ones() as usize != m.div_ceil(2) {
            return false;
        }
        let t_ok = (0..m).filter(|&v| y >> v & 1 == 1).all(|v| rest.degree(v) == d);
        let s_ok = (0..m).filter(|&v| x >> v & 1 == 1).all(|v| rest.degree(v) <= d);
        t_ok && s_ok && a.is_none_or(|nb| nb == x) && b.is_none_or(|nb| nb == y)
    })
}
