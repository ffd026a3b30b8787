//! Canonical labelling by partition refinement and individualisation.
//!
//! The search tree is the usual one: refine the ordered partition to an
//! equitable one, individualise each vertex of the first non-singleton cell,
//! recurse. Leaves are compared by their relabelled adjacency; the largest
//! wins. Leaves equal to an earlier leaf yield automorphisms, which prune
//! siblings lying in the same orbit of the pointwise stabiliser of the current
//! prefix, and let the search jump back to where the path left the first leaf.

use std::cmp::Ordering;

use thiserror::Error;

use crate::graph::Graph;

/// Largest order the exact canonical path accepts.
pub const CANON_MAX_VERTICES: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("canonical form needs n <= {CANON_MAX_VERTICES}, got {0}")]
pub struct CanonCapExceeded(pub usize);

/// Isomorphism-invariant code of a graph with at most 16 vertices.
///
/// Two graphs have equal codes iff they are isomorphic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: u8,
    code: u128,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    /// The canonical representative of the isomorphism class.
    pub fn to_graph(&self) -> Graph {
        let n = self.n();
        let mut rows = vec![0u64; n];
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if self.code >> idx & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                idx += 1;
            }
        }
        Graph::from_rows(&rows)
    }
}

/// Canonical form plus the labelling that produced it.
#[derive(Debug, Clone)]
pub struct Labelling {
    pub form: CanonicalForm,
    /// `label[v]` is the canonical position of vertex `v`.
    pub label: Vec<usize>,
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, CanonCapExceeded> {
    canonical_labelling(g).map(|l| l.form)
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool, CanonCapExceeded> {
    if g.n() != h.n() {
        check_cap(g.n())?;
        check_cap(h.n())?;
        return Ok(false);
    }
    if g.edge_count() != h.edge_count() {
        check_cap(g.n())?;
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

fn check_cap(n: usize) -> Result<(), CanonCapExceeded> {
    if n > CANON_MAX_VERTICES {
        Err(CanonCapExceeded(n))
    } else {
        Ok(())
    }
}

pub fn canonical_labelling(g: &Graph) -> Result<Labelling, CanonCapExceeded> {
    let n = g.n();
    check_cap(n)?;
    if n == 0 {
        return Ok(Labelling {
            form: CanonicalForm { n: 0, code: 0 },
            label: Vec::new(),
        });
    }
    let rows = g.rows();
    let mut search = Search {
        rows,
        n,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let mut cells = vec![(0..n).collect::<Vec<_>>()];
    refine(rows, &mut cells);
    let mut path = Vec::new();
    search.visit(cells, &mut path);
    let best = search.best.expect("at least one leaf");
    Ok(Labelling {
        form: CanonicalForm {
            n: n as u8,
            code: best.code,
        },
        label: best.label,
    })
}

/// Packs the relabelled upper triangle, column by column.
fn encode(rows: &[u64], label: &[usize]) -> u128 {
    let n = rows.len();
    let mut inverse = vec![0usize; n];
    for (v, &l) in label.iter().enumerate() {
        inverse[l] = v;
    }
    let mut code = 0u128;
    let mut idx = 0;
    for j in 1..n {
        let vj = inverse[j];
        for &vi in inverse.iter().take(j) {
            if rows[vi] >> vj & 1 == 1 {
                code |= 1 << idx;
            }
            idx += 1;
        }
    }
    code
}

fn mask_of(cell: &[usize]) -> u64 {
    cell.iter().fold(0, |m, &v| m | 1 << v)
}

/// Refines an ordered partition until every cell is equitable with respect
/// to every other cell. Splits keep neighbour-count order, so the result is
/// label-invariant.
fn refine(rows: &[u64], cells: &mut Vec<Vec<usize>>) {
    'again: loop {
        for si in 0..cells.len() {
            let splitter = mask_of(&cells[si]);
            for ci in 0..cells.len() {
                if cells[ci].len() < 2 {
                    continue;
                }
                let count = |v: usize| (rows[v] & splitter).count_ones();
                let c0 = count(cells[ci][0]);
                if cells[ci].iter().all(|&v| count(v) == c0) {
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> = cells[ci].iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut parts: Vec<Vec<usize>> = Vec::new();
                let mut last = None;
                for (k, v) in keyed {
                    if last != Some(k) {
                        parts.push(Vec::new());
                        last = Some(k);
                    }
                    parts.last_mut().unwrap().push(v);
                }
                cells.splice(ci..=ci, parts);
                continue 'again;
            }
        }
        return;
    }
}

struct Leaf {
    code: u128,
    label: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

enum Outcome {
    Continue,
    /// Abandon every node deeper than the given depth.
    Unwind(usize),
}

impl Search<'_> {
    fn visit(&mut self, cells: Vec<Vec<usize>>, path: &mut Vec<usize>) -> Outcome {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.leaf(&cells, path);
        };
        let depth = path.len();
        let candidates = cells[target].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &candidates {
            if !explored.is_empty() {
                let orbit = self.stabiliser_orbits(path);
                if explored.iter().any(|&e| orbit[e] == orbit[v]) {
                    continue;
                }
            }
            explored.push(v);
            let mut child = cells.clone();
            let rest: Vec<usize> = candidates.iter().copied().filter(|&w| w != v).collect();
            child.splice(target..=target, [vec![v], rest]);
            refine(self.rows, &mut child);
            path.push(v);
            let outcome = self.visit(child, path);
            path.pop();
            if let Outcome::Unwind(d) = outcome {
                if d < depth {
                    return outcome;
                }
            }
        }
        Outcome::Continue
    }

    fn leaf(&mut self, cells: &[Vec<usize>], path: &[usize]) -> Outcome {
        let mut label = vec![0usize; self.n];
        for (pos, cell) in cells.iter().enumerate() {
            label[cell[0]] = pos;
        }
        let code = encode(self.rows, &label);
        let leaf = Leaf {
            code,
            label,
            path: path.to_vec(),
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                code,
                label: leaf.label.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return Outcome::Continue;
        };
        if code == first.code {
            let gamma = automorphism(&first.label, &leaf.label);
            let divergence = common_prefix(&first.path, &leaf.path);
            let maps_prefix = (0..=divergence.min(leaf.path.len().saturating_sub(1)))
                .all(|i| i < first.path.len() && gamma[first.path[i]] == leaf.path[i]);
            self.generators.push(gamma);
            if maps_prefix {
                return Outcome::Unwind(divergence);
            }
            return Outcome::Continue;
        }
        let best = self.best.as_ref().unwrap();
        match code.cmp(&best.code) {
            Ordering::Greater => self.best = Some(leaf),
            Ordering::Equal => {
                let gamma = automorphism(&best.label, &leaf.label);
                self.generators.push(gamma);
            }
            Ordering::Less => {}
        }
        Outcome::Continue
    }

    /// Orbit representatives under the generators that fix `prefix` pointwise.
    fn stabiliser_orbits(&self, prefix: &[usize]) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for gamma in &self.generators {
            if prefix.iter().any(|&p| gamma[p] != p) {
                continue;
            }
            for (v, &w) in gamma.iter().enumerate() {
                let (a, b) = (find(&mut parent, v), find(&mut parent, w));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        (0..self.n).map(|v| find(&mut parent, v)).collect()
    }
}

/// The permutation `v -> label_a^{-1}(label_b(v))`; an automorphism when both
/// labellings produce the same graph.
fn automorphism(label_a: &[usize], label_b: &[usize]) -> Vec<usize> {
    let mut inv_a = vec![0usize; label_a.len()];
    for (v, &l) in label_a.iter().enumerate() {
        inv_a[l] = v;
    }
    // gamma maps the vertex at position p of leaf a to the vertex at position p of leaf b.
    let mut inv_b = vec![0usize; label_b.len()];
    for (v, &l) in label_b.iter().enumerate() {
        inv_b[l] = v;
    }
    let mut gamma = vec![0usize; label_a.len()];
    for p in 0..label_a.len() {
        gamma[inv_a[p]] = inv_b[p];
    }
    gamma
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_permutations(n: usize) -> Vec<Vec<usize>> {
        fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
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

    /// Brute-force isomorphism: try every bijection.
    fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
        g.n() == h.n() && all_permutations(g.n()).iter().any(|p| &g.permute(p) == h)
    }

    fn graph_from_mask(n: usize, mask: u32) -> Graph {
        let mut edges = Vec::new();
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if mask >> idx & 1 == 1 {
                    edges.push((i, j));
                }
                idx += 1;
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn relabelled_path_has_same_form() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let b = Graph::from_edges(3, &[(1, 0), (0, 2)]).unwrap();
        assert_eq!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn c4_and_p4_differ() {
        assert_ne!(
            canonical_form(&Graph::cycle(4)).unwrap(),
            canonical_form(&Graph::path(4)).unwrap()
        );
    }

    #[test]
    fn eleven_classes_on_four_vertices() {
        // Oracle: dedupe all 64 labelled graphs by brute-force isomorphism.
        let graphs: Vec<Graph> = (0..64).map(|m| graph_from_mask(4, m)).collect();
        let mut reps: Vec<&Graph> = Vec::new();
        for g in &graphs {
            if !reps.iter().any(|r| brute_isomorphic(r, g)) {
                reps.push(g);
            }
        }
        assert_eq!(reps.len(), 11);
        let mut forms: Vec<CanonicalForm> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        forms.sort();
        forms.dedup();
        assert_eq!(forms.len(), 11);
    }

    #[test]
    fn form_agrees_with_brute_force_on_five_vertices() {
        let graphs: Vec<Graph> = (0..1024).map(|m| graph_from_mask(5, m)).collect();
        let forms: Vec<CanonicalForm> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        for i in (0..1024).step_by(37) {
            for j in (0..1024).step_by(11) {
                assert_eq!(
                    forms[i] == forms[j],
                    brute_isomorphic(&graphs[i], &graphs[j]),
                    "masks {i} {j}"
                );
            }
        }
        let mut distinct = forms.clone();
        distinct.sort();
        distinct.dedup();
        assert_eq!(distinct.len(), 34);
    }

    #[test]
    fn isomorphism_examples() {
        let c5 = Graph::cycle(5);
        let relabelled = c5.permute(&[3, 0, 4, 1, 2]);
        assert!(are_isomorphic(&c5, &relabelled).unwrap());
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!are_isomorphic(&star, &Graph::path(4)).unwrap());
        let k22 = Graph::empty(2).join(&Graph::empty(2)).unwrap();
        assert!(brute_isomorphic(&k22, &Graph::cycle(4)));
        assert!(are_isomorphic(&k22, &Graph::cycle(4)).unwrap());
    }

    #[test]
    fn canonical_graph_is_isomorphic_to_input() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4)]).unwrap();
        let l = canonical_labelling(&g).unwrap();
        assert_eq!(g.permute(&l.label), l.form.to_graph());
    }

    #[test]
    fn symmetric_graphs_are_fast_and_consistent() {
        for n in [12, 16] {
            let empty = Graph::empty(n);
            let full = Graph::complete(n);
            assert_eq!(canonical_form(&empty).unwrap().to_graph(), empty);
            assert_eq!(canonical_form(&full).unwrap().to_graph(), full);
        }
        let matching = Graph::from_edges(16, &(0..8).map(|i| (2 * i, 2 * i + 1)).collect::<Vec<_>>()).unwrap();
        let shuffled = matching.permute(&[5, 9, 0, 14, 2, 7, 11, 3, 15, 1, 6, 12, 4, 10, 8, 13]);
        assert!(are_isomorphic(&matching, &shuffled).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(canonical_form(&Graph::empty(17)), Err(CanonCapExceeded(17)));
    }
}
