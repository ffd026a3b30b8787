//! Exact decision procedures for the forbidden patterns.

use crate::family::{ForbiddenFamily, Pattern};
use crate::graph::Graph;

// ---------------------------------------------------------------------------
// Cliques: branch and bound with a greedy-colouring bound on bitset candidates.
// ---------------------------------------------------------------------------

trait Bits: Clone {
    fn is_empty(&self) -> bool;
    fn first(&self) -> Option<usize>;
    fn remove(&mut self, v: usize);
    fn and(&self, other: &Self) -> Self;
    fn and_not(&self, other: &Self) -> Self;
}

impl Bits for u64 {
    fn is_empty(&self) -> bool {
        *self == 0
    }
    fn first(&self) -> Option<usize> {
        (*self != 0).then(|| self.trailing_zeros() as usize)
    }
    fn remove(&mut self, v: usize) {
        *self &= !(1 << v);
    }
    fn and(&self, other: &Self) -> Self {
        self & other
    }
    fn and_not(&self, other: &Self) -> Self {
        self & !other
    }
}

#[derive(Clone)]
struct Wide(Vec<u64>);

impl Bits for Wide {
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }
    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }
    fn and(&self, other: &Self) -> Self {
        Wide(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }
    fn and_not(&self, other: &Self) -> Self {
        Wide(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }
}

struct CliqueSearch<'a, S: Bits> {
    rows: &'a [S],
    best: usize,
    stop: usize,
}

impl<S: Bits> CliqueSearch<'_, S> {
    /// Greedy sequential colouring; returns vertices in colour order with the
    /// colour of each, so a suffix starting at position `i` has at most
    /// `colour[i]` pairwise-adjacent members.
    fn colour_order(&self, cand: &S) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::new();
        let mut colours = Vec::new();
        let mut uncoloured = cand.clone();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                uncoloured.remove(v);
                q = q.and_not(&self.rows[v]);
                order.push(v);
                colours.push(colour);
            }
        }
        (order, colours)
    }

    fn expand(&mut self, mut cand: S, size: usize) {
        let (order, colours) = self.colour_order(&cand);
        for i in (0..order.len()).rev() {
            if self.best >= self.stop || size + colours[i] <= self.best {
                return;
            }
            let v = order[i];
            let next = cand.and(&self.rows[v]);
            if next.is_empty() {
                self.best = self.best.max(size + 1);
            } else {
                self.expand(next, size + 1);
            }
            cand.remove(v);
        }
    }
}

/// Size of the largest clique, stopping early once `stop` is reached.
fn clique_search(g: &Graph, stop: usize) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    if n <= 64 {
        let rows = g.rows();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut search = CliqueSearch { rows, best: 0, stop };
        search.expand(all, 0);
        search.best
    } else {
        let rows: Vec<Wide> = (0..n).map(|v| Wide(g.row_words(v).to_vec())).collect();
        let mut all = Wide(vec![0; n.div_ceil(64)]);
        for v in 0..n {
            all.0[v / 64] |= 1 << (v % 64);
        }
        let mut search = CliqueSearch {
            rows: &rows,
            best: 0,
            stop,
        };
        search.expand(all, 0);
        search.best
    }
}

pub fn contains_clique(g: &Graph, r: usize) -> bool {
    match r {
        0 => true,
        1 => g.n() >= 1,
        2 => g.edge_count() > 0,
        _ => clique_search(g, r) >= r,
    }
}

/// The clique number ω(g).
pub fn clique_number(g: &Graph) -> usize {
    clique_search(g, usize::MAX)
}

/// α(g) = ω(complement of g).
pub fn independence_number(g: &Graph) -> usize {
    clique_number(&g.complement())
}

// ---------------------------------------------------------------------------
// Matchings.
// ---------------------------------------------------------------------------

/// Orders up to this use the exhaustive branch; larger graphs use blossoms.
const EXHAUSTIVE_MATCHING_MAX: usize = 8;

pub fn max_matching_size(g: &Graph) -> usize {
    if g.n() <= EXHAUSTIVE_MATCHING_MAX {
        matching_exhaustive(g)
    } else {
        matching_blossom(g)
    }
}

/// Branches on the smallest live vertex: leave it unmatched or match it to
/// each live neighbour. Requires `n <= 64`.
pub fn matching_exhaustive(g: &Graph) -> usize {
    fn go(rows: &[u64], live: u64) -> usize {
        let Some(v) = live.first() else { return 0 };
        let rest = live & !(1 << v);
        let mut best = go(rows, rest);
        let mut nbrs = rows[v] & rest;
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            best = best.max(1 + go(rows, rest & !(1 << u)));
            if 2 * (best) >= live.count_ones() as usize - 1 {
                break;
            }
        }
        best
    }
    let n = g.n();
    if n == 0 {
        return 0;
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    go(g.rows(), all)
}

/// Edmonds' blossom algorithm: repeated BFS for augmenting paths from each
/// exposed vertex, contracting odd cycles through their base.
pub fn matching_blossom(g: &Graph) -> usize {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut mate: Vec<Option<usize>> = vec![None; n];

    // Cheap greedy start.
    for v in 0..n {
        if mate[v].is_none() {
            if let Some(&u) = adj[v].iter().find(|&&u| mate[u].is_none()) {
                mate[v] = Some(u);
                mate[u] = Some(v);
            }
        }
    }

    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    let mut blossom = vec![false; n];
    let mut queue = std::collections::VecDeque::new();

    let lca = |mate: &[Option<usize>], base: &[usize], parent: &[Option<usize>], mut a: usize, mut b: usize| {
        let mut seen = vec![false; n];
        loop {
            a = base[a];
            seen[a] = true;
            match mate[a] {
                None => break,
                Some(m) => a = parent[m].expect("matched vertex on alternating path has parent"),
            }
        }
        loop {
            b = base[b];
            if seen[b] {
                return b;
            }
            b = parent[mate[b].expect("walk stays on the tree")].expect("tree parent");
        }
    };

    fn mark_path(
        mate: &[Option<usize>],
        base: &[usize],
        parent: &mut [Option<usize>],
        blossom: &mut [bool],
        mut v: usize,
        b: usize,
        mut child: usize,
    ) {
        while base[v] != b {
            let m = mate[v].expect("blossom path vertices are matched");
            blossom[base[v]] = true;
            blossom[base[m]] = true;
            parent[v] = Some(child);
            child = m;
            v = parent[m].expect("blossom path continues");
        }
    }

    for root in 0..n {
        if mate[root].is_some() {
            continue;
        }
        parent.iter_mut().for_each(|p| *p = None);
        base.iter_mut().enumerate().for_each(|(i, b)| *b = i);
        used.iter_mut().for_each(|u| *u = false);
        queue.clear();
        used[root] = true;
        queue.push_back(root);
        let mut augment_end = None;
        'bfs: while let Some(v) = queue.pop_front() {
            for &to in &adj[v] {
                if base[v] == base[to] || mate[v] == Some(to) {
                    continue;
                }
                if to == root || mate[to].is_some_and(|m| parent[m].is_some()) {
                    let cur = lca(&mate, &base, &parent, v, to);
                    blossom.iter_mut().for_each(|b| *b = false);
                    mark_path(&mate, &base, &mut parent, &mut blossom, v, cur, to);
                    mark_path(&mate, &base, &mut parent, &mut blossom, to, cur, v);
                    for i in 0..n {
                        if blossom[base[i]] {
                            base[i] = cur;
                            if !used[i] {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[to].is_none() {
                    parent[to] = Some(v);
                    match mate[to] {
                        None => {
                            augment_end = Some(to);
                            break 'bfs;
                        }
                        Some(m) => {
                            used[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
        if let Some(mut v) = augment_end {
            while let Some(pv) = parent[v] {
                let next = mate[pv];
                mate[v] = Some(pv);
                mate[pv] = Some(v);
                match next {
                    Some(nv) => v = nv,
                    None => break,
                }
            }
        }
    }
    mate.iter().filter(|m| m.is_some()).count() / 2
}

// ---------------------------------------------------------------------------
// Star forests.
// ---------------------------------------------------------------------------

/// Whether `g` contains `count` vertex-disjoint copies of `S_l`.
///
/// Centres are chosen by backtracking; for a fixed centre set the leaves are
/// an assignment problem (each centre needs `l` private neighbours outside the
/// centre set), solved exactly by augmenting paths. Vertices with identical
/// neighbourhoods (open or closed twins) are interchangeable as centres, so
/// each twin class contributes only its first few members.
pub fn contains_star_forest(g: &Graph, count: usize, l: usize) -> bool {
    let n = g.n();
    if count == 0 {
        return true;
    }
    if count * (l + 1) > n {
        return false;
    }
    if l == 0 {
        return true;
    }
    let mut candidates: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= l).collect();
    if candidates.len() < count {
        return false;
    }
    if count == 1 {
        return true;
    }
    if peel_bound(g, l) < count {
        return false;
    }
    candidates.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in &candidates {
        match classes.iter_mut().find(|c| are_twins(g, c[0], v)) {
            Some(c) => c.push(v),
            None => classes.push(vec![v]),
        }
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut centres = Vec::with_capacity(count);
    choose_centres(&adj, &classes, 0, count, l, &mut centres)
}

/// Size of a set `S` found by repeatedly deleting a maximum-degree vertex
/// until every degree is below `l`. Each `S_l` meets `S` (its centre would
/// otherwise keep `l` neighbours), so disjoint stars number at most `|S|`.
fn peel_bound(g: &Graph, l: usize) -> usize {
    let n = g.n();
    let mut degree = g.degrees();
    let mut alive = vec![true; n];
    let mut removed = 0;
    loop {
        let Some(v) = (0..n).filter(|&v| alive[v]).max_by_key(|&v| (degree[v], std::cmp::Reverse(v))) else {
            return removed;
        };
        if degree[v] < l {
            return removed;
        }
        alive[v] = false;
        removed += 1;
        for w in g.neighbors(v) {
            degree[w] -= 1;
        }
    }
}

fn are_twins(g: &Graph, u: usize, v: usize) -> bool {
    let mut nu = g.neighborhood(u);
    let mut nv = g.neighborhood(v);
    nu.remove(v);
    nv.remove(u);
    nu == nv
}

fn choose_centres(
    adj: &[Vec<usize>],
    classes: &[Vec<usize>],
    from: usize,
    remaining: usize,
    l: usize,
    centres: &mut Vec<usize>,
) -> bool {
    if remaining == 0 {
        return true;
    }
    let available: usize = classes[from..].iter().map(Vec::len).sum();
    if available < remaining {
        return false;
    }
    for ci in from..classes.len() {
        let class = &classes[ci];
        let max_take = class.len().min(remaining);
        for take in (1..=max_take).rev() {
            let before = centres.len();
            centres.extend_from_slice(&class[..take]);
            let ok = leaves_assignable(adj, centres, l)
                && choose_centres(adj, classes, ci + 1, remaining - take, l, centres);
            centres.truncate(before);
            if ok {
                return true;
            }
        }
    }
    false
}

/// Can every centre receive `l` distinct leaves from outside the centre set?
fn leaves_assignable(adj: &[Vec<usize>], centres: &[usize], l: usize) -> bool {
    let n = adj.len();
    let mut is_centre = vec![false; n];
    for &c in centres {
        is_centre[c] = true;
    }
    // Slot i belongs to centre centres[i / l].
    let slots = centres.len() * l;
    let mut owner: Vec<Option<usize>> = vec![None; n];
    let mut seen = vec![0usize; n];
    let mut stamp = 0;

    fn try_slot(
        slot: usize,
        l: usize,
        centres: &[usize],
        adj: &[Vec<usize>],
        is_centre: &[bool],
        owner: &mut [Option<usize>],
        seen: &mut [usize],
        stamp: usize,
    ) -> bool {
        let c = centres[slot / l];
        for &leaf in &adj[c] {
            if is_centre[leaf] || seen[leaf] == stamp {
                continue;
            }
            seen[leaf] = stamp;
            let free = match owner[leaf] {
                None => true,
                Some(other) => try_slot(other, l, centres, adj, is_centre, owner, seen, stamp),
            };
            if free {
                owner[leaf] = Some(slot);
                return true;
            }
        }
        false
    }

    for slot in 0..slots {
        stamp += 1;
        if !try_slot(slot, l, centres, adj, &is_centre, &mut owner, &mut seen, stamp) {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Families.
// ---------------------------------------------------------------------------

pub fn contains_pattern(g: &Graph, p: Pattern) -> bool {
    match p {
        Pattern::Clique(r) => contains_clique(g, r),
        Pattern::Matching(s) => max_matching_size(g) >= s,
        Pattern::StarForest { count: 1, l } => g.max_degree() >= l,
        Pattern::StarForest { count, l } => contains_star_forest(g, count, l),
    }
}

pub fn is_family_free(g: &Graph, f: &ForbiddenFamily) -> bool {
    f.patterns().iter().all(|&p| !contains_pattern(g, p))
}
