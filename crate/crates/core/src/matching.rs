//! Maximum matching by Edmonds' blossom algorithm, plus an exhaustive oracle.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{delete_vertex, Graph};

const NONE: usize = usize::MAX;

/// Largest order accepted by [`brute_force_matching_number`].
pub const BRUTE_FORCE_LIMIT: usize = 14;

/// A set of vertex-disjoint edges, each stored as `(u, v)` with `u < v`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Matching {
    pub edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(edges: Vec<(usize, usize)>) -> Self {
        let mut edges: Vec<_> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        Matching { edges }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Whether every pair is an edge of `g` and no vertex is used twice.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.order()];
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) || used[u] || used[v] {
                return false;
            }
            used[u] = true;
            used[v] = true;
        }
        true
    }
}

/// Scratch state for augmenting-path search with blossom contraction.
struct Blossom<'g> {
    g: &'g Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    lca_mark: Vec<bool>,
    queue: VecDeque<usize>,
    size: usize,
}

impl<'g> Blossom<'g> {
    fn new(g: &'g Graph) -> Self {
        let n = g.order();
        let mut b = Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            lca_mark: vec![false; n],
            queue: VecDeque::with_capacity(n),
            size: 0,
        };
        b.greedy();
        b
    }

    fn greedy(&mut self) {
        for u in 0..self.g.order() {
            if self.mate[u] != NONE {
                continue;
            }
            if let Some(v) = self.g.neighbors(u).find(|&v| self.mate[v] == NONE) {
                self.mate[u] = v;
                self.mate[v] = u;
                self.size += 1;
            }
        }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.lca_mark.fill(false);
        loop {
            a = self.base[a];
            self.lca_mark[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.lca_mark[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    /// Searches for an augmenting path from the exposed vertex `root`; returns its other end.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.order();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            let g = self.g;
            for to in g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
        self.size += 1;
    }

    /// Augments until the matching reaches `target` edges or is maximum.
    ///
    /// One pass over exposed roots suffices: a vertex with no augmenting path
    /// never gains one after later augmentations.
    fn run(&mut self, target: usize) {
        for root in 0..self.g.order() {
            if self.size >= target {
                return;
            }
            if self.mate[root] != NONE {
                continue;
            }
            if let Some(end) = self.find_path(root) {
                self.augment(end);
            }
        }
    }

    fn into_matching(self) -> Matching {
        let edges = (0..self.mate.len())
            .filter(|&u| self.mate[u] != NONE && u < self.mate[u])
            .map(|u| (u, self.mate[u]))
            .collect();
        Matching { edges }
    }
}

/// A maximum-cardinality matching of `g`.
pub fn maximum_matching(g: &Graph) -> Matching {
    let mut b = Blossom::new(g);
    b.run(usize::MAX);
    b.into_matching()
}

pub fn matching_number(g: &Graph) -> usize {
    let mut b = Blossom::new(g);
    b.run(usize::MAX);
    b.size
}

/// Whether `g` has a matching with at least `k` edges. Stops augmenting once `k` is reached.
pub fn has_matching_of_size(g: &Graph, k: usize) -> bool {
    if k == 0 {
        return true;
    }
    if 2 * k > g.order() || g.edge_count() < k {
        return false;
    }
    let mut b = Blossom::new(g);
    b.run(k);
    b.size >= k
}

/// Matching number by exhaustive recursion over all matchings. Test oracle; `g.order() <= 14`.
pub fn brute_force_matching_number(g: &Graph) -> Result<usize> {
    let n = g.order();
    if n > BRUTE_FORCE_LIMIT {
        return Err(Error::SizeLimit {
            what: "brute-force matching order",
            limit: BRUTE_FORCE_LIMIT,
            actual: n,
        });
    }
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).fold(0u32, |m, w| m | (1 << w))).collect();

    fn best(free: u32, adj: &[u32]) -> usize {
        if free == 0 {
            return 0;
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        // v left exposed
        let mut top = best(rest, adj);
        let mut cand = adj[v] & rest;
        while cand != 0 {
            let u = cand.trailing_zeros();
            cand &= cand - 1;
            top = top.max(1 + best(rest & !(1 << u), adj));
        }
        top
    }

    Ok(best(((1u64 << n) - 1) as u32, &adj))
}

/// Whether `g` has odd order and `g - v` has a perfect matching for every vertex `v`.
pub fn is_factor_critical(g: &Graph) -> bool {
    let n = g.order();
    if n.is_multiple_of(2) {
        return false;
    }
    (0..n).all(|v| matching_number(&delete_vertex(g, v)) == (n - 1) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, graph_from_edges, is_connected};

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        graph_from_edges(n, &edges)
    }

    fn star(m: usize) -> Graph {
        let edges: Vec<_> = (1..=m).map(|i| (0, i)).collect();
        graph_from_edges(m + 1, &edges)
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        graph_from_edges(10, &e)
    }

    #[test]
    fn examples() {
        let k4 = maximum_matching(&complete_graph(4));
        assert_eq!(k4.len(), 2);
        assert!(k4.is_valid_in(&complete_graph(4)));
        assert_eq!(matching_number(&graph_from_edges(3, &[(0, 1), (1, 2)])), 1);
        assert_eq!(matching_number(&complete_graph(5)), 2);
        assert_eq!(matching_number(&Graph::empty(6)), 0);
        for m in 1..10 {
            assert_eq!(matching_number(&star(m)), 1);
        }
    }

    #[test]
    fn petersen_has_perfect_matching() {
        let p = petersen();
        assert_eq!(brute_force_matching_number(&p).unwrap(), 5);
        let m = maximum_matching(&p);
        assert_eq!(m.len(), 5);
        assert!(m.is_valid_in(&p));
    }

    #[test]
    fn brute_force_examples_and_guard() {
        assert_eq!(brute_force_matching_number(&cycle(5)).unwrap(), 2);
        assert_eq!(brute_force_matching_number(&complete_graph(6)).unwrap(), 3);
        assert!(matches!(
            brute_force_matching_number(&Graph::empty(15)),
            Err(Error::SizeLimit {
                limit: 14,
                actual: 15,
                ..
            })
        ));
    }

    #[test]
    fn complete_graphs() {
        for n in 0..=12 {
            assert_eq!(matching_number(&complete_graph(n)), n / 2);
        }
    }

    #[test]
    fn blossom_needed() {
        // triangle with a pendant path: greedy picks (0,1), augmenting through the odd cycle
        let g = graph_from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (0, 4), (1, 5)]);
        assert_eq!(matching_number(&g), 3);
    }

    #[test]
    fn early_exit() {
        let g = complete_graph(7);
        assert!(has_matching_of_size(&g, 3));
        assert!(!has_matching_of_size(&g, 4));
        assert!(has_matching_of_size(&Graph::empty(0), 0));
        assert!(!has_matching_of_size(&star(5), 2));
    }

    #[test]
    fn factor_critical() {
        assert!(is_factor_critical(&complete_graph(3)));
        assert!(!is_factor_critical(&complete_graph(4)));
        assert!(is_factor_critical(&cycle(5)));
        assert!(is_factor_critical(&complete_graph(1)));
        assert!(!is_factor_critical(&Graph::empty(0)));
        assert!(!is_factor_critical(&graph_from_edges(3, &[(0, 1), (1, 2)])));
        for g in [complete_graph(3), cycle(5), cycle(7), petersen()] {
            if is_factor_critical(&g) {
                assert!(is_connected(&g) && g.order() % 2 == 1);
            }
        }
    }
}
