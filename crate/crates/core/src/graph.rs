//! Simple undirected graphs on dense vertex indices `0..n` with bitset rows.

use std::fmt;
use std::fmt::Write as _;

use serde::{Serialize, Serializer};

use crate::error::{parse_err, Error, Result};

const WORD: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A subset of `0..universe`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; words_for(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = VertexSet::new(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    /// Builds a set from members, rejecting any member outside `0..universe`.
    pub fn from_members<I: IntoIterator<Item = usize>>(universe: usize, members: I) -> Result<Self> {
        let mut s = VertexSet::new(universe);
        for v in members {
            if v >= universe {
                return Err(Error::VertexOutOfRange { vertex: v, n: universe });
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.universe, "vertex {v} outside universe {}", self.universe);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] & (1 << (v % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        iter_bits(&self.words)
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(i * WORD + b)
        })
    })
}

/// Simple undirected graph. Adjacency is stored as one bitset row per vertex.
///
/// Graphs are immutable once built; use [`GraphBuilder`] to construct one.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        let stride = words_for(n);
        Graph {
            n,
            stride,
            bits: vec![0; n * stride],
        }
    }

    /// Graph on at most 64 vertices from single-word adjacency rows.
    pub(crate) fn from_rows(n: usize, rows: &[u64]) -> Self {
        assert!(n <= WORD && rows.len() >= n);
        Graph {
            n,
            stride: words_for(n),
            bits: rows[..n].to_vec(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.stride..(v + 1) * self.stride]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.row(u)[v / WORD] & (1 << (v % WORD)) != 0
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Parses the `adjlist` text format: a line holding `n`, then one `u v` line per edge
    /// with `u < v`.
    pub fn from_adjlist(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, first) = lines.next().ok_or_else(|| parse_err(1, "missing vertex count"))?;
        let n: usize = first
            .trim()
            .parse()
            .map_err(|_| parse_err(1, format!("bad vertex count {first:?}")))?;
        let mut b = GraphBuilder::new(n);
        for (i, line) in lines {
            let lineno = i + 1;
            let mut parts = line.split_whitespace();
            let mut next = |what: &str| -> Result<usize> {
                let tok = parts
                    .next()
                    .ok_or_else(|| parse_err(lineno, format!("missing {what}")))?;
                tok.parse()
                    .map_err(|_| parse_err(lineno, format!("bad {what} {tok:?}")))
            };
            let u = next("first endpoint")?;
            let v = next("second endpoint")?;
            if parts.next().is_some() {
                return Err(parse_err(lineno, "trailing tokens"));
            }
            if u == v {
                return Err(parse_err(lineno, format!("loop at vertex {u}")));
            }
            if u > v {
                return Err(parse_err(lineno, format!("edge {u} {v} not written with u < v")));
            }
            if u >= n || v >= n {
                return Err(parse_err(lineno, format!("edge {u} {v} out of range for n = {n}")));
            }
            if b.has_edge(u, v) {
                return Err(parse_err(lineno, format!("duplicate edge {u} {v}")));
            }
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn to_adjlist(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Accumulates edges for a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    graph: Graph,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder { graph: Graph::empty(n) }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        let n = self.graph.n;
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::InvalidParams(format!("loop at vertex {u}")));
        }
        let s = self.graph.stride;
        self.graph.bits[u * s + v / WORD] |= 1 << (v % WORD);
        self.graph.bits[v * s + u / WORD] |= 1 << (u % WORD);
        Ok(self)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.graph.has_edge(u, v)
    }

    pub fn build(self) -> Graph {
        self.graph
    }
}

/// Builds a graph from an edge list; panics on invalid edges. Intended for literals.
pub fn graph_from_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
    let mut b = GraphBuilder::new(n);
    for &(u, v) in edges {
        b.add_edge(u, v).expect("invalid edge");
    }
    b.build()
}

pub fn complete_graph(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            b.add_edge(u, v).expect("in range");
        }
    }
    b.build()
}

/// Subgraph induced by `s`. Vertex `i` of the result is `labels[i]` in `g`, with labels ascending.
pub fn induced_subgraph(g: &Graph, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
    let labels = s.to_vec();
    if let Some(&bad) = labels.iter().find(|&&v| v >= g.order()) {
        return Err(Error::VertexOutOfRange {
            vertex: bad,
            n: g.order(),
        });
    }
    let mut b = GraphBuilder::new(labels.len());
    for (i, &u) in labels.iter().enumerate() {
        for (j, &v) in labels.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                b.add_edge(i, j)?;
            }
        }
    }
    Ok((b.build(), labels))
}

/// `g` with vertex `v` deleted; remaining vertices keep their relative order.
pub(crate) fn delete_vertex(g: &Graph, v: usize) -> Graph {
    let mut s = g.vertices();
    s.remove(v);
    induced_subgraph(g, &s).expect("subset of V(g)").0
}

/// Connected components, sorted by smallest member.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut comp = VertexSet::new(n);
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            comp.insert(v);
            for w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() <= 1
}

/// Checks that `parts` are pairwise disjoint and cover `0..n`.
pub(crate) fn check_partition(n: usize, parts: &[VertexSet]) -> Result<()> {
    let mut seen = VertexSet::new(n);
    for (i, p) in parts.iter().enumerate() {
        if let Some(bad) = p.iter().find(|&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: bad, n });
        }
        for v in p.iter() {
            if seen.contains(v) {
                return Err(Error::NotPartition(format!("vertex {v} repeated (part {i})")));
            }
            seen.insert(v);
        }
    }
    if seen.len() != n {
        let missing = (0..n).find(|&v| !seen.contains(v)).unwrap_or_default();
        return Err(Error::NotPartition(format!("vertex {missing} not covered")));
    }
    Ok(())
}
