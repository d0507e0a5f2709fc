//! Gallai–Edmonds decomposition and a clause-by-clause verifier for the structure theorem.
//!
//! `D(G)` is the set of vertices missed by at least one maximum matching, `A(G)` the
//! vertices outside `D(G)` with a neighbour in it, and `C(G)` everything else. The
//! decomposition is computed straight from that definition: `v` belongs to `D(G)` exactly
//! when deleting it leaves the matching number unchanged.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    check_partition, connected_components, delete_vertex, induced_subgraph, Graph, GraphBuilder, VertexSet,
};
use crate::matching::{is_factor_critical, matching_number};

/// Largest `|A(G)|` for which the surplus clause is checked by subset enumeration.
pub const SURPLUS_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeDecomposition {
    /// Vertex sets of the components of `G[D(G)]`, sorted by smallest member.
    pub d_components: Vec<VertexSet>,
    pub a: VertexSet,
    pub c: VertexSet,
}

impl GeDecomposition {
    pub fn d(&self, n: usize) -> VertexSet {
        let mut d = VertexSet::new(n);
        for comp in &self.d_components {
            d.union_with(comp);
        }
        d
    }

    fn parts(&self) -> Vec<VertexSet> {
        let mut parts = self.d_components.clone();
        parts.push(self.a.clone());
        parts.push(self.c.clone());
        parts
    }
}

pub fn decompose(g: &Graph) -> GeDecomposition {
    let n = g.order();
    let nu = matching_number(g);
    let mut d = VertexSet::new(n);
    for v in 0..n {
        if matching_number(&delete_vertex(g, v)) == nu {
            d.insert(v);
        }
    }
    let mut a = VertexSet::new(n);
    let mut c = VertexSet::new(n);
    for v in (0..n).filter(|&v| !d.contains(v)) {
        if g.neighbors(v).any(|w| d.contains(w)) {
            a.insert(v);
        } else {
            c.insert(v);
        }
    }
    let (gd, labels) = induced_subgraph(g, &d).expect("D is a subset of V");
    let d_components = connected_components(&gd)
        .into_iter()
        .map(|comp| VertexSet::from_members(n, comp.iter().map(|i| labels[i])).expect("in range"))
        .collect();
    GeDecomposition { d_components, a, c }
}

/// One boolean per clause of the Gallai–Edmonds theorem, plus both sides of clause (e).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    /// Each component of `G[D]` is factor-critical.
    pub a: bool,
    /// `G[C]` has a perfect matching.
    pub b: bool,
    /// Every nonempty `S ⊆ A` has more neighbouring `D`-components than `|S|`.
    pub c: bool,
    /// Near-perfect matchings of the `D`-components, a perfect matching of `C`, and a
    /// matching of `A` into distinct `D`-components combine into a maximum matching.
    pub d: bool,
    /// `ν(G) = (|V| - ω(D) + |A|) / 2`.
    pub e: bool,
    pub matching_number: usize,
    pub formula_value: f64,
}

impl VerificationReport {
    pub fn all(&self) -> bool {
        self.a && self.b && self.c && self.d && self.e
    }
}

/// Bipartite graph between `A` (vertices `0..|A|`) and the contracted `D`-components
/// (vertices `|A|..|A|+ω`), with each `A`-vertex's set of neighbouring components.
fn contracted_bipartite(g: &Graph, ged: &GeDecomposition) -> (Vec<VertexSet>, Graph) {
    let a: Vec<usize> = ged.a.to_vec();
    let k = ged.d_components.len();
    let mut b = GraphBuilder::new(a.len() + k);
    let mut reach = Vec::with_capacity(a.len());
    for (i, &v) in a.iter().enumerate() {
        let mut comps = VertexSet::new(k);
        for (j, comp) in ged.d_components.iter().enumerate() {
            if g.neighbors(v).any(|w| comp.contains(w)) {
                b.add_edge(i, a.len() + j).expect("in range");
                comps.insert(j);
            }
        }
        reach.push(comps);
    }
    (reach, b.build())
}

fn positive_surplus(reach: &[VertexSet], components: usize) -> Result<bool> {
    let k = reach.len();
    if k > SURPLUS_LIMIT {
        return Err(Error::SizeLimit {
            what: "surplus check |A|",
            limit: SURPLUS_LIMIT,
            actual: k,
        });
    }
    for subset in 1u32..(1 << k) {
        let mut nbhd = VertexSet::new(components);
        let mut bits = subset;
        while bits != 0 {
            nbhd.union_with(&reach[bits.trailing_zeros() as usize]);
            bits &= bits - 1;
        }
        if nbhd.len() <= subset.count_ones() as usize {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks clauses (a)–(e) of the Gallai–Edmonds theorem for `ged` on `g`.
pub fn verify_decomposition(g: &Graph, ged: &GeDecomposition) -> Result<VerificationReport> {
    let n = g.order();
    check_partition(n, &ged.parts())?;

    let sub = |s: &VertexSet| induced_subgraph(g, s).expect("validated").0;

    let mut comp_nu = 0;
    let mut clause_a = true;
    let mut near_perfect = true;
    for comp in &ged.d_components {
        let h = sub(comp);
        clause_a &= is_factor_critical(&h);
        let nu = matching_number(&h);
        near_perfect &= 2 * nu + 1 == h.order();
        comp_nu += nu;
    }

    let gc = sub(&ged.c);
    let c_nu = matching_number(&gc);
    let clause_b = 2 * c_nu == gc.order();

    let (reach, bip) = contracted_bipartite(g, ged);
    let clause_c = positive_surplus(&reach, ged.d_components.len())?;
    let a_into_d = matching_number(&bip) == ged.a.len();

    let nu = matching_number(g);
    let omega = ged.d_components.len();
    let twice = (n + ged.a.len()) as f64 - omega as f64;
    let formula_value = twice / 2.0;
    let clause_e =
        n + ged.a.len() >= omega && (n + ged.a.len() - omega).is_multiple_of(2) && (n + ged.a.len() - omega) / 2 == nu;

    let clause_d = near_perfect && clause_b && a_into_d && nu == comp_nu + c_nu + ged.a.len();

    Ok(VerificationReport {
        a: clause_a,
        b: clause_b,
        c: clause_c,
        d: clause_d,
        e: clause_e,
        matching_number: nu,
        formula_value,
    })
}

/// `(|V| - ω(D) + |A|) / 2`, rejecting decompositions for which that is not an integer.
pub fn matching_number_from_decomposition(g: &Graph, ged: &GeDecomposition) -> Result<usize> {
    let total = g.order() + ged.a.len();
    let omega = ged.d_components.len();
    if omega > total {
        return Err(Error::NotPartition(format!(
            "{omega} D-components exceed |V| + |A| = {total}"
        )));
    }
    let twice = total - omega;
    if !twice.is_multiple_of(2) {
        return Err(Error::ParityViolation(twice));
    }
    Ok(twice / 2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, graph_from_edges};
    use crate::matching::Matching;

    fn sets(v: &[VertexSet]) -> Vec<Vec<usize>> {
        v.iter().map(|s| s.to_vec()).collect()
    }

    /// D computed from the definition by listing every maximum matching.
    fn missable_by_enumeration(g: &Graph) -> Vec<usize> {
        let edges: Vec<_> = g.edges().collect();
        let nu = matching_number(g);
        let mut missable = vec![false; g.order()];
        for mask in 0u32..(1 << edges.len()) {
            let m = Matching::new(
                (0..edges.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| edges[i])
                    .collect(),
            );
            if m.len() == nu && m.is_valid_in(g) {
                for (v, miss) in missable.iter_mut().enumerate() {
                    if !m.edges.iter().any(|&(a, b)| a == v || b == v) {
                        *miss = true;
                    }
                }
            }
        }
        (0..g.order()).filter(|&v| missable[v]).collect()
    }

    #[test]
    fn path3() {
        let g = graph_from_edges(3, &[(0, 1), (1, 2)]);
        let ged = decompose(&g);
        assert_eq!(sets(&ged.d_components), vec![vec![0], vec![2]]);
        assert_eq!(ged.a.to_vec(), vec![1]);
        assert!(ged.c.is_empty());
        assert_eq!(ged.d(3).to_vec(), missable_by_enumeration(&g));
        let r = verify_decomposition(&g, &ged).unwrap();
        assert!(r.all(), "{r:?}");
        assert_eq!(matching_number_from_decomposition(&g, &ged).unwrap(), 1);
    }

    #[test]
    fn k4_and_k3() {
        let k4 = complete_graph(4);
        let ged = decompose(&k4);
        assert!(ged.d_components.is_empty() && ged.a.is_empty());
        assert_eq!(ged.c.to_vec(), vec![0, 1, 2, 3]);
        let r = verify_decomposition(&k4, &ged).unwrap();
        assert!(r.all());
        assert_eq!((r.matching_number, r.formula_value), (2, 2.0));

        let k3 = complete_graph(3);
        let ged = decompose(&k3);
        assert_eq!(sets(&ged.d_components), vec![vec![0, 1, 2]]);
        let r = verify_decomposition(&k3, &ged).unwrap();
        assert!(r.all());
        assert_eq!((r.matching_number, r.formula_value), (1, 1.0));
    }

    #[test]
    fn formula_examples() {
        let k5 = complete_graph(5);
        assert_eq!(matching_number_from_decomposition(&k5, &decompose(&k5)).unwrap(), 2);
        let two_triangles = graph_from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]);
        let ged = decompose(&two_triangles);
        assert_eq!(ged.d_components.len(), 2);
        assert_eq!(matching_number_from_decomposition(&two_triangles, &ged).unwrap(), 2);
        assert_eq!(crate::matching::brute_force_matching_number(&two_triangles).unwrap(), 2);
    }

    #[test]
    fn enumeration_agrees_with_definition_on_small_graphs() {
        // all labelled graphs on 5 vertices
        let pairs: Vec<_> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<_> = (0..pairs.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = graph_from_edges(5, &edges);
            let ged = decompose(&g);
            assert_eq!(ged.d(5).to_vec(), missable_by_enumeration(&g));
            assert!(verify_decomposition(&g, &ged).unwrap().all());
        }
    }

    #[test]
    fn rejects_non_partition_and_bad_parity() {
        let g = complete_graph(3);
        let bad = GeDecomposition {
            d_components: vec![VertexSet::from_members(3, [0, 1]).unwrap()],
            a: VertexSet::new(3),
            c: VertexSet::new(3),
        };
        assert!(matches!(verify_decomposition(&g, &bad), Err(Error::NotPartition(_))));
        let odd = GeDecomposition {
            d_components: vec![
                VertexSet::from_members(3, [0]).unwrap(),
                VertexSet::from_members(3, [1]).unwrap(),
            ],
            ..bad
        };
        assert_eq!(
            matching_number_from_decomposition(&g, &odd),
            Err(Error::ParityViolation(1))
        );
    }

    #[test]
    fn surplus_guard() {
        let reach = vec![VertexSet::full(1); SURPLUS_LIMIT + 1];
        assert!(matches!(positive_surplus(&reach, 1), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn wrong_decomposition_fails_clauses() {
        let g = graph_from_edges(3, &[(0, 1), (1, 2)]);
        let wrong = GeDecomposition {
            d_components: vec![],
            a: VertexSet::new(3),
            c: VertexSet::full(3),
        };
        let r = verify_decomposition(&g, &wrong).unwrap();
        assert!(!r.b && !r.e);
    }
}
