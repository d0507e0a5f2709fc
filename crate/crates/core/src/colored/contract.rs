//! Contracting the parts of a vertex partition to single vertices.
//!
//! When every two parts are joined by at least one host edge, keeping one representative
//! edge per pair yields an edge-colored complete graph on the parts. A monochromatic matching
//! there lifts back to one of the same size and color in the host.

use serde::Serialize;

use super::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{check_partition, VertexSet};
use crate::matching::Matching;

/// The host edge chosen for each pair of parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepresentativeMap {
    parts: usize,
    /// `(i, j, u, v)` with `i < j`, ordered by `(i, j)`.
    entries: Vec<(usize, usize, usize, usize)>,
}

impl RepresentativeMap {
    fn index(&self, i: usize, j: usize) -> usize {
        let (i, j) = (i.min(j), i.max(j));
        assert!(
            i != j && j < self.parts,
            "({i}, {j}) is not an edge of the contracted graph"
        );
        // position of (i, j) in lexicographic order of pairs
        i * (2 * self.parts - i - 1) / 2 + (j - i - 1)
    }

    /// Host edge `(u, v)`, `u < v`, standing for the contracted edge `ij`.
    pub fn get(&self, i: usize, j: usize) -> (usize, usize) {
        let (_, _, u, v) = self.entries[self.index(i, j)];
        (u, v)
    }

    pub fn parts(&self) -> usize {
        self.parts
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize, usize)> + '_ {
        self.entries.iter().copied()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Contraction {
    pub coloring: EdgeColoring,
    pub representatives: RepresentativeMap,
}

/// Contracts each part to a vertex. The representative of a pair of parts is the
/// lexicographically smallest host edge `(u, v)`, `u < v`, between them.
pub fn contract_partition(ec: &EdgeColoring, parts: &[VertexSet]) -> Result<Contraction> {
    let n = ec.order();
    check_partition(n, parts)?;
    let k = parts.len();
    let mut part_of = vec![0usize; n];
    for (i, part) in parts.iter().enumerate() {
        for v in part.iter() {
            part_of[v] = i;
        }
    }
    let mut chosen: Vec<Option<(usize, usize, usize)>> = vec![None; k * k];
    for (u, v, col) in ec.edges() {
        let (i, j) = (part_of[u], part_of[v]);
        if i == j {
            continue;
        }
        let slot = &mut chosen[i.min(j) * k + i.max(j)];
        if slot.is_none() {
            *slot = Some((u, v, col));
        }
    }
    let mut entries = Vec::with_capacity(k * k.saturating_sub(1) / 2);
    for i in 0..k {
        for j in i + 1..k {
            let (u, v, _) = chosen[i * k + j].ok_or(Error::MissingCrossEdge(i, j))?;
            entries.push((i, j, u, v));
        }
    }
    let coloring = EdgeColoring::complete(k, ec.colors(), |i, j| chosen[i * k + j].expect("checked").2)?;
    Ok(Contraction {
        coloring,
        representatives: RepresentativeMap { parts: k, entries },
    })
}

/// Replaces every contracted edge of `m` by its representative host edge.
pub fn lift_matching(m: &Matching, map: &RepresentativeMap) -> Matching {
    Matching::new(m.edges.iter().map(|&(i, j)| map.get(i, j)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::construct_critical;
    use crate::colored::MatchParams;
    use crate::matching::maximum_matching;

    fn singletons(n: usize) -> Vec<VertexSet> {
        (0..n).map(|v| VertexSet::from_members(n, [v]).unwrap()).collect()
    }

    #[test]
    fn singleton_partition_is_identity() {
        let ec = construct_critical(&MatchParams::new(vec![3]).unwrap());
        let c = contract_partition(&ec, &singletons(5)).unwrap();
        assert_eq!(c.coloring, ec);
        for (i, j, u, v) in c.representatives.iter() {
            assert_eq!((i, j), (u, v));
        }
    }

    fn hexagon() -> (EdgeColoring, Vec<VertexSet>) {
        // C6 colored alternately 1, 2; antipodal pairs {0,3}, {1,4}, {2,5}
        let edges: Vec<_> = (0..6)
            .map(|i| (i.min((i + 1) % 6), i.max((i + 1) % 6), 1 + i % 2))
            .collect();
        let ec = EdgeColoring::from_edges(6, 2, &edges).unwrap();
        let parts = (0..3)
            .map(|i| VertexSet::from_members(6, [i, i + 3]).unwrap())
            .collect();
        (ec, parts)
    }

    #[test]
    fn hexagon_contracts_to_triangle() {
        let (ec, parts) = hexagon();
        let c = contract_partition(&ec, &parts).unwrap();
        assert!(c.coloring.is_complete());
        assert_eq!(c.coloring.order(), 3);
        assert_eq!(c.representatives.get(0, 1), (0, 1));
        assert_eq!(c.representatives.get(1, 2), (1, 2));
        assert_eq!(c.representatives.get(2, 0), (0, 5));
        for (i, j, u, v) in c.representatives.iter() {
            assert_eq!(c.coloring.color(i, j), ec.color(u, v));
        }
        let m = maximum_matching(&c.coloring.color_class(1).unwrap());
        let lifted = lift_matching(&m, &c.representatives);
        assert_eq!(lifted.len(), m.len());
        assert!(lifted.is_valid_in(ec.host()));
        assert!(ec.is_monochromatic(&lifted, 1));
    }

    #[test]
    fn lift_two_edge_matching() {
        // K8 split into four pairs contracts to a colored K4
        let ec = EdgeColoring::complete(8, 2, |u, v| 1 + (u + v) % 2).unwrap();
        let parts: Vec<_> = (0..4)
            .map(|i| VertexSet::from_members(8, [2 * i, 2 * i + 1]).unwrap())
            .collect();
        let c = contract_partition(&ec, &parts).unwrap();
        for col in 1..=2 {
            let m = maximum_matching(&c.coloring.color_class(col).unwrap());
            if m.len() >= 2 {
                let lifted = lift_matching(&m, &c.representatives);
                assert_eq!(lifted.len(), m.len());
                assert!(lifted.is_valid_in(ec.host()));
                assert!(ec.is_monochromatic(&lifted, col));
            }
        }
        assert!(lift_matching(&Matching::default(), &c.representatives).is_empty());
    }

    #[test]
    fn missing_cross_edge() {
        let ec = EdgeColoring::from_edges(4, 1, &[(0, 1, 1), (1, 2, 1)]).unwrap();
        let parts: Vec<_> = vec![
            VertexSet::from_members(4, [0, 1]).unwrap(),
            VertexSet::from_members(4, [2]).unwrap(),
            VertexSet::from_members(4, [3]).unwrap(),
        ];
        assert_eq!(
            contract_partition(&ec, &parts).unwrap_err(),
            Error::MissingCrossEdge(0, 2)
        );
        assert!(matches!(
            contract_partition(&ec, &parts[..2]),
            Err(Error::NotPartition(_))
        ));
    }
}
