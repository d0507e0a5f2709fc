//! Star-critical Ramsey numbers for matchings.
//!
//! With `r = ramsey_value(p)`, the host `K_{r-1} ⊔ K_{1,k}` is a complete graph on `r - 1`
//! vertices plus a centre joined to `k` of them. The least `k` that forces a monochromatic
//! `n_i`-matching in color `i` is `1 + Σ_{i>=2} (n_i - 1)`.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::colored::{construct_critical, critical_parts, find_structure, is_free, EdgeColoring, MatchParams};
use crate::error::Result;
use crate::graph::{complete_graph, Graph, GraphBuilder, VertexSet};
use crate::matching::has_matching_of_size;
use crate::search::{enumerate_critical, ramsey_value, SearchConfig};

/// `1 + Σ_{i=2..c} (n_i - 1)`.
pub fn star_critical_value(p: &MatchParams) -> usize {
    1 + spokes_below(p)
}

/// `m = Σ_{i=2..c} (n_i - 1)`, the most spokes a free coloring can carry.
fn spokes_below(p: &MatchParams) -> usize {
    p.sizes()[1..].iter().map(|n| n - 1).sum()
}

/// `K_{n-1}` plus a centre vertex `n - 1` joined to `spokes`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarHost {
    #[serde(skip)]
    pub base: Graph,
    pub center: usize,
    pub spokes: VertexSet,
}

impl StarHost {
    pub fn new(base_order: usize, spokes: VertexSet) -> Result<Self> {
        if let Some(bad) = spokes.iter().find(|&v| v >= base_order) {
            return Err(crate::Error::VertexOutOfRange {
                vertex: bad,
                n: base_order,
            });
        }
        Ok(StarHost {
            base: complete_graph(base_order),
            center: base_order,
            spokes,
        })
    }

    /// The whole host as a plain graph on `base_order + 1` vertices.
    pub fn graph(&self) -> Graph {
        let n = self.base.order();
        let mut b = GraphBuilder::new(n + 1);
        for (u, v) in self.base.edges() {
            b.add_edge(u, v).expect("in range");
        }
        for s in self.spokes.iter() {
            b.add_edge(s, self.center).expect("in range");
        }
        b.build()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StarColoring {
    pub host: StarHost,
    pub coloring: EdgeColoring,
}

/// The critical construction on `r - 1` vertices plus a centre joined to every vertex outside
/// `V_1`, each spoke into `V_i` colored `i`.
pub fn construct_star_free(p: &MatchParams) -> StarColoring {
    let base = construct_critical(p);
    let part = critical_parts(p);
    let n = base.order();
    let spokes = VertexSet::from_members(n, (0..n).filter(|&v| part[v] >= 2)).expect("in range");
    let host = StarHost::new(n, spokes).expect("spokes in range");
    let coloring = EdgeColoring::new(host.graph(), p.colors(), |u, v| {
        if v == n {
            part[u]
        } else {
            base.color(u, v).expect("complete")
        }
    })
    .expect("colors in range");
    StarColoring { host, coloring }
}

#[derive(Clone, Debug, Serialize)]
pub struct StarReport {
    pub params: MatchParams,
    pub r: usize,
    pub r_star: usize,
    /// `m = r* - 1`.
    pub spokes_lower: usize,
    /// The construction with `m` spokes is free.
    pub lower_bound_free: bool,
    /// Critical bases (one per class) that were extended.
    pub bases: usize,
    /// Free spoke colorings with `m` spokes, summed over bases.
    pub free_at_lower: usize,
    /// Spoke sets times spoke colorings tried with `m + 1` spokes.
    pub configurations_upper: usize,
    /// Free colorings found with `m + 1` spokes; zero confirms the upper bound.
    pub free_at_upper: usize,
    /// Free `m`-spoke colorings with a spoke into `V_1` in the clique's color.
    pub clique_spoke_violations: usize,
    /// `(r - 1) - m == 2n_1 - 1`: only `m` base vertices lie outside the clique.
    pub outside_clique_identity: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl StarReport {
    pub fn verified(&self) -> bool {
        self.lower_bound_free
            && self.free_at_lower > 0
            && self.free_at_upper == 0
            && self.clique_spoke_violations == 0
            && self.outside_clique_identity
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Counts for one base and spoke set: (spoke colorings tried, free ones, free ones that put
/// the clique color on a spoke into `clique`).
fn spoke_colorings(
    base: &EdgeColoring,
    p: &MatchParams,
    spokes: &[usize],
    clique: Option<(&VertexSet, usize)>,
) -> (usize, usize, usize) {
    let n = base.order();
    let c = p.colors();
    let classes: Vec<Vec<(usize, usize)>> = (1..=c)
        .map(|i| base.edges().filter(|e| e.2 == i).map(|(u, v, _)| (u, v)).collect())
        .collect();
    let mut assignment = vec![1usize; spokes.len()];
    let (mut tried, mut free, mut violations) = (0, 0, 0);
    loop {
        tried += 1;
        let is_free = (1..=c).all(|i| {
            let mut b = GraphBuilder::new(n + 1);
            for &(u, v) in &classes[i - 1] {
                b.add_edge(u, v).expect("in range");
            }
            for (&s, &col) in spokes.iter().zip(&assignment) {
                if col == i {
                    b.add_edge(s, n).expect("in range");
                }
            }
            !has_matching_of_size(&b.build(), p.size_of(i))
        });
        if is_free {
            free += 1;
            if let Some((v1, col1)) = clique {
                if spokes
                    .iter()
                    .zip(&assignment)
                    .any(|(&s, &col)| v1.contains(s) && col == col1)
                {
                    violations += 1;
                }
            }
        }
        // next assignment in base-c counting
        let mut i = 0;
        while i < assignment.len() && assignment[i] == c {
            assignment[i] = 1;
            i += 1;
        }
        if i == assignment.len() {
            break;
        }
        assignment[i] += 1;
    }
    (tried, free, violations)
}

/// Confirms `r*` exhaustively: the construction with `m` spokes is free, and no critical base
/// with `m + 1` spokes, over every spoke set and spoke coloring, is free. Non-critical bases
/// already contain a forbidden matching.
pub fn verify_star_exhaustive(p: &MatchParams, cfg: &SearchConfig) -> Result<StarReport> {
    let start = Instant::now();
    let r = ramsey_value(p);
    cfg.check_order("star base order", r - 1)?;
    let m = spokes_below(p);

    let lower = construct_star_free(p);
    let lower_bound_free = lower.host.spokes.len() == m && is_free(&lower.coloring, p)?;

    let critical = enumerate_critical(p, cfg)?;
    let bases = &critical.critical_classes;
    let witnesses: Vec<_> = bases.iter().map(|b| find_structure(b, p)).collect();

    let n = r - 1;
    let lower_sets = subsets(n, m);
    let upper_sets = subsets(n, m + 1);
    let jobs: Vec<(usize, &Vec<usize>, bool)> = (0..bases.len())
        .flat_map(|b| {
            lower_sets
                .iter()
                .map(move |s| (b, s, false))
                .chain(upper_sets.iter().map(move |s| (b, s, true)))
        })
        .collect();

    let totals = cfg.install(|| {
        jobs.par_iter()
            .map(|&(b, spokes, upper)| {
                let clique = witnesses[b].as_ref().map(|w| (&w.parts[0], w.clique_color()));
                let (tried, free, viol) = spoke_colorings(&bases[b], p, spokes, clique);
                if upper {
                    [0, 0, tried, free]
                } else {
                    [free, viol, 0, 0]
                }
            })
            .reduce(|| [0; 4], |a, b| [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]])
    });

    Ok(StarReport {
        params: p.clone(),
        r,
        r_star: star_critical_value(p),
        spokes_lower: m,
        lower_bound_free,
        bases: bases.len(),
        free_at_lower: totals[0],
        clique_spoke_violations: totals[1],
        configurations_upper: totals[2],
        free_at_upper: totals[3],
        outside_clique_identity: n - m == 2 * p.largest() - 1,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(s: &[usize]) -> MatchParams {
        MatchParams::new(s.to_vec()).unwrap()
    }

    #[test]
    fn values() {
        assert_eq!(star_critical_value(&params(&[2, 2])), 2);
        assert_eq!(star_critical_value(&params(&[3, 2])), 2);
        assert_eq!(star_critical_value(&params(&[2, 2, 2])), 3);
        assert_eq!(star_critical_value(&params(&[4])), 1);
    }

    #[test]
    fn constructions_are_free() {
        let two = construct_star_free(&params(&[2, 2]));
        assert_eq!(two.host.spokes.to_vec(), vec![3]);
        assert_eq!(two.coloring.color(3, 4), Some(2));
        assert!(is_free(&two.coloring, &params(&[2, 2])).unwrap());

        let p = params(&[3, 2]);
        let s = construct_star_free(&p);
        assert_eq!(s.coloring.order(), 7);
        assert_eq!(s.host.spokes.len(), 1);
        assert!(is_free(&s.coloring, &p).unwrap());

        let single = construct_star_free(&params(&[3]));
        assert!(single.host.spokes.is_empty());
        assert!(is_free(&single.coloring, &params(&[3])).unwrap());
    }

    #[test]
    fn subset_counts() {
        assert_eq!(subsets(5, 3).len(), 10);
        assert_eq!(subsets(4, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }

    #[test]
    fn two_two_exhaustive() {
        let rep = verify_star_exhaustive(&params(&[2, 2]), &SearchConfig::default()).unwrap();
        assert!(rep.verified(), "{rep:?}");
        assert_eq!(rep.configurations_upper, 6 * 4);
    }
}
