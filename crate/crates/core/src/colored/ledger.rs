//! Per-color counting quantities that bound the edges of a free coloring.
//!
//! For color class `G^i` with decomposition `(D, A, C)`: `a_i = |A|`, `d_0 = |C| / 2`,
//! `d_k = (|D_k| - 1) / 2` per `D`-component and `b_i = n_i - 1 - a_i`. Freeness gives
//! `Σ d ≤ b_i`, hence at most `C(2b_i + 1, 2)` color-`i` edges lie inside `C` or inside `D`.

use serde::Serialize;

use super::{is_free, EdgeColoring, MatchParams};
use crate::error::{Error, Result};
use crate::gallai_edmonds::decompose;
use crate::graph::{induced_subgraph, Graph, VertexSet};

pub(crate) fn pairs(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColorLedger {
    pub color: usize,
    pub a: usize,
    /// `|C(G^i)| / 2`.
    pub d0: usize,
    /// `(|D_k| - 1) / 2` for each component of `G^i[D]`.
    pub d: Vec<usize>,
    pub b: usize,
    pub edge_bound_lhs: usize,
    pub edge_bound_rhs: usize,
    /// `|C|` even and every `D`-component of odd order.
    pub parity_ok: bool,
}

impl ColorLedger {
    pub fn d_sum(&self) -> usize {
        self.d0 + self.d.iter().sum::<usize>()
    }

    pub fn holds(&self) -> bool {
        self.parity_ok && self.d_sum() <= self.b && self.edge_bound_lhs <= self.edge_bound_rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProofLedger {
    pub order: usize,
    pub colors: Vec<ColorLedger>,
    /// `Σ_i C(2b_i + 1, 2)`.
    pub bound_sum: usize,
    /// `C(n - Σ a_i, 2)`: edges avoiding every `A(G^i)` must fit in the per-color bounds.
    pub uncovered_pairs: usize,
    /// `C(n_1 + Σ b_i, 2)`.
    pub order_pairs: usize,
}

impl ProofLedger {
    /// Per-color inequalities plus the covering inequality, valid for any free coloring of `K_n`.
    pub fn holds(&self) -> bool {
        self.colors.iter().all(ColorLedger::holds) && self.uncovered_pairs <= self.bound_sum
    }

    /// At the critical order every inequality in the chain is tight.
    pub fn tight(&self) -> bool {
        self.holds() && self.bound_sum == self.order_pairs && self.bound_sum == self.uncovered_pairs
    }
}

fn edges_within(g: &Graph, s: &VertexSet) -> usize {
    induced_subgraph(g, s).expect("subset").0.edge_count()
}

pub fn proof_ledger(ec: &EdgeColoring, p: &MatchParams) -> Result<ProofLedger> {
    if !is_free(ec, p)? {
        return Err(Error::NotFree);
    }
    let n = ec.order();
    let mut colors = Vec::with_capacity(p.colors());
    for i in 1..=p.colors() {
        let g = ec.color_class(i)?;
        let ged = decompose(&g);
        let a = ged.a.len();
        let b = (p.size_of(i) - 1).checked_sub(a).ok_or(Error::NotFree)?;
        let d: Vec<usize> = ged.d_components.iter().map(|comp| (comp.len() - 1) / 2).collect();
        let parity_ok = ged.c.len().is_multiple_of(2) && ged.d_components.iter().all(|comp| comp.len() % 2 == 1);
        let lhs = edges_within(&g, &ged.c) + edges_within(&g, &ged.d(n));
        colors.push(ColorLedger {
            color: i,
            a,
            d0: ged.c.len() / 2,
            d,
            b,
            edge_bound_lhs: lhs,
            edge_bound_rhs: pairs(2 * b + 1),
            parity_ok,
        });
    }
    let sum_a: usize = colors.iter().map(|l| l.a).sum();
    let sum_b: usize = colors.iter().map(|l| l.b).sum();
    Ok(ProofLedger {
        order: n,
        bound_sum: colors.iter().map(|l| l.edge_bound_rhs).sum(),
        uncovered_pairs: pairs(n.saturating_sub(sum_a)),
        order_pairs: pairs(p.largest() + sum_b),
        colors,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colored::construct_critical;

    #[test]
    fn critical_two_two() {
        let p = MatchParams::new(vec![2, 2]).unwrap();
        let l = proof_ledger(&construct_critical(&p), &p).unwrap();
        let c1 = &l.colors[0];
        assert_eq!((c1.a, c1.d0, c1.b), (0, 0, 1));
        assert_eq!(c1.d, vec![1, 0]);
        assert_eq!((c1.edge_bound_lhs, c1.edge_bound_rhs), (3, 3));
        let c2 = &l.colors[1];
        assert_eq!((c2.a, c2.b, c2.d0), (1, 0, 0));
        assert_eq!(c2.d, vec![0, 0, 0]);
        assert_eq!((c2.edge_bound_lhs, c2.edge_bound_rhs), (0, 0));
        assert!(l.tight());
    }

    #[test]
    fn edgeless_class() {
        let p = MatchParams::new(vec![3, 2]).unwrap();
        let ec = EdgeColoring::complete(3, 2, |_, _| 1).unwrap();
        let l = proof_ledger(&ec, &p).unwrap();
        let c2 = &l.colors[1];
        assert_eq!((c2.a, c2.d0, c2.d_sum(), c2.edge_bound_lhs), (0, 0, 0, 0));
        assert!(l.holds());
    }

    #[test]
    fn rejects_non_free() {
        let p = MatchParams::new(vec![2, 2]).unwrap();
        let ec = EdgeColoring::complete(4, 2, |_, _| 1).unwrap();
        assert_eq!(proof_ledger(&ec, &p), Err(Error::NotFree));
    }
}
