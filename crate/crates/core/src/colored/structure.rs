//! Recognising the part structure of critical colorings.
//!
//! After a relabeling of colors, a critical coloring splits its vertices into `V_1, ..., V_c`
//! with `|V_1| = 2n_1 - 1` and `|V_i| = n_i - 1`, where edges inside `V_i` have color `i`,
//! edges from `V_1` to `V_i` have color `i`, and edges between `V_i` and `V_j` (`i, j >= 2`)
//! have color `i` or `j`.

use serde::Serialize;

use super::coloring::check_permutation;
use super::{EdgeColoring, MatchParams};
use crate::error::{Error, Result};
use crate::graph::{check_partition, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureWitness {
    /// `color_relabel[old - 1]` is the new label of color `old`.
    pub color_relabel: Vec<usize>,
    /// `parts[i - 1]` is `V_i`, indexed by new label.
    pub parts: Vec<VertexSet>,
}

impl StructureWitness {
    /// The original color that plays the role of color 1.
    pub fn clique_color(&self) -> usize {
        self.color_relabel.iter().position(|&c| c == 1).expect("permutation") + 1
    }
}

fn check_relabel(p: &MatchParams, relabel: &[usize]) -> Result<()> {
    check_permutation(relabel, p.colors())?;
    for (old, &new) in relabel.iter().enumerate() {
        if p.sizes()[old] != p.size_of(new) {
            return Err(Error::InvalidRelabel(format!(
                "color {} (n = {}) cannot become color {new} (n = {})",
                old + 1,
                p.sizes()[old],
                p.size_of(new)
            )));
        }
    }
    Ok(())
}

/// Whether `w` exhibits the critical part structure of `ec` for `p`.
pub fn check_structure(ec: &EdgeColoring, p: &MatchParams, w: &StructureWitness) -> Result<bool> {
    if ec.colors() != p.colors() {
        return Err(Error::ColorCountMismatch {
            coloring: ec.colors(),
            params: p.colors(),
        });
    }
    check_relabel(p, &w.color_relabel)?;
    if w.parts.len() != p.colors() {
        return Err(Error::NotPartition(format!(
            "{} parts for {} colors",
            w.parts.len(),
            p.colors()
        )));
    }
    let n = ec.order();
    check_partition(n, &w.parts)?;

    if !ec.is_complete() {
        return Ok(false);
    }
    for (i, part) in w.parts.iter().enumerate() {
        let want = if i == 0 { 2 * p.largest() - 1 } else { p.sizes()[i] - 1 };
        if part.len() != want {
            return Ok(false);
        }
    }
    let mut part_of = vec![0usize; n];
    for (i, part) in w.parts.iter().enumerate() {
        for v in part.iter() {
            part_of[v] = i + 1;
        }
    }
    for (u, v, col) in ec.edges() {
        let col = w.color_relabel[col - 1];
        if p.size_of(col) == 1 {
            return Ok(false);
        }
        let (i, j) = (part_of[u].min(part_of[v]), part_of[u].max(part_of[v]));
        let ok = if i == j || i == 1 {
            col == j
        } else {
            col == i || col == j
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Finds a witness for the critical part structure, if one exists.
///
/// For each color `m` with `n_m = n_1` (in increasing order), `V_1` must be exactly the
/// non-isolated vertices of color class `m`, spanning a clique of order `2n_1 - 1`. Every
/// other vertex then sees `V_1` in a single color, which fixes its part.
pub fn find_structure(ec: &EdgeColoring, p: &MatchParams) -> Option<StructureWitness> {
    let n = ec.order();
    let c = p.colors();
    if ec.colors() != c || !ec.is_complete() || n != p.critical_order() {
        return None;
    }
    let identity: Vec<usize> = (1..=c).collect();

    if p.largest() == 1 {
        // n = 1: a single vertex and no edges
        let mut parts = vec![VertexSet::new(n); c];
        parts[0].insert(0);
        let w = StructureWitness {
            color_relabel: identity,
            parts,
        };
        return check_structure(ec, p, &w).ok()?.then_some(w);
    }

    let clique = 2 * p.largest() - 1;
    for m in (1..=c).filter(|&m| p.size_of(m) == p.largest()) {
        let class = ec.color_class(m).ok()?;
        let v1: Vec<usize> = (0..n).filter(|&v| class.degree(v) > 0).collect();
        if v1.len() != clique || class.edge_count() != clique * (clique - 1) / 2 {
            continue;
        }
        let mut relabel = identity.clone();
        relabel.swap(0, m - 1);

        let mut parts = vec![VertexSet::new(n); c];
        for &v in &v1 {
            parts[0].insert(v);
        }
        let mut consistent = true;
        for v in (0..n).filter(|v| !v1.contains(v)) {
            let mut seen = v1.iter().map(|&u| ec.color(u, v).expect("complete host"));
            let first = seen.next().expect("V_1 nonempty");
            if seen.any(|col| col != first) {
                consistent = false;
                break;
            }
            parts[relabel[first - 1] - 1].insert(v);
        }
        if !consistent {
            continue;
        }
        let w = StructureWitness {
            color_relabel: relabel,
            parts,
        };
        if check_structure(ec, p, &w).unwrap_or(false) {
            return Some(w);
        }
    }
    None
}
