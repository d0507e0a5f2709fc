//! Exhaustive enumeration of edge colorings of small complete graphs, one per symmetry class.
//!
//! Colorings are grown one vertex at a time. A coloring of `K_k` is extended by every
//! coloring of the `k` edges to the new vertex, and a child survives only if it is the
//! canonical (lexicographically smallest) member of its orbit. Restricting a canonical
//! coloring to its first `k` vertices gives a canonical coloring, so every class is reached
//! exactly once. With matching parameters attached, a child is also abandoned as soon as some
//! color class `i` holds an `n_i`-matching; freeness is inherited by induced subcolorings.

mod canon;

use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::colored::{find_structure, EdgeColoring, MatchParams};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::has_matching_of_size;

pub(crate) use canon::edge_index;
use canon::{canonical_form as canonical_code, is_canonical, ColorGroup};

/// Default largest order for exhaustive runs.
pub const DEFAULT_GUARD: usize = 8;

/// Orders above this cannot be represented by the single-word class rows.
const HARD_ORDER_LIMIT: usize = 64;
/// Largest color count for which color permutations are enumerated.
const PERMUTED_COLORS_LIMIT: usize = 8;

/// `n_1 + 1 + Σ (n_i - 1)`.
pub fn ramsey_value(p: &MatchParams) -> usize {
    p.critical_order() + 1
}

/// Which color permutations identify two colorings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColorSymmetry {
    /// Colors are never exchanged; only vertices are permuted.
    Fixed,
    /// Any permutation of the colors.
    Full,
    /// Only colors with equal target sizes `n_i` may be exchanged.
    EqualSizes,
}

pub type ProgressFn = Arc<dyn Fn(usize, usize) + Send + Sync>;

/// Knobs shared by every exhaustive run.
#[derive(Clone)]
pub struct SearchConfig {
    /// Worker threads; 0 uses the global rayon pool.
    pub jobs: usize,
    /// Largest order the run may enumerate.
    pub guard: usize,
    /// Called after each completed order with `(order, classes)`.
    pub progress: Option<ProgressFn>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            jobs: 0,
            guard: DEFAULT_GUARD,
            progress: None,
        }
    }
}

impl std::fmt::Debug for SearchConfig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SearchConfig")
            .field("jobs", &self.jobs)
            .field("guard", &self.guard)
            .finish_non_exhaustive()
    }
}

impl SearchConfig {
    pub(crate) fn check_order(&self, what: &'static str, order: usize) -> Result<()> {
        let limit = self.guard.min(HARD_ORDER_LIMIT);
        if order > limit {
            return Err(Error::SizeLimit {
                what,
                limit,
                actual: order,
            });
        }
        Ok(())
    }

    pub(crate) fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        if self.jobs == 0 {
            return f();
        }
        match rayon::ThreadPoolBuilder::new().num_threads(self.jobs).build() {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }
}

/// Enumerates colorings of `K_order` up to vertex permutations and a chosen color symmetry.
#[derive(Clone, Debug)]
pub struct ColoringSearch {
    order: usize,
    colors: usize,
    params: Option<MatchParams>,
    symmetry: ColorSymmetry,
    config: SearchConfig,
}

impl ColoringSearch {
    /// All `colors`-colorings of `K_order`, identified under vertex and color permutations.
    pub fn new(order: usize, colors: usize) -> Self {
        ColoringSearch {
            order,
            colors,
            params: None,
            symmetry: ColorSymmetry::Full,
            config: SearchConfig::default(),
        }
    }

    /// Restricts to colorings free for `p` and lets only equal-size colors be exchanged.
    pub fn free_for(mut self, p: &MatchParams) -> Self {
        self.colors = p.colors();
        self.params = Some(p.clone());
        self.symmetry = ColorSymmetry::EqualSizes;
        self
    }

    pub fn symmetry(mut self, symmetry: ColorSymmetry) -> Self {
        self.symmetry = symmetry;
        self
    }

    pub fn config(mut self, config: SearchConfig) -> Self {
        self.config = config;
        self
    }

    fn group(&self) -> Result<ColorGroup> {
        if self.symmetry != ColorSymmetry::Fixed && self.colors > PERMUTED_COLORS_LIMIT {
            return Err(Error::SizeLimit {
                what: "permuted colors",
                limit: PERMUTED_COLORS_LIMIT,
                actual: self.colors,
            });
        }
        Ok(match (self.symmetry, &self.params) {
            (ColorSymmetry::Fixed, _) => ColorGroup::trivial(self.colors),
            (ColorSymmetry::EqualSizes, Some(p)) => ColorGroup::preserving(p.sizes()),
            _ => ColorGroup::full(self.colors),
        })
    }

    /// Canonical codes for every order `0..=self.order`.
    fn levels(&self) -> Result<Vec<Vec<Vec<u8>>>> {
        self.config.check_order("coloring order", self.order)?;
        if self.colors == 0 && self.order > 1 {
            return Err(Error::InvalidParams(
                "complete graphs with edges need at least one color".into(),
            ));
        }
        if self.colors > u8::MAX as usize {
            return Err(Error::InvalidParams(format!(
                "at most 255 colors supported, got {}",
                self.colors
            )));
        }
        let group = self.group()?;
        let limits: Option<Vec<usize>> = self.params.as_ref().map(|p| p.sizes().to_vec());
        let mut levels = vec![vec![Vec::new()]];
        for k in 0..self.order {
            let parents = levels.last().expect("nonempty");
            let mut next: Vec<Vec<u8>> = self.config.install(|| {
                parents
                    .par_iter()
                    .flat_map_iter(|parent| extend(parent, k, self.colors, limits.as_deref(), &group))
                    .collect()
            });
            next.sort_unstable();
            if let Some(progress) = &self.config.progress {
                progress(k + 1, next.len());
            }
            levels.push(next);
        }
        Ok(levels)
    }

    /// Canonical representatives of `K_order`, in increasing code order.
    pub fn classes(&self) -> Result<Vec<EdgeColoring>> {
        let levels = self.levels()?;
        Ok(levels[self.order]
            .iter()
            .map(|code| code_to_coloring(code, self.order, self.colors))
            .collect())
    }

    /// Calls `visitor` once per class and returns the number of classes.
    pub fn run<F: FnMut(&EdgeColoring)>(&self, mut visitor: F) -> Result<usize> {
        let classes = self.classes()?;
        for ec in &classes {
            visitor(ec);
        }
        Ok(classes.len())
    }
}

/// All children of `parent` (a coloring of `K_k`) that are canonical colorings of `K_{k+1}`.
fn extend(parent: &[u8], k: usize, colors: usize, limits: Option<&[usize]>, group: &ColorGroup) -> Vec<Vec<u8>> {
    let n = k + 1;
    let mut class_rows = vec![vec![0u64; n]; colors];
    for v in 1..k {
        for u in 0..v {
            let col = parent[edge_index(u, v)] as usize;
            class_rows[col][u] |= 1 << v;
            class_rows[col][v] |= 1 << u;
        }
    }
    let mut out = Vec::new();
    let mut child = parent.to_vec();
    child.resize(parent.len() + k, 0);

    struct Ctx<'a> {
        k: usize,
        colors: usize,
        limits: Option<&'a [usize]>,
        group: &'a ColorGroup,
        base: usize,
    }

    fn rec(ctx: &Ctx, a: usize, rows: &mut [Vec<u64>], child: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        let k = ctx.k;
        if a == k {
            if is_canonical(child, k + 1, ctx.group) {
                out.push(child.clone());
            }
            return;
        }
        for col in 0..ctx.colors {
            rows[col][a] |= 1 << k;
            rows[col][k] |= 1 << a;
            let blocked = ctx
                .limits
                .is_some_and(|lim| has_matching_of_size(&Graph::from_rows(k + 1, &rows[col]), lim[col]));
            if !blocked {
                child[ctx.base + a] = col as u8;
                rec(ctx, a + 1, rows, child, out);
            }
            rows[col][a] &= !(1 << k);
            rows[col][k] &= !(1 << a);
        }
    }

    let ctx = Ctx {
        k,
        colors,
        limits,
        group,
        base: parent.len(),
    };
    rec(&ctx, 0, &mut class_rows, &mut child, &mut out);
    out
}

fn code_to_coloring(code: &[u8], n: usize, colors: usize) -> EdgeColoring {
    EdgeColoring::complete(n, colors, |u, v| code[edge_index(u, v)] as usize + 1).expect("colors in range")
}

fn coloring_to_code(ec: &EdgeColoring) -> Vec<u8> {
    let n = ec.order();
    let mut code = vec![0u8; n * n.saturating_sub(1) / 2];
    for (u, v, col) in ec.edges() {
        code[edge_index(u, v)] = (col - 1) as u8;
    }
    code
}

/// All colorings of `K_n` with `c` colors, one per class under vertex and color permutations.
pub fn enumerate_colorings<F: FnMut(&EdgeColoring)>(n: usize, c: usize, visitor: F) -> Result<usize> {
    ColoringSearch::new(n, c).run(visitor)
}

/// The representative [`ColoringSearch`] would report for the class of `ec`.
pub fn canonical_form(ec: &EdgeColoring, p: Option<&MatchParams>, symmetry: ColorSymmetry) -> Result<EdgeColoring> {
    if !ec.is_complete() {
        return Err(Error::InvalidParams(
            "canonical forms are defined for complete hosts".into(),
        ));
    }
    let mut search = ColoringSearch::new(ec.order(), ec.colors());
    if let Some(p) = p {
        if p.colors() != ec.colors() {
            return Err(Error::ColorCountMismatch {
                coloring: ec.colors(),
                params: p.colors(),
            });
        }
        search = search.free_for(p);
    }
    let group = search.symmetry(symmetry).group()?;
    let code = canonical_code(&coloring_to_code(ec), ec.order(), &group);
    Ok(code_to_coloring(&code, ec.order(), ec.colors()))
}

/// Outcome of an exhaustive run for one parameter tuple.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub params: MatchParams,
    /// Largest order enumerated.
    pub order_checked: usize,
    /// Free classes found at each order `0..=order_checked`.
    pub level_counts: Vec<usize>,
    pub total_canonical_colorings: usize,
    /// Free classes of `K_{r-1}`.
    pub free_count: usize,
    /// Free classes of `K_r`, when the run went that far.
    pub free_at_order: Option<usize>,
    /// Some free coloring of `K_{r-1}` exists.
    pub lower_bound: bool,
    /// No free coloring of `K_r` exists, when checked.
    pub upper_bound: Option<bool>,
    pub critical_classes: Vec<EdgeColoring>,
    /// Indices into `critical_classes` with no structure witness.
    pub structure_failures: Vec<usize>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl SearchReport {
    pub fn verified(&self) -> bool {
        self.lower_bound && self.upper_bound == Some(true)
    }
}

fn run_report(p: &MatchParams, cfg: &SearchConfig, through_r: bool) -> Result<SearchReport> {
    let start = Instant::now();
    let r = ramsey_value(p);
    let top = if through_r { r } else { r - 1 };
    cfg.check_order(if through_r { "Ramsey order" } else { "critical order" }, top)?;
    let search = ColoringSearch::new(top, p.colors()).free_for(p).config(cfg.clone());
    let levels = search.levels()?;
    let level_counts: Vec<usize> = levels.iter().map(Vec::len).collect();
    let critical_classes: Vec<EdgeColoring> = levels[r - 1]
        .iter()
        .map(|code| code_to_coloring(code, r - 1, p.colors()))
        .collect();
    let structure_failures = if through_r {
        Vec::new()
    } else {
        cfg.install(|| {
            critical_classes
                .par_iter()
                .enumerate()
                .filter(|(_, ec)| find_structure(ec, p).is_none())
                .map(|(i, _)| i)
                .collect()
        })
    };
    let free_at_order = through_r.then(|| level_counts[r]);
    Ok(SearchReport {
        params: p.clone(),
        order_checked: top,
        total_canonical_colorings: level_counts.iter().sum(),
        free_count: level_counts[r - 1],
        free_at_order,
        lower_bound: level_counts[r - 1] > 0,
        upper_bound: free_at_order.map(|f| f == 0),
        level_counts,
        critical_classes,
        structure_failures,
        elapsed: start.elapsed(),
    })
}

/// Checks that `K_{r-1}` has a free coloring and `K_r` has none, for `r = ramsey_value(p)`.
/// Larger orders need no separate run: a free coloring of `K_n` restricts to one of `K_r`.
pub fn verify_ramsey_exhaustive(p: &MatchParams, cfg: &SearchConfig) -> Result<SearchReport> {
    run_report(p, cfg, true)
}

/// Enumerates the free colorings of `K_{r-1}` and looks for a structure witness in each.
pub fn enumerate_critical(p: &MatchParams, cfg: &SearchConfig) -> Result<SearchReport> {
    run_report(p, cfg, false)
}
