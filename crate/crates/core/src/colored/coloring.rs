use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::MatchParams;
use crate::error::{parse_err, Error, Result};
use crate::graph::{complete_graph, Graph, GraphBuilder};
use crate::matching::{has_matching_of_size, matching_number, Matching};

/// An assignment of a color in `1..=c` to every edge of a host graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeColoring {
    host: Graph,
    colors: usize,
    /// Row-major `n × n`, symmetric; 0 marks a non-edge.
    table: Vec<u8>,
}

impl EdgeColoring {
    /// Colors every edge of `host` with `color_of(u, v)` (called with `u < v`).
    pub fn new<F>(host: Graph, colors: usize, mut color_of: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> usize,
    {
        if colors > u8::MAX as usize {
            return Err(Error::InvalidParams(format!(
                "at most 255 colors supported, got {colors}"
            )));
        }
        let n = host.order();
        let mut table = vec![0u8; n * n];
        for (u, v) in host.edges() {
            let col = color_of(u, v);
            if col == 0 || col > colors {
                return Err(Error::ColorOutOfRange { color: col, colors });
            }
            table[u * n + v] = col as u8;
            table[v * n + u] = col as u8;
        }
        Ok(EdgeColoring { host, colors, table })
    }

    /// Coloring of `K_n`.
    pub fn complete<F>(n: usize, colors: usize, color_of: F) -> Result<Self>
    where
        F: FnMut(usize, usize) -> usize,
    {
        EdgeColoring::new(complete_graph(n), colors, color_of)
    }

    /// Builds the host from explicit `(u, v, color)` triples.
    pub fn from_edges(n: usize, colors: usize, edges: &[(usize, usize, usize)]) -> Result<Self> {
        let mut b = GraphBuilder::new(n);
        for &(u, v, _) in edges {
            if b.has_edge(u, v) {
                return Err(Error::InvalidParams(format!("edge {u} {v} listed twice")));
            }
            b.add_edge(u, v)?;
        }
        let mut lookup = vec![0usize; n * n];
        for &(u, v, col) in edges {
            lookup[u * n + v] = col;
            lookup[v * n + u] = col;
        }
        EdgeColoring::new(b.build(), colors, |u, v| lookup[u * n + v])
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn order(&self) -> usize {
        self.host.order()
    }

    /// Color count `c`.
    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.host.edge_count() == n * n.saturating_sub(1) / 2
    }

    /// Color of edge `uv`, or `None` if it is not a host edge.
    pub fn color(&self, u: usize, v: usize) -> Option<usize> {
        let n = self.order();
        if u >= n || v >= n {
            return None;
        }
        match self.table[u * n + v] {
            0 => None,
            c => Some(c as usize),
        }
    }

    /// `(u, v, color)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.order();
        self.host
            .edges()
            .map(move |(u, v)| (u, v, self.table[u * n + v] as usize))
    }

    /// Spanning subgraph formed by the edges of color `i`.
    pub fn color_class(&self, i: usize) -> Result<Graph> {
        if i == 0 || i > self.colors {
            return Err(Error::ColorOutOfRange {
                color: i,
                colors: self.colors,
            });
        }
        let mut b = GraphBuilder::new(self.order());
        for (u, v, col) in self.edges() {
            if col == i {
                b.add_edge(u, v)?;
            }
        }
        Ok(b.build())
    }

    /// Matching number of each color class, in color order.
    pub fn matching_profile(&self) -> Vec<usize> {
        (1..=self.colors)
            .map(|i| matching_number(&self.color_class(i).expect("valid color")))
            .collect()
    }

    /// Applies `relabel[old - 1] = new` to every edge color.
    pub fn relabel_colors(&self, relabel: &[usize]) -> Result<Self> {
        check_permutation(relabel, self.colors)?;
        let mut table = self.table.clone();
        for t in table.iter_mut().filter(|t| **t != 0) {
            *t = relabel[*t as usize - 1] as u8;
        }
        Ok(EdgeColoring {
            host: self.host.clone(),
            colors: self.colors,
            table,
        })
    }

    /// Whether every edge of `m` is present and carries `color`.
    pub fn is_monochromatic(&self, m: &Matching, color: usize) -> bool {
        m.edges.iter().all(|&(u, v)| self.color(u, v) == Some(color))
    }

    /// The `ecg` text format: `n c`, then for each `u < n - 1` a line with the colors of
    /// `(u, u+1) .. (u, n-1)`, 0 for a non-edge.
    pub fn to_ecg(&self) -> String {
        let n = self.order();
        let mut out = format!("{n} {}\n", self.colors);
        for u in 0..n.saturating_sub(1) {
            let row: Vec<String> = (u + 1..n).map(|v| self.table[u * n + v].to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_ecg(text: &str) -> Result<Self> {
        if text.contains('\r') {
            return Err(parse_err(1, "carriage return in input; ecg uses LF line endings"));
        }
        let mut lines = text.split('\n');
        let header = lines.next().unwrap_or_default();
        let nums = parse_row(header, 1)?;
        let [n, c] = nums[..] else {
            return Err(parse_err(1, "header must be `n c`"));
        };
        if c > u8::MAX as usize {
            return Err(parse_err(1, format!("too many colors: {c}")));
        }
        let mut entries = Vec::new();
        for u in 0..n.saturating_sub(1) {
            let lineno = u + 2;
            let line = lines.next().ok_or_else(|| parse_err(lineno, "missing row"))?;
            let row = parse_row(line, lineno)?;
            if row.len() != n - 1 - u {
                return Err(parse_err(
                    lineno,
                    format!("expected {} entries, found {}", n - 1 - u, row.len()),
                ));
            }
            for (k, &col) in row.iter().enumerate() {
                if col > c {
                    return Err(parse_err(lineno, format!("color {col} outside 0..={c}")));
                }
                if col != 0 {
                    entries.push((u, u + 1 + k, col));
                }
            }
        }
        let rest: Vec<&str> = lines.collect();
        if !(rest.is_empty() || rest == [""]) {
            return Err(parse_err(n.max(1) + 1, "trailing content after last row"));
        }
        EdgeColoring::from_edges(n, c, &entries)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&ColoringJson::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let j: ColoringJson = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
        let edges: Vec<_> = j.edges.iter().map(|e| (e[0], e[1], e[2])).collect();
        EdgeColoring::from_edges(j.n, j.c, &edges)
    }

    /// Graphviz rendering with one palette entry per color.
    pub fn to_dot(&self) -> String {
        const PALETTE: [&str; 8] = [
            "red",
            "blue",
            "darkgreen",
            "orange",
            "purple",
            "brown",
            "cyan",
            "magenta",
        ];
        let mut out = String::from("graph coloring {\n");
        for v in 0..self.order() {
            let _ = writeln!(out, "  {v};");
        }
        for (u, v, col) in self.edges() {
            let _ = writeln!(
                out,
                "  {u} -- {v} [color=\"{}\", label=\"{col}\"];",
                PALETTE[(col - 1) % PALETTE.len()]
            );
        }
        out.push_str("}\n");
        out
    }
}

impl std::fmt::Debug for EdgeColoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_ecg())
    }
}

impl Serialize for EdgeColoring {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ColoringJson::from(self).serialize(serializer)
    }
}

#[derive(Serialize, Deserialize)]
struct ColoringJson {
    n: usize,
    c: usize,
    edges: Vec<[usize; 3]>,
}

impl From<&EdgeColoring> for ColoringJson {
    fn from(ec: &EdgeColoring) -> Self {
        ColoringJson {
            n: ec.order(),
            c: ec.colors(),
            edges: ec.edges().map(|(u, v, c)| [u, v, c]).collect(),
        }
    }
}

fn parse_row(line: &str, lineno: usize) -> Result<Vec<usize>> {
    if line.is_empty() {
        return Ok(Vec::new());
    }
    line.split(' ')
        .map(|tok| {
            if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
                return Err(parse_err(lineno, format!("bad token {tok:?}")));
            }
            tok.parse()
                .map_err(|_| parse_err(lineno, format!("bad number {tok:?}")))
        })
        .collect()
}

pub(crate) fn check_permutation(relabel: &[usize], colors: usize) -> Result<()> {
    let mut seen = vec![false; colors + 1];
    if relabel.len() != colors {
        return Err(Error::InvalidRelabel(format!(
            "expected {colors} entries, got {}",
            relabel.len()
        )));
    }
    for &c in relabel {
        if c == 0 || c > colors || seen[c] {
            return Err(Error::InvalidRelabel(format!(
                "{relabel:?} is not a permutation of 1..={colors}"
            )));
        }
        seen[c] = true;
    }
    Ok(())
}

/// Whether no color class `i` contains a matching with `n_i` edges.
pub fn is_free(ec: &EdgeColoring, p: &MatchParams) -> Result<bool> {
    if ec.colors() != p.colors() {
        return Err(Error::ColorCountMismatch {
            coloring: ec.colors(),
            params: p.colors(),
        });
    }
    for i in 1..=p.colors() {
        if has_matching_of_size(&ec.color_class(i)?, p.size_of(i)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Part index (1-based) of every vertex in the critical construction: `V_1` holds the first
/// `2n_1 - 1` vertices, then `V_i` holds the next `n_i - 1`.
pub(crate) fn critical_parts(p: &MatchParams) -> Vec<usize> {
    let mut part = Vec::with_capacity(p.critical_order());
    part.extend(std::iter::repeat_n(1, 2 * p.largest() - 1));
    for i in 2..=p.colors() {
        part.extend(std::iter::repeat_n(i, p.size_of(i) - 1));
    }
    part
}

/// The critical coloring of `K_{n_1 + Σ(n_i - 1)}`: edge `xy` gets the largest `j` whose
/// part `V_j` meets `{x, y}`.
pub fn construct_critical(p: &MatchParams) -> EdgeColoring {
    let part = critical_parts(p);
    EdgeColoring::complete(part.len(), p.colors(), |u, v| part[u].max(part[v])).expect("colors in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::graph_from_edges;

    fn params(s: &[usize]) -> MatchParams {
        MatchParams::new(s.to_vec()).unwrap()
    }

    #[test]
    fn color_classes() {
        let mono = EdgeColoring::complete(4, 2, |_, _| 1).unwrap();
        assert_eq!(mono.color_class(1).unwrap(), complete_graph(4));
        assert_eq!(mono.color_class(2).unwrap().edge_count(), 0);
        assert_eq!(mono.color_class(3), Err(Error::ColorOutOfRange { color: 3, colors: 2 }));

        let cl = construct_critical(&params(&[2, 2]));
        assert_eq!(
            cl.color_class(1).unwrap(),
            graph_from_edges(4, &[(0, 1), (0, 2), (1, 2)])
        );
    }

    #[test]
    fn critical_construction_examples() {
        let cl = construct_critical(&params(&[2, 2]));
        assert_eq!(cl.order(), 4);
        for (u, v, col) in cl.edges() {
            assert_eq!(col, if v == 3 { 2 } else { 1 }, "edge {u}{v}");
        }
        assert!(is_free(&cl, &params(&[2, 2])).unwrap());

        let single = construct_critical(&params(&[3]));
        assert_eq!(single.order(), 5);
        assert!(single.edges().all(|(_, _, c)| c == 1));
        assert_eq!(single.matching_profile(), vec![2]);

        let three = construct_critical(&params(&[2, 2, 2]));
        assert_eq!(three.order(), 5);
        assert!(is_free(&three, &params(&[2, 2, 2])).unwrap());
    }

    #[test]
    fn freeness() {
        let mono = EdgeColoring::complete(5, 2, |_, _| 1).unwrap();
        assert!(!is_free(&mono, &params(&[2, 2])).unwrap());
        assert!(matches!(
            is_free(&mono, &params(&[2])),
            Err(Error::ColorCountMismatch { .. })
        ));

        // n_1 = 1: free iff color 1 is unused
        let p = params(&[1, 1]);
        let unused = EdgeColoring::complete(3, 2, |_, _| 2).unwrap();
        assert!(!is_free(&unused, &p).unwrap());
        let k1 = EdgeColoring::complete(1, 2, |_, _| 1).unwrap();
        assert!(is_free(&k1, &p).unwrap());
        let one_edge = EdgeColoring::complete(2, 2, |_, _| 1).unwrap();
        assert!(!is_free(&one_edge, &p).unwrap());
    }

    #[test]
    fn ecg_format_is_exact() {
        let cl = construct_critical(&params(&[2, 2]));
        let text = cl.to_ecg();
        assert_eq!(text, "4 2\n1 1 2\n1 2\n2\n");
        assert_eq!(EdgeColoring::from_ecg(&text).unwrap(), cl);

        let partial = EdgeColoring::from_edges(3, 2, &[(0, 2, 2)]).unwrap();
        assert_eq!(partial.to_ecg(), "3 2\n0 2\n0\n");
        assert_eq!(EdgeColoring::from_ecg(&partial.to_ecg()).unwrap(), partial);
        assert_eq!(EdgeColoring::from_ecg("1 3\n").unwrap().order(), 1);
    }

    #[test]
    fn ecg_rejects_malformed() {
        for bad in [
            "4 2\n1 1 2\n1 2\n",
            "3 2\n1  1\n1\n",
            "3 2\n1 3\n1\n",
            "3 2\n1 1\n1\nextra\n",
            "3 2\r\n1 1\r\n1\r\n",
            "3\n",
        ] {
            assert!(
                matches!(EdgeColoring::from_ecg(bad), Err(Error::Parse { .. })),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn json_and_dot() {
        let cl = construct_critical(&params(&[2, 2]));
        let json = cl.to_json();
        assert_eq!(
            json,
            r#"{"n":4,"c":2,"edges":[[0,1,1],[0,2,1],[0,3,2],[1,2,1],[1,3,2],[2,3,2]]}"#
        );
        assert_eq!(EdgeColoring::from_json(&json).unwrap(), cl);
        let dot = cl.to_dot();
        assert!(dot.contains("0 -- 3 [color=\"blue\", label=\"2\"];"));
    }

    #[test]
    fn relabel() {
        let cl = construct_critical(&params(&[2, 2]));
        let swapped = cl.relabel_colors(&[2, 1]).unwrap();
        assert_eq!(swapped.color(0, 1), Some(2));
        assert!(cl.relabel_colors(&[1, 1]).is_err());
    }
}
