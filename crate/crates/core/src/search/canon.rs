//! Canonical forms of colorings of `K_n` under vertex and color permutations.
//!
//! A coloring is stored as a code: one byte per edge, colors `0..c`, edges in colex order
//! `(0,1), (0,2), (1,2), (0,3), ...`. Under that order the edges among the first `k`
//! vertices form a prefix, so a vertex permutation can be built one position at a time and
//! compared row by row. The canonical representative of an orbit is its lexicographically
//! smallest code.

use std::cmp::Ordering;

/// Position of edge `(u, v)`, `u < v`, in colex order.
#[inline]
pub(crate) fn edge_index(u: usize, v: usize) -> usize {
    debug_assert!(u < v);
    v * (v - 1) / 2 + u
}

#[inline]
fn code_color(code: &[u8], a: usize, b: usize) -> u8 {
    if a < b {
        code[edge_index(a, b)]
    } else {
        code[edge_index(b, a)]
    }
}

/// Permutations of the color alphabet allowed to act on codes.
#[derive(Clone, Debug)]
pub(crate) struct ColorGroup {
    perms: Vec<Vec<u8>>,
}

impl ColorGroup {
    pub(crate) fn trivial(colors: usize) -> Self {
        ColorGroup {
            perms: vec![(0..colors as u8).collect()],
        }
    }

    /// Permutations `σ` with `class[σ(i)] == class[i]` for every color `i`.
    pub(crate) fn preserving(class: &[usize]) -> Self {
        let c = class.len();
        let mut perms = Vec::new();
        let mut current = Vec::with_capacity(c);
        let mut used = vec![false; c];
        fn rec(class: &[usize], current: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Vec<u8>>) {
            let i = current.len();
            if i == class.len() {
                out.push(current.clone());
                return;
            }
            for j in 0..class.len() {
                if !used[j] && class[j] == class[i] {
                    used[j] = true;
                    current.push(j as u8);
                    rec(class, current, used, out);
                    current.pop();
                    used[j] = false;
                }
            }
        }
        rec(class, &mut current, &mut used, &mut perms);
        ColorGroup { perms }
    }

    pub(crate) fn full(colors: usize) -> Self {
        ColorGroup::preserving(&vec![0; colors])
    }

    #[cfg(test)]
    pub(crate) fn len(&self) -> usize {
        self.perms.len()
    }
}

struct Backtrack<'a> {
    code: &'a [u8],
    n: usize,
    sigma: &'a [u8],
    tau: Vec<usize>,
    used: Vec<bool>,
}

impl Backtrack<'_> {
    /// Whether some completion of `tau[..b]` maps the code to a smaller one, given that
    /// rows `0..b` of the image already equal the code.
    fn smaller_exists(&mut self, b: usize) -> bool {
        if b == self.n {
            return false;
        }
        for cand in 0..self.n {
            if self.used[cand] {
                continue;
            }
            let mut ord = Ordering::Equal;
            for a in 0..b {
                let img = self.sigma[code_color(self.code, self.tau[a], cand) as usize];
                let cur = self.code[edge_index(a, b)];
                ord = img.cmp(&cur);
                if ord != Ordering::Equal {
                    break;
                }
            }
            match ord {
                Ordering::Less => return true,
                Ordering::Greater => continue,
                Ordering::Equal => {
                    self.tau[b] = cand;
                    self.used[cand] = true;
                    let found = self.smaller_exists(b + 1);
                    self.used[cand] = false;
                    if found {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Whether `code` (a coloring of `K_n`) is the smallest code in its orbit.
pub(crate) fn is_canonical(code: &[u8], n: usize, group: &ColorGroup) -> bool {
    debug_assert_eq!(code.len(), n * n.saturating_sub(1) / 2);
    group.perms.iter().all(|sigma| {
        let mut bt = Backtrack {
            code,
            n,
            sigma,
            tau: vec![0; n],
            used: vec![false; n],
        };
        !bt.smaller_exists(0)
    })
}

/// The smallest code in the orbit of `code`.
pub(crate) fn canonical_form(code: &[u8], n: usize, group: &ColorGroup) -> Vec<u8> {
    struct Min<'a> {
        code: &'a [u8],
        n: usize,
        sigma: &'a [u8],
        tau: Vec<usize>,
        used: Vec<bool>,
        img: Vec<u8>,
        best: Vec<u8>,
    }
    impl Min<'_> {
        fn go(&mut self, b: usize) {
            let len = b * b.saturating_sub(1) / 2;
            if self.img[..len] > self.best[..len] {
                return;
            }
            if b == self.n {
                if self.img < self.best {
                    self.best.copy_from_slice(&self.img);
                }
                return;
            }
            for cand in 0..self.n {
                if self.used[cand] {
                    continue;
                }
                for a in 0..b {
                    self.img[edge_index(a, b)] = self.sigma[code_color(self.code, self.tau[a], cand) as usize];
                }
                self.tau[b] = cand;
                self.used[cand] = true;
                self.go(b + 1);
                self.used[cand] = false;
            }
        }
    }
    let mut best = code.to_vec();
    for sigma in &group.perms {
        let mut m = Min {
            code,
            n,
            sigma,
            tau: vec![0; n],
            used: vec![false; n],
            img: vec![0; code.len()],
            best,
        };
        m.go(0);
        best = m.best;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colex_positions() {
        assert_eq!(edge_index(0, 1), 0);
        assert_eq!(edge_index(0, 2), 1);
        assert_eq!(edge_index(1, 2), 2);
        assert_eq!(edge_index(0, 3), 3);
        assert_eq!(edge_index(2, 3), 5);
    }

    #[test]
    fn groups() {
        assert_eq!(ColorGroup::full(3).len(), 6);
        assert_eq!(ColorGroup::preserving(&[3, 2, 2]).len(), 2);
        assert_eq!(ColorGroup::trivial(4).len(), 1);
    }

    #[test]
    fn triangle_codes() {
        // K3 with two colors, full symmetry: canonical codes are 000 and 001
        let g = ColorGroup::full(2);
        let canon: Vec<_> = (0u8..8)
            .map(|m| vec![m & 1, m >> 1 & 1, m >> 2 & 1])
            .filter(|c| is_canonical(c, 3, &g))
            .collect();
        assert_eq!(canon, vec![vec![0, 0, 0], vec![0, 0, 1]]);
        for m in 0u8..8 {
            let c = vec![m & 1, m >> 1 & 1, m >> 2 & 1];
            let f = canonical_form(&c, 3, &g);
            assert!(is_canonical(&f, 3, &g));
        }
    }
}
