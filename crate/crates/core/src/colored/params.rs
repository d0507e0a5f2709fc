use serde::Serialize;

use crate::error::{Error, Result};

/// Target matching sizes `n_1 >= n_2 >= ... >= n_c >= 1`; color `i` must avoid an `n_i`-matching.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct MatchParams {
    sizes: Vec<usize>,
}

impl MatchParams {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidParams("at least one color is required".into()));
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidParams("matching sizes must be positive".into()));
        }
        if sizes.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParams(format!("sizes {sizes:?} are not nonincreasing")));
        }
        Ok(MatchParams { sizes })
    }

    /// Sorts `sizes` nonincreasing first. The flag reports whether reordering was needed.
    pub fn sorted(mut sizes: Vec<usize>) -> Result<(Self, bool)> {
        let was_sorted = sizes.windows(2).all(|w| w[0] >= w[1]);
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Ok((MatchParams::new(sizes)?, !was_sorted))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Number of colors `c`.
    pub fn colors(&self) -> usize {
        self.sizes.len()
    }

    pub fn largest(&self) -> usize {
        self.sizes[0]
    }

    /// `n_i` for the 1-based color `i`.
    pub fn size_of(&self, color: usize) -> usize {
        self.sizes[color - 1]
    }

    /// Order of a critical coloring, `n_1 + Σ (n_i - 1)`.
    pub fn critical_order(&self) -> usize {
        self.largest() + self.sizes.iter().map(|n| n - 1).sum::<usize>()
    }
}

impl std::fmt::Display for MatchParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.sizes.iter().map(|n| n.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(MatchParams::new(vec![3, 2, 2]).is_ok());
        assert!(MatchParams::new(vec![]).is_err());
        assert!(MatchParams::new(vec![2, 0]).is_err());
        assert!(MatchParams::new(vec![2, 3]).is_err());
        let (p, reordered) = MatchParams::sorted(vec![2, 3]).unwrap();
        assert_eq!(p.sizes(), &[3, 2]);
        assert!(reordered);
        assert_eq!(p.critical_order(), 6);
        assert_eq!(p.to_string(), "(3,2)");
    }
}
