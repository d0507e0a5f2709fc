//! Shared inputs for the benchmarks.

use matchram::{Graph, GraphBuilder};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seeded `G(n, p)` samples.
pub fn random_graphs(count: usize, n: usize, p: f64, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let mut b = GraphBuilder::new(n);
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(p) {
                        b.add_edge(u, v).expect("in range");
                    }
                }
            }
            b.build()
        })
        .collect()
}
