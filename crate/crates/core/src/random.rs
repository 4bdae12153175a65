//! Seeded random graphs and exhaustive small-graph enumeration for the
//! oracle cross-checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("pairs are in range and distinct")
}

/// `count` graphs with orders in `n_min..=n_max` and edge probabilities
/// drawn from `0.15..0.75`, reproducible from `seed`.
pub fn random_corpus(seed: u64, count: usize, n_min: usize, n_max: usize) -> Vec<Graph> {
    let mut rng = seeded_rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(n_min..=n_max);
            let p = rng.gen_range(0.15..0.75);
            gnp(n, p, &mut rng)
        })
        .collect()
}

/// Every labeled graph on `n` vertices (`2^(n(n-1)/2)` of them), `n <= 8`.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "enumeration limited to 8 vertices");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("valid pairs")
    })
}
