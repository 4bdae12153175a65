//! Exhaustive deletion-set search, the independent oracle for the flow
//! based connectivity routines. Graphs are held as `u64` adjacency masks,
//! so orders above 64 are refused.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Vertex,
    Edge,
}

pub const DEFAULT_CEILING: u128 = 20_000_000;

/// Number of subsets of size at most `budget` drawn from `universe` items.
pub fn subset_count(universe: usize, budget: usize) -> u128 {
    let mut total = 0u128;
    let mut binom = 1u128;
    for k in 0..=budget.min(universe) {
        total = total.saturating_add(binom);
        binom = binom * (universe - k) as u128 / (k + 1) as u128;
    }
    total
}

fn masks(g: &Graph) -> Vec<u64> {
    (0..g.order())
        .map(|v| g.neighbors(v).fold(0u64, |m, u| m | 1 << u))
        .collect()
}

/// True when the mask graph restricted to `alive` has two or more components.
fn splits(adj: &[u64], alive: u64) -> bool {
    if alive == 0 {
        return false;
    }
    let start = alive & alive.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & alive & !seen;
        seen |= new;
        frontier |= new;
    }
    seen != alive
}

/// Visit every `k`-subset of `0..n` as an index slice, in lexicographic
/// order, until `f` returns true.
fn any_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return true;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return false;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Size of the smallest vertex (or edge) set of size at most `budget` whose
/// deletion disconnects `g`, or `None` if no such set exists within the
/// budget. Refuses when more than `ceiling` subsets would be examined.
pub fn brute_force_connectivity(
    g: &Graph,
    mode: Mode,
    budget: usize,
    ceiling: u128,
) -> Result<Option<usize>> {
    let n = g.order();
    if n > 64 {
        return Err(Error::invalid(format!(
            "brute force limited to 64 vertices, got {n}"
        )));
    }
    let adj = masks(g);
    let all: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    match mode {
        Mode::Vertex => {
            let required = subset_count(n, budget);
            if required > ceiling {
                return Err(Error::EnumerationCeiling { required, ceiling });
            }
            for k in 0..=budget.min(n) {
                let hit = any_subset(n, k, |sub| {
                    let gone = sub.iter().fold(0u64, |m, &v| m | 1 << v);
                    splits(&adj, all & !gone)
                });
                if hit {
                    return Ok(Some(k));
                }
            }
            Ok(None)
        }
        Mode::Edge => {
            let edges = g.edges();
            let required = subset_count(edges.len(), budget);
            if required > ceiling {
                return Err(Error::EnumerationCeiling { required, ceiling });
            }
            let mut work = adj.clone();
            for k in 0..=budget.min(edges.len()) {
                let hit = any_subset(edges.len(), k, |sub| {
                    for &e in sub {
                        let (u, v) = edges[e];
                        work[u] &= !(1 << v);
                        work[v] &= !(1 << u);
                    }
                    let split = splits(&work, all);
                    for &e in sub {
                        let (u, v) = edges[e];
                        work[u] |= 1 << v;
                        work[v] |= 1 << u;
                    }
                    split
                });
                if hit {
                    return Ok(Some(k));
                }
            }
            Ok(None)
        }
    }
}
