//! Dense undirected simple graphs.
//!
//! A [`Graph`] is an immutable value: vertex `i` owns a bit row over
//! `0..n`, the rows are kept symmetric and the diagonal is always clear.
//! Every edit (`delete_vertices`, `delete_edges`, switching) returns a new
//! value, so a verification run can hold both sides of a comparison.

use std::collections::VecDeque;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<FixedBitSet>,
}

/// Connected-component labelling. Labels are assigned in order of the
/// smallest vertex of each component, so vertex 0 always has label 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    pub labels: Vec<usize>,
    pub count: usize,
}

impl ComponentPartition {
    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count];
        for &l in &self.labels {
            sizes[l] += 1;
        }
        sizes
    }

    pub fn members(&self, label: usize) -> Vec<usize> {
        self.labels
            .iter()
            .enumerate()
            .filter(|&(_, &l)| l == label)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn same(&self, u: usize, v: usize) -> bool {
        self.labels[u] == self.labels[v]
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            g.rows[u].insert_range(..);
            g.rows[u].set(u, false);
        }
        g
    }

    /// Complete bipartite graph with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.set_edge(u, v, true);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.set_edge(v - 1, v, true);
        }
        g
    }

    pub fn petersen() -> Self {
        // outer 5-cycle 0..5, inner pentagram 5..10, spokes i -- i+5
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
            edges.push((i, i + 5));
        }
        Graph::from_edges(10, edges).expect("petersen edges are valid")
    }

    /// Builds a graph from an edge list. Duplicate edges are merged;
    /// loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u},{v}) out of range for order {n}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Circulant graph on `Z_n`: `i ~ i ± j (mod n)` for every jump `j`.
    pub fn circulant(n: usize, jumps: &[usize]) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("circulant order must be positive"));
        }
        if jumps.is_empty() {
            return Err(Error::invalid("circulant jump set is empty"));
        }
        if let Some(j) = jumps.iter().find(|&&j| j % n == 0) {
            return Err(Error::invalid(format!("jump {j} is 0 mod {n}")));
        }
        let mut g = Graph::empty(n);
        for i in 0..n {
            for &j in jumps {
                g.set_edge(i, (i + j) % n, true);
            }
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, on: bool) {
        debug_assert!(u != v);
        self.rows[u].set(v, on);
        self.rows[v].set(u, on);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[v].ones()
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones(..)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// The common degree when the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|v| self.degree(v) == d).then_some(d)
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.rows[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Number of neighbours of `v` inside `set`.
    pub fn neighbors_in(&self, v: usize, set: &FixedBitSet) -> usize {
        self.rows[v].intersection(set).count()
    }

    /// Line graph. Vertex `i` of the result is the `i`-th edge of
    /// [`Graph::edges`], i.e. edges ordered by (min endpoint, max endpoint).
    pub fn line_graph(&self) -> Graph {
        let edges = self.edges();
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            incident[u].push(i);
            incident[v].push(i);
        }
        let mut lg = Graph::empty(edges.len());
        for inc in &incident {
            for (a, &e) in inc.iter().enumerate() {
                for &f in &inc[a + 1..] {
                    lg.set_edge(e, f, true);
                }
            }
        }
        lg
    }

    /// Induced subgraph on the complement of `removed`. Surviving vertices
    /// keep their relative order; the returned map sends old indices to new.
    pub fn delete_vertices(&self, removed: &[usize]) -> Result<(Graph, Vec<Option<usize>>)> {
        let mut gone = FixedBitSet::with_capacity(self.n);
        for &v in removed {
            if v >= self.n {
                return Err(Error::invalid(format!(
                    "vertex {v} out of range for order {}",
                    self.n
                )));
            }
            gone.insert(v);
        }
        let mut map = vec![None; self.n];
        let mut keep = Vec::with_capacity(self.n);
        for (v, slot) in map.iter_mut().enumerate() {
            if !gone.contains(v) {
                *slot = Some(keep.len());
                keep.push(v);
            }
        }
        Ok((self.induced(&keep), map))
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(a, b, true);
                }
            }
        }
        g
    }

    pub fn delete_edges(&self, removed: &[(usize, usize)]) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in removed {
            if u >= self.n || v >= self.n || u == v || !self.has_edge(u, v) {
                return Err(Error::invalid(format!("({u},{v}) is not an edge")));
            }
            g.set_edge(u, v, false);
        }
        Ok(g)
    }

    /// Vertex-disjoint union; `other` is numbered after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.set_edge(u, v, true);
        }
        for (u, v) in other.edges() {
            g.set_edge(self.n + u, self.n + v, true);
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::complete(self.n);
        for (u, v) in self.edges() {
            g.set_edge(u, v, false);
        }
        g
    }

    pub fn components(&self) -> ComponentPartition {
        const UNSEEN: usize = usize::MAX;
        let mut labels = vec![UNSEEN; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if labels[s] != UNSEEN {
                continue;
            }
            labels[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for v in self.rows[u].ones() {
                    if labels[v] == UNSEEN {
                        labels[v] = count;
                        queue.push_back(v);
                    }
                }
            }
            count += 1;
        }
        ComponentPartition { labels, count }
    }

    /// Connected means exactly one component; the null graph is not connected.
    pub fn is_connected(&self) -> bool {
        self.components().count == 1
    }

    /// Proper 2-colouring by breadth-first search, if one exists.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        let mut queue = VecDeque::new();
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for v in self.rows[u].ones() {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Apply a vertex permutation: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = FixedBitSet::with_capacity(self.n);
        if perm.len() != self.n {
            return Err(Error::invalid("permutation length differs from order"));
        }
        for &p in perm {
            if p >= self.n || seen.put(p) {
                return Err(Error::invalid("not a permutation"));
            }
        }
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.set_edge(perm[u], perm[v], true);
        }
        Ok(g)
    }

    /// Full scan of the structural invariants: symmetric rows, clear diagonal.
    pub fn check_invariants(&self) -> bool {
        self.rows.len() == self.n
            && (0..self.n).all(|u| {
                self.rows[u].len() == self.n
                    && !self.rows[u].contains(u)
                    && self.rows[u].ones().all(|v| self.rows[v].contains(u))
            })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}
