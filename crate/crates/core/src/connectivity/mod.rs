//! Exact vertex- and edge-connectivity with Menger certificates.
//!
//! Local connectivities come from unit-capacity max-flow. Vertex versions
//! run on the split digraph (`v_in -> v_out` of capacity one per internal
//! vertex), edge versions on the bidirected graph. Separating sets are read
//! off the residual network after the last augmentation: the arcs leaving
//! the set reachable from the source.

mod brute;
mod flow;

use serde::{Deserialize, Serialize};

pub use brute::{brute_force_connectivity, subset_count, Mode, DEFAULT_CEILING};

use crate::error::{Error, Result};
use crate::graph::Graph;
use flow::FlowNet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    /// Complete graphs have no separating vertex set.
    None,
    Vertices(Vec<usize>),
    Edges(Vec<(usize, usize)>),
}

impl Witness {
    pub fn len(&self) -> usize {
        match self {
            Witness::None => 0,
            Witness::Vertices(v) => v.len(),
            Witness::Edges(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectivityResult {
    pub value: usize,
    pub witness: Witness,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PathMode {
    VertexDisjoint,
    EdgeDisjoint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathSystem {
    pub source: usize,
    pub target: usize,
    pub mode: PathMode,
    pub paths: Vec<Vec<usize>>,
}

impl PathSystem {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Direct scan: every path is an `s`–`t` path of `g` with distinct
    /// vertices, and the paths share no internal vertex (vertex mode) or no
    /// edge (edge mode).
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.order();
        let mut used_vertex = vec![false; n];
        let mut used_edge = std::collections::HashSet::new();
        for p in &self.paths {
            if p.len() < 2 || p[0] != self.source || p[p.len() - 1] != self.target {
                return false;
            }
            let mut seen = vec![false; n];
            for &v in p {
                if v >= n || std::mem::replace(&mut seen[v], true) {
                    return false;
                }
            }
            for w in p.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return false;
                }
                let e = (w[0].min(w[1]), w[0].max(w[1]));
                if self.mode == PathMode::EdgeDisjoint && !used_edge.insert(e) {
                    return false;
                }
            }
            if self.mode == PathMode::VertexDisjoint {
                if p.len() == 2 && !used_edge.insert((self.source, self.target)) {
                    return false;
                }
                for &v in &p[1..p.len() - 1] {
                    if std::mem::replace(&mut used_vertex[v], true) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn check_pair(g: &Graph, s: usize, t: usize) -> Result<()> {
    let n = g.order();
    if s >= n || t >= n {
        return Err(Error::invalid(format!("vertex out of range for order {n}")));
    }
    if s == t {
        return Err(Error::invalid("source and target coincide"));
    }
    Ok(())
}

/// Split digraph: `v_in = 2v`, `v_out = 2v + 1`. The endpoints get
/// unbounded node arcs; the edge `{s, t}` itself is left out.
fn split_network(g: &Graph, s: usize, t: usize) -> FlowNet {
    let n = g.order();
    let big = n as u32 + 1;
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        net.add_pair(2 * v, 2 * v + 1, c, 0);
    }
    for (u, v) in g.edges() {
        if (u == s && v == t) || (u == t && v == s) {
            continue;
        }
        net.add_pair(2 * u + 1, 2 * v, big, 0);
        net.add_pair(2 * v + 1, 2 * u, big, 0);
    }
    net
}

/// Bidirected network with unit capacity per edge in each direction.
fn edge_network(g: &Graph) -> FlowNet {
    let mut net = FlowNet::new(g.order());
    for (u, v) in g.edges() {
        net.add_pair(u, v, 1, 1);
    }
    net
}

/// Local vertex connectivity of a nonadjacent pair, stopping at `limit`.
/// Returns the flow value and, when the flow stayed below `limit`, the
/// minimum separator (sorted).
fn local_vertex_cut(g: &Graph, s: usize, t: usize, limit: u32) -> (u32, Option<Vec<usize>>) {
    let mut net = split_network(g, s, t);
    let value = net.max_flow(2 * s + 1, 2 * t, limit);
    if value >= limit {
        return (value, None);
    }
    let reach = net.residual_reach(2 * s + 1);
    let sep = (0..g.order())
        .filter(|&v| reach[2 * v] && !reach[2 * v + 1])
        .collect();
    (value, Some(sep))
}

fn local_edge_cut(g: &Graph, s: usize, t: usize, limit: u32) -> (u32, Option<Vec<(usize, usize)>>) {
    let mut net = edge_network(g);
    let value = net.max_flow(s, t, limit);
    if value >= limit {
        return (value, None);
    }
    let reach = net.residual_reach(s);
    let cut = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| reach[u] != reach[v])
        .collect();
    (value, Some(cut))
}

/// Maximum system of internally vertex-disjoint `s`–`t` paths. When `s`
/// and `t` are adjacent, the edge itself is one of the paths.
pub fn max_vertex_disjoint_paths(g: &Graph, s: usize, t: usize) -> Result<PathSystem> {
    check_pair(g, s, t)?;
    let mut net = split_network(g, s, t);
    net.max_flow(2 * s + 1, 2 * t, u32::MAX);
    let mut paths: Vec<Vec<usize>> = net
        .unit_paths(2 * s + 1, 2 * t)
        .into_iter()
        .map(|nodes| {
            let mut p: Vec<usize> = Vec::with_capacity(nodes.len() / 2 + 1);
            for x in nodes {
                if p.last() != Some(&(x / 2)) {
                    p.push(x / 2);
                }
            }
            p
        })
        .collect();
    if g.has_edge(s, t) {
        paths.insert(0, vec![s, t]);
    }
    Ok(PathSystem {
        source: s,
        target: t,
        mode: PathMode::VertexDisjoint,
        paths,
    })
}

/// Maximum system of pairwise edge-disjoint `s`–`t` paths.
pub fn max_edge_disjoint_paths(g: &Graph, s: usize, t: usize) -> Result<PathSystem> {
    check_pair(g, s, t)?;
    let mut net = edge_network(g);
    net.max_flow(s, t, u32::MAX);
    Ok(PathSystem {
        source: s,
        target: t,
        mode: PathMode::EdgeDisjoint,
        paths: net.unit_paths(s, t),
    })
}

/// Minimum vertex set separating the nonadjacent vertices `s` and `t`.
pub fn min_vertex_separator(g: &Graph, s: usize, t: usize) -> Result<Vec<usize>> {
    check_pair(g, s, t)?;
    if g.has_edge(s, t) {
        return Err(Error::invalid(format!("{s} and {t} are adjacent")));
    }
    Ok(local_vertex_cut(g, s, t, u32::MAX)
        .1
        .expect("unbounded flow yields a cut"))
}

/// Minimum edge set separating `s` from `t`.
pub fn min_edge_separator(g: &Graph, s: usize, t: usize) -> Result<Vec<(usize, usize)>> {
    check_pair(g, s, t)?;
    Ok(local_edge_cut(g, s, t, u32::MAX)
        .1
        .expect("unbounded flow yields a cut"))
}

fn min_degree_vertex(g: &Graph) -> usize {
    let d = g.min_degree();
    (0..g.order())
        .find(|&v| g.degree(v) == d)
        .expect("nonempty graph")
}

/// Vertex-connectivity `kappa`.
///
/// Conventions: graphs with at most one vertex and disconnected graphs give
/// 0 (the latter with an empty separator); `K_n` gives `n - 1` with no
/// witness. Otherwise, with `v0` the lowest-index vertex of minimum degree,
/// `kappa` is the minimum of `kappa(v0, t)` over `t` not adjacent to `v0`
/// and `kappa(u, w)` over nonadjacent pairs inside `N(v0)`.
pub fn vertex_connectivity(g: &Graph) -> ConnectivityResult {
    let n = g.order();
    if n <= 1 {
        return ConnectivityResult {
            value: 0,
            witness: Witness::None,
        };
    }
    if !g.is_connected() {
        return ConnectivityResult {
            value: 0,
            witness: Witness::Vertices(Vec::new()),
        };
    }
    if g.is_complete() {
        return ConnectivityResult {
            value: n - 1,
            witness: Witness::None,
        };
    }
    let v0 = min_degree_vertex(g);
    let nbrs: Vec<usize> = g.neighbors(v0).collect();
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .filter(|&t| t != v0 && !g.has_edge(v0, t))
        .map(|t| (v0, t))
        .collect();
    for (i, &u) in nbrs.iter().enumerate() {
        for &w in &nbrs[i + 1..] {
            if !g.has_edge(u, w) {
                pairs.push((u, w));
            }
        }
    }
    let mut best: Option<(u32, Vec<usize>)> = None;
    for (s, t) in pairs {
        let limit = best.as_ref().map_or(u32::MAX, |b| b.0);
        if let (value, Some(sep)) = local_vertex_cut(g, s, t, limit) {
            best = Some((value, sep));
        }
    }
    let (value, sep) = best.expect("non-complete graph has a nonadjacent pair");
    ConnectivityResult {
        value: value as usize,
        witness: Witness::Vertices(sep),
    }
}

/// Edge-connectivity `kappa'`: the minimum over `t != 0` of the local edge
/// connectivity between vertex 0 and `t`.
pub fn edge_connectivity(g: &Graph) -> ConnectivityResult {
    let n = g.order();
    if n <= 1 {
        return ConnectivityResult {
            value: 0,
            witness: Witness::None,
        };
    }
    if !g.is_connected() {
        return ConnectivityResult {
            value: 0,
            witness: Witness::Edges(Vec::new()),
        };
    }
    let mut best: Option<(u32, Vec<(usize, usize)>)> = None;
    for t in 1..n {
        let limit = best.as_ref().map_or(u32::MAX, |b| b.0);
        if let (value, Some(cut)) = local_edge_cut(g, 0, t, limit) {
            best = Some((value, cut));
        }
    }
    let (value, cut) = best.expect("at least two vertices");
    ConnectivityResult {
        value: value as usize,
        witness: Witness::Edges(cut),
    }
}

/// Smallest disconnecting edge set that uses only edges accepted by
/// `cuttable`; `None` when no such set exists.
pub fn min_restricted_edge_cut(
    g: &Graph,
    cuttable: impl Fn(usize, usize) -> bool,
) -> Option<ConnectivityResult> {
    let n = g.order();
    if n <= 1 {
        return None;
    }
    let edges = g.edges();
    let big = edges.len() as u32 + 1;
    let mut best: Option<(u32, Vec<(usize, usize)>)> = None;
    for t in 1..n {
        let mut net = FlowNet::new(n);
        for &(u, v) in &edges {
            let c = if cuttable(u, v) { 1 } else { big };
            net.add_pair(u, v, c, c);
        }
        let limit = best.as_ref().map_or(big, |b| b.0);
        let value = net.max_flow(0, t, limit);
        if value < limit {
            let reach = net.residual_reach(0);
            let cut = edges
                .iter()
                .copied()
                .filter(|&(u, v)| reach[u] != reach[v])
                .collect();
            best = Some((value, cut));
        }
    }
    best.map(|(value, cut)| ConnectivityResult {
        value: value as usize,
        witness: Witness::Edges(cut),
    })
}

/// Smallest edge set whose deletion leaves two components that each still
/// contain an edge, found by separating every pair of vertex-disjoint edges.
/// This is the vertex connectivity of the line graph whenever the line graph
/// is not complete. `None` when no two edges are vertex-disjoint.
pub fn nontrivial_edge_connectivity(g: &Graph) -> Option<ConnectivityResult> {
    let n = g.order();
    let edges = g.edges();
    let big = edges.len() as u32 + 1;
    let (src, snk) = (n, n + 1);
    let mut best: Option<(u32, Vec<(usize, usize)>)> = None;
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            let limit = best.as_ref().map_or(big, |x| x.0);
            if limit == 0 {
                break;
            }
            let mut net = FlowNet::new(n + 2);
            for &(u, v) in &edges {
                net.add_pair(u, v, 1, 1);
            }
            net.add_pair(src, a, big, 0);
            net.add_pair(src, b, big, 0);
            net.add_pair(c, snk, big, 0);
            net.add_pair(d, snk, big, 0);
            let value = net.max_flow(src, snk, limit);
            if value < limit {
                let reach = net.residual_reach(src);
                let cut = edges
                    .iter()
                    .copied()
                    .filter(|&(u, v)| reach[u] != reach[v])
                    .collect();
                best = Some((value, cut));
            }
        }
    }
    best.map(|(value, cut)| ConnectivityResult {
        value: value as usize,
        witness: Witness::Edges(cut),
    })
}

/// True iff deleting the witness leaves at least two components.
pub fn verify_disconnecting_set(g: &Graph, witness: &Witness) -> Result<bool> {
    let h = match witness {
        Witness::None => g.clone(),
        Witness::Vertices(vs) => g.delete_vertices(vs)?.0,
        Witness::Edges(es) => g.delete_edges(es)?,
    };
    Ok(h.components().count >= 2)
}
