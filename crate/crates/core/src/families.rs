//! Generators for the cospectral pairs: the vertex-connectivity family on
//! `6k` vertices, the edge-connectivity family on `10k - 8` vertices, its
//! order-36 variant at `k = 4`, and line graphs of any of these.
//!
//! Vertex orders follow the partitioned adjacency matrices exactly, so
//! positional roles such as `x1`, `x2`, `y` or "the first `k + 1` vertices"
//! are stable indices.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::blocks::{from_blocks, BlockSpec, Cell, Matrix01};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::switching::{switch, SwitchingPlan};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilyTag {
    Vertex,
    Edge,
    EdgeVariant4,
    LineOf(Box<FamilyTag>),
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyTag::Vertex => f.write_str("vertex"),
            FamilyTag::Edge => f.write_str("edge"),
            FamilyTag::EdgeVariant4 => f.write_str("edge-variant4"),
            FamilyTag::LineOf(inner) => write!(f, "line-of-{inner}"),
        }
    }
}

impl FromStr for FamilyTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "vertex" => Ok(FamilyTag::Vertex),
            "edge" => Ok(FamilyTag::Edge),
            "edge-variant4" => Ok(FamilyTag::EdgeVariant4),
            _ => match s.strip_prefix("line-of-") {
                Some(rest) => Ok(FamilyTag::LineOf(Box::new(rest.parse()?))),
                None => Err(Error::invalid(format!(
                    "unknown family {s:?} (expected vertex, edge, edge-variant4 or line-of-<family>)"
                ))),
            },
        }
    }
}

impl Serialize for FamilyTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FamilyTag {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Claimed values for a pair. `None` marks a value the construction does
/// not state; such values are reported but never judged.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedMetrics {
    pub order: Option<usize>,
    pub degree: Option<usize>,
    pub kappa_gamma: Option<usize>,
    pub kappa_gamma_prime: Option<usize>,
    pub kappa_prime_gamma: Option<usize>,
    pub kappa_prime_gamma_prime: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct FamilyInstance {
    pub tag: FamilyTag,
    pub k: usize,
    pub gamma: Graph,
    pub gamma_prime: Graph,
    /// Absent for line-graph pairs, which are not related by a switch.
    pub plan: Option<SwitchingPlan>,
    /// Single special vertices, e.g. `x1`, `x2`, `y`.
    pub named: BTreeMap<String, usize>,
    /// Named vertex classes as half-open index ranges.
    pub ranges: BTreeMap<String, Range<usize>>,
    pub expected: ExpectedMetrics,
}

#[derive(Serialize)]
struct Meta<'a> {
    family: &'a FamilyTag,
    k: usize,
    order: usize,
    degree: Option<usize>,
    named: &'a BTreeMap<String, usize>,
    ranges: BTreeMap<&'a str, [usize; 2]>,
    expected: &'a ExpectedMetrics,
}

impl FamilyInstance {
    /// Two graph6 lines, `gamma` first, each newline-terminated.
    pub fn graph6_lines(&self) -> String {
        format!(
            "{}\n{}\n",
            encode_graph6(&self.gamma),
            encode_graph6(&self.gamma_prime)
        )
    }

    pub fn plan_json(&self) -> Option<String> {
        self.plan.as_ref().map(SwitchingPlan::to_json)
    }

    pub fn named_json(&self) -> String {
        serde_json::to_string(&self.named).expect("named vertices serialize")
    }

    pub fn expected_json(&self) -> String {
        serde_json::to_string(&self.expected).expect("metrics serialize")
    }

    /// Descriptor, named vertices, class ranges and expected metrics.
    pub fn meta_json(&self) -> String {
        let meta = Meta {
            family: &self.tag,
            k: self.k,
            order: self.gamma.order(),
            degree: self.gamma.regular_degree(),
            named: &self.named,
            ranges: self
                .ranges
                .iter()
                .map(|(k, r)| (k.as_str(), [r.start, r.end]))
                .collect(),
            expected: &self.expected,
        };
        serde_json::to_string_pretty(&meta).expect("meta serializes")
    }

    pub fn range(&self, name: &str) -> Range<usize> {
        self.ranges.get(name).cloned().unwrap_or(0..0)
    }

    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.named.get(name).copied()
    }
}

fn ranges_from(names: &[&str], bounds: &[Range<usize>]) -> BTreeMap<String, Range<usize>> {
    names
        .iter()
        .zip(bounds)
        .map(|(n, r)| (n.to_string(), r.clone()))
        .collect()
}

/// The `k`-regular circulant on `3k - 1` vertices with jumps `k..2k`,
/// relabelled into the order `V0 = {0}`, `V1 = {k..2k-1}`, `V2 = {1..k-1}`,
/// `V3 = {2k..3k-2}`. Returns the graph, the four class ranges, and the
/// relabelling (`perm[old] = new`).
pub fn base_circulant_g(k: usize) -> Result<(Graph, Vec<Range<usize>>, Vec<usize>)> {
    if k < 2 {
        return Err(Error::invalid(format!("k must be at least 2, got {k}")));
    }
    let n = 3 * k - 1;
    let jumps: Vec<usize> = (k..2 * k).collect();
    let g = Graph::circulant(n, &jumps)?;
    let order: Vec<usize> = std::iter::once(0)
        .chain(k..2 * k)
        .chain(1..k)
        .chain(2 * k..n)
        .collect();
    let mut perm = vec![0; n];
    for (new, &old) in order.iter().enumerate() {
        perm[old] = new;
    }
    let classes = vec![0..1, 1..k + 1, k + 1..2 * k, 2 * k..n];
    Ok((g.relabel(&perm)?, classes, perm))
}

/// The `V2`-`V3` matching `(i, i + 2k - 1)`, `i = 1..k-1`, in the relabelled
/// indices of [`base_circulant_g`].
pub fn base_matching(k: usize) -> Result<Vec<(usize, usize)>> {
    let (_, _, perm) = base_circulant_g(k)?;
    Ok((1..k).map(|i| (perm[i], perm[i + 2 * k - 1])).collect())
}

fn vertex_blocks(k: usize, switched: bool) -> Result<(Graph, Vec<Range<usize>>)> {
    let (g, _, _) = base_circulant_g(k)?;
    let b = Matrix01::adjacency(&g);
    // N = [I_{k+1}; J_{k-1,k+1}]
    let n_block = Matrix01::vcat(&[Matrix01::identity(k + 1), Matrix01::ones(k - 1, k + 1)])?;
    // K = [O_{k,k-1}; J_{k,k-1}]
    let k_block = Matrix01::vcat(&[Matrix01::zeros(k, k - 1), Matrix01::ones(k, k - 1)])?;
    let m_block = Matrix01::hcat(&[n_block.complement(), k_block.clone(), k_block.complement()])?;
    let (n_block, m_block) = if switched {
        (n_block.complement(), m_block.complement())
    } else {
        (n_block, m_block)
    };
    let spec = BlockSpec::square(
        vec![2 * k, k + 1, 3 * k - 1],
        vec![
            vec![
                Cell::Zero,
                Cell::Explicit(n_block.clone()),
                Cell::Explicit(m_block.clone()),
            ],
            vec![
                Cell::Explicit(n_block.transpose()),
                Cell::AllOnesMinusIdentity,
                Cell::Zero,
            ],
            vec![
                Cell::Explicit(m_block.transpose()),
                Cell::Zero,
                Cell::Explicit(b),
            ],
        ],
    );
    from_blocks(&spec)
}

/// The `2k`-regular pair of order `6k` with vertex connectivities `2k` and
/// `k + 1`. Order: `X` (2k), `U` (k+1), `V` (3k-1, as `V0 V1 V2 V3`).
pub fn vertex_pair(k: usize) -> Result<FamilyInstance> {
    if k < 2 {
        return Err(Error::invalid(format!("k must be at least 2, got {k}")));
    }
    let (gamma, bounds) = vertex_blocks(k, false)?;
    let x = bounds[0].clone();
    let plan = SwitchingPlan::new(gamma.order(), vec![x.clone().collect()]);
    let gamma_prime = switch(&gamma, &plan)?;
    let v0 = bounds[2].start;
    let mut ranges = ranges_from(&["X", "U", "V"], &bounds);
    ranges.insert("V0".into(), v0..v0 + 1);
    ranges.insert("V1".into(), v0 + 1..v0 + k + 1);
    ranges.insert("V2".into(), v0 + k + 1..v0 + 2 * k);
    ranges.insert("V3".into(), v0 + 2 * k..v0 + 3 * k - 1);
    Ok(FamilyInstance {
        tag: FamilyTag::Vertex,
        k,
        gamma,
        gamma_prime,
        plan: Some(plan),
        named: BTreeMap::new(),
        ranges,
        expected: ExpectedMetrics {
            order: Some(6 * k),
            degree: Some(2 * k),
            kappa_gamma: Some(2 * k),
            kappa_gamma_prime: Some(k + 1),
            kappa_prime_gamma: None,
            kappa_prime_gamma_prime: None,
        },
    })
}

/// The first `k + 1` vertices of the switched vertex pair, whose deletion
/// leaves the clique on `U` as its own component.
pub fn vertex_pair_witness(k: usize) -> Vec<usize> {
    (0..k + 1).collect()
}

/// Replacement graphs for the two regular pieces of the `Y` side of the
/// edge pair. Overrides must have the same order and degree as the default.
#[derive(Clone, Debug, Default)]
pub struct EdgePairOptions {
    pub h1: Option<Graph>,
    pub h2: Option<Graph>,
}

fn regular_piece(order: usize, degree: usize) -> Result<Graph> {
    if degree == 0 {
        return Ok(Graph::empty(order));
    }
    let jumps: Vec<usize> = (1..=degree / 2).collect();
    Graph::circulant(order, &jumps)
}

fn check_override(name: &str, g: Option<Graph>, order: usize, degree: usize) -> Result<Graph> {
    match g {
        None => regular_piece(order, degree),
        Some(g) => {
            if g.order() != order || (order > 0 && g.regular_degree() != Some(degree)) {
                return Err(Error::invalid(format!(
                    "{name} must be {degree}-regular of order {order}, got order {} with degrees {}..{}",
                    g.order(),
                    g.min_degree(),
                    g.max_degree()
                )));
            }
            Ok(g)
        }
    }
}

/// `L = [J_{k-1} O; O J_{k+1} - C_{k+1}]`.
fn cross_block(k: usize) -> Result<Matrix01> {
    BlockSpec::square(
        vec![k - 1, k + 1],
        vec![
            vec![Cell::AllOnes, Cell::Zero],
            vec![Cell::Zero, Cell::AllOnesMinusCycle],
        ],
    )
    .assemble()
}

/// `X`-to-`Y` adjacency: rows are the four halves of `X_1`, `X_2` (each of
/// size `k`), columns are four blocks of width `k - 2` then the rest of `Y`.
/// `pattern[r]` names the column block that row block `r` is joined to.
fn xy_block(k: usize, y_len: usize, pattern: [usize; 4]) -> Result<Matrix01> {
    let w = k - 2;
    let cells = pattern
        .iter()
        .map(|&c| {
            (0..5)
                .map(|j| if j == c { Cell::AllOnes } else { Cell::Zero })
                .collect()
        })
        .collect();
    BlockSpec {
        row_classes: vec![k; 4],
        col_classes: vec![w, w, w, w, y_len - 4 * w],
        cells,
    }
    .assemble()
}

const GAMMA_PATTERN: [usize; 4] = [1, 2, 0, 3];
#[cfg(test)]
const GAMMA_PRIME_PATTERN: [usize; 4] = [2, 1, 3, 0];

/// Assemble `[[A1, L, M1], [L^T, A2, M2], [M1^T, M2^T, B]]`.
fn edge_blocks(k: usize, b: &Matrix01, pattern: [usize; 4]) -> Result<Graph> {
    let l = cross_block(k)?;
    let a = Matrix01::from_fn(2 * k, 2 * k, |i, j| i != j && l.get(i, j));
    let m = xy_block(k, b.rows(), pattern)?;
    let m1 = Matrix01::from_fn(2 * k, b.rows(), |i, j| m.get(i, j));
    let m2 = Matrix01::from_fn(2 * k, b.rows(), |i, j| m.get(2 * k + i, j));
    let spec = BlockSpec::square(
        vec![2 * k, 2 * k, b.rows()],
        vec![
            vec![
                Cell::Explicit(a.clone()),
                Cell::Explicit(l.clone()),
                Cell::Explicit(m1.clone()),
            ],
            vec![
                Cell::Explicit(l.transpose()),
                Cell::Explicit(a),
                Cell::Explicit(m2.clone()),
            ],
            vec![
                Cell::Explicit(m1.transpose()),
                Cell::Explicit(m2.transpose()),
                Cell::Explicit(b.clone()),
            ],
        ],
    );
    Ok(from_blocks(&spec)?.0)
}

fn edge_instance(
    tag: FamilyTag,
    k: usize,
    b: Matrix01,
    y_ranges: &[(&str, Range<usize>)],
    expected: ExpectedMetrics,
) -> Result<FamilyInstance> {
    let gamma = edge_blocks(k, &b, GAMMA_PATTERN)?;
    let n = gamma.order();
    let plan = SwitchingPlan::new(n, vec![(0..2 * k).collect(), (2 * k..4 * k).collect()]);
    let gamma_prime = switch(&gamma, &plan)?;
    let mut ranges = BTreeMap::new();
    for (name, r) in [
        ("X1", 0..2 * k),
        ("X11", 0..k - 1),
        ("X12", k - 1..2 * k),
        ("X2", 2 * k..4 * k),
        ("X21", 2 * k..3 * k - 1),
        ("X22", 3 * k - 1..4 * k),
        ("Y", 4 * k..n),
    ] {
        ranges.insert(name.to_string(), r);
    }
    for (name, r) in y_ranges {
        ranges.insert(name.to_string(), 4 * k + r.start..4 * k + r.end);
    }
    let named = BTreeMap::from([
        ("x1".to_string(), k - 1),
        ("x2".to_string(), 3 * k - 1),
        ("y".to_string(), 4 * k + 2 * k - 4),
    ]);
    Ok(FamilyInstance {
        tag,
        k,
        gamma,
        gamma_prime,
        plan: Some(plan),
        named,
        ranges,
        expected,
    })
}

/// The `(3k-5)`-regular pair of order `10k - 8` with edge connectivities
/// `3k - 5` and `3k - 6`, for even `k >= 6`.
pub fn edge_pair(k: usize) -> Result<FamilyInstance> {
    edge_pair_with(k, EdgePairOptions::default())
}

/// [`edge_pair`] with optional replacements for `H1` and `H2`. The defaults
/// are the circulants with jumps `1..=(k-4)/2` and `1..=(k-6)/2`.
pub fn edge_pair_with(k: usize, opts: EdgePairOptions) -> Result<FamilyInstance> {
    if k < 6 || k % 2 == 1 {
        return Err(Error::invalid(format!("k must be even and ≥ 6, got {k}")));
    }
    let h1 = check_override("H1", opts.h1, 2 * k - 3, k - 4)?;
    let h2 = check_override("H2", opts.h2, 2 * k - 5, k - 6)?;
    let (s1, s2) = (2 * k - 3, 2 * k - 5);
    let b = BlockSpec::square(
        vec![s1, s2, k - 1, k + 1],
        vec![
            vec![Cell::from_graph(&h1), Cell::Zero, Cell::AllOnes, Cell::Zero],
            vec![Cell::Zero, Cell::from_graph(&h2), Cell::Zero, Cell::AllOnes],
            vec![
                Cell::AllOnes,
                Cell::Zero,
                Cell::AllOnesMinusIdentity,
                Cell::Zero,
            ],
            vec![
                Cell::Zero,
                Cell::AllOnes,
                Cell::Zero,
                Cell::AllOnesMinusIdentity,
            ],
        ],
    )
    .assemble()?;
    let o = s1 + s2;
    edge_instance(
        FamilyTag::Edge,
        k,
        b,
        &[
            ("H1", 0..s1),
            ("H2", s1..o),
            ("Kkm1", o..o + k - 1),
            ("Kkp1", o + k - 1..o + 2 * k),
        ],
        ExpectedMetrics {
            order: Some(10 * k - 8),
            degree: Some(3 * k - 5),
            kappa_gamma: Some(3),
            kappa_gamma_prime: Some(3),
            kappa_prime_gamma: Some(3 * k - 5),
            kappa_prime_gamma_prime: Some(3 * k - 6),
        },
    )
}

/// The 12-vertex graph `[[O, I, I, I], [I, J-I, J-I, J-I] x 3]` on 3x3 cells.
pub fn variant4_replacement() -> Graph {
    let mut cells = vec![vec![
        Cell::Zero,
        Cell::Identity,
        Cell::Identity,
        Cell::Identity,
    ]];
    for _ in 0..3 {
        cells.push(vec![
            Cell::Identity,
            Cell::AllOnesMinusIdentity,
            Cell::AllOnesMinusIdentity,
            Cell::AllOnesMinusIdentity,
        ]);
    }
    from_blocks(&BlockSpec::square(vec![3; 4], cells))
        .expect("replacement layout is symmetric")
        .0
}

/// The 7-regular pair of order 36 with edge connectivities 7 and 6: the
/// `k = 4` construction with the component holding `H2` replaced by
/// [`variant4_replacement`]. `Y` is ordered `H1` (5, edgeless), the
/// replacement `R` (12), then `K_3`; the first three vertices of `R` take
/// the `X`-adjacencies that `H2` would have had.
pub fn edge_pair_variant4() -> Result<FamilyInstance> {
    let k = 4;
    let r = variant4_replacement();
    let b = BlockSpec::square(
        vec![5, 12, 3],
        vec![
            vec![Cell::Zero, Cell::Zero, Cell::AllOnes],
            vec![Cell::Zero, Cell::from_graph(&r), Cell::Zero],
            vec![Cell::AllOnes, Cell::Zero, Cell::AllOnesMinusIdentity],
        ],
    )
    .assemble()?;
    edge_instance(
        FamilyTag::EdgeVariant4,
        k,
        b,
        &[("H1", 0..5), ("H2", 5..8), ("R", 5..17), ("Kkm1", 17..20)],
        ExpectedMetrics {
            order: Some(36),
            degree: Some(7),
            kappa_gamma: None,
            kappa_gamma_prime: None,
            kappa_prime_gamma: Some(7),
            kappa_prime_gamma_prime: Some(6),
        },
    )
}

/// The edges between `y` and `X_{1,2}` plus those between `{x1, x2}` and
/// `H1`: a `3k - 4` edge cut of `gamma` using only `X`-`Y` edges.
pub fn edge_pair_gamma_cut(fi: &FamilyInstance) -> Vec<(usize, usize)> {
    cut_edges(fi, &fi.gamma, "H1", "X12")
}

/// The edges between `{x1, x2}` and `H2` plus those between `y` and
/// `X_{1,1}`: a `3k - 6` edge cut of `gamma_prime`.
pub fn edge_pair_gamma_prime_cut(fi: &FamilyInstance) -> Vec<(usize, usize)> {
    cut_edges(fi, &fi.gamma_prime, "H2", "X11")
}

fn cut_edges(fi: &FamilyInstance, g: &Graph, h: &str, side: &str) -> Vec<(usize, usize)> {
    let (Some(x1), Some(x2), Some(y)) = (fi.vertex("x1"), fi.vertex("x2"), fi.vertex("y")) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for x in [x1, x2] {
        out.extend(
            fi.range(h)
                .filter(|&v| g.has_edge(x, v))
                .map(|v| (x.min(v), x.max(v))),
        );
    }
    out.extend(
        fi.range(side)
            .filter(|&v| g.has_edge(y, v))
            .map(|v| (y.min(v), y.max(v))),
    );
    out.sort_unstable();
    out
}

/// Line graphs of a regular pair. Expected vertex connectivities are the
/// input's edge connectivities.
pub fn line_graph_family(fi: &FamilyInstance) -> Result<FamilyInstance> {
    let Some(d) = fi
        .gamma
        .regular_degree()
        .filter(|_| fi.gamma_prime.regular_degree().is_some())
    else {
        return Err(Error::invalid("line_graph_family needs a regular pair"));
    };
    let gamma = fi.gamma.line_graph();
    let gamma_prime = fi.gamma_prime.line_graph();
    Ok(FamilyInstance {
        tag: FamilyTag::LineOf(Box::new(fi.tag.clone())),
        k: fi.k,
        expected: ExpectedMetrics {
            order: Some(gamma.order()),
            degree: Some((2 * d).saturating_sub(2)),
            kappa_gamma: fi.expected.kappa_prime_gamma,
            kappa_gamma_prime: fi.expected.kappa_prime_gamma_prime,
            kappa_prime_gamma: None,
            kappa_prime_gamma_prime: None,
        },
        gamma,
        gamma_prime,
        plan: None,
        named: BTreeMap::new(),
        ranges: BTreeMap::new(),
    })
}

/// Build an instance by tag. For line families at `k = 4` the edge family
/// means the order-36 variant.
pub fn build(tag: &FamilyTag, k: Option<usize>) -> Result<FamilyInstance> {
    let need_k = || k.ok_or_else(|| Error::invalid(format!("family {tag} needs k")));
    match tag {
        FamilyTag::Vertex => vertex_pair(need_k()?),
        FamilyTag::Edge => match k {
            Some(4) => Err(Error::invalid(
                "k must be even and ≥ 6, got 4 (use edge-variant4 for k = 4)",
            )),
            _ => edge_pair(need_k()?),
        },
        FamilyTag::EdgeVariant4 => match k {
            None | Some(4) => edge_pair_variant4(),
            Some(k) => Err(Error::invalid(format!("edge-variant4 has k = 4, got {k}"))),
        },
        FamilyTag::LineOf(inner) => {
            let base = match (inner.as_ref(), k) {
                (FamilyTag::Edge, Some(4)) => edge_pair_variant4()?,
                _ => build(inner, k)?,
            };
            line_graph_family(&base)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::switching::validate_plan;

    #[test]
    fn base_graph_small_cases() {
        let (g, classes, _) = base_circulant_g(2).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.regular_degree(), Some(2));
        assert!(g.is_connected());
        let (g, classes3, _) = base_circulant_g(3).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.regular_degree(), Some(3));
        // V1 is the neighbourhood of V0
        let n0: Vec<usize> = g.neighbors(0).collect();
        assert_eq!(n0, classes3[1].clone().collect::<Vec<_>>());
        assert_eq!(classes.len(), 4);
        assert!(base_circulant_g(1).is_err());
    }

    #[test]
    fn base_matching_is_v2_v3() {
        let k = 5;
        let (g, classes, _) = base_circulant_g(k).unwrap();
        let m = base_matching(k).unwrap();
        assert_eq!(m.len(), k - 1);
        for &(a, b) in &m {
            assert!(classes[2].contains(&a) && classes[3].contains(&b));
            assert!(g.has_edge(a, b));
        }
    }

    #[test]
    fn vertex_pair_shape() {
        for k in 2..=4 {
            let fi = vertex_pair(k).unwrap();
            assert_eq!(fi.gamma.order(), 6 * k);
            assert_eq!(fi.gamma.regular_degree(), Some(2 * k));
            assert_eq!(fi.gamma_prime.regular_degree(), Some(2 * k));
            let plan = fi.plan.as_ref().unwrap();
            assert!(validate_plan(&fi.gamma, plan).unwrap().valid);
            // switching is N -> J - N and M -> J - M
            assert_eq!(fi.gamma_prime, vertex_blocks(k, true).unwrap().0);
            // X is independent; every other vertex sees exactly k of X
            let x = fi.range("X");
            for v in 0..6 * k {
                let inside = x.clone().filter(|&u| fi.gamma.has_edge(u, v)).count();
                assert_eq!(inside, if x.contains(&v) { 0 } else { k });
            }
        }
    }

    #[test]
    fn vertex_pair_witness_isolates_u() {
        let k = 3;
        let fi = vertex_pair(k).unwrap();
        let (h, map) = fi
            .gamma_prime
            .delete_vertices(&vertex_pair_witness(k))
            .unwrap();
        let parts = h.components();
        assert_eq!(parts.count, 2);
        let u: Vec<usize> = fi.range("U").map(|v| map[v].unwrap()).collect();
        let label = parts.labels[u[0]];
        assert_eq!(parts.members(label), u);
    }

    #[test]
    fn edge_pair_degree_audit() {
        for k in [6, 8] {
            let fi = edge_pair(k).unwrap();
            let g = &fi.gamma;
            assert_eq!(g.order(), 10 * k - 8);
            assert_eq!(g.regular_degree(), Some(3 * k - 5));
            assert_eq!(fi.gamma_prime.regular_degree(), Some(3 * k - 5));
            assert!(validate_plan(g, fi.plan.as_ref().unwrap()).unwrap().valid);
            let count = |v: usize, r: Range<usize>| r.filter(|&u| g.has_edge(u, v)).count();
            let x = 0..4 * k;
            let y = fi.range("Y");
            for v in x.clone() {
                assert_eq!(
                    (count(v, x.clone()), count(v, y.clone())),
                    (2 * k - 3, k - 2)
                );
            }
            for v in fi.range("H1").chain(fi.range("H2")) {
                assert_eq!((count(v, y.clone()), count(v, x.clone())), (2 * k - 5, k));
            }
            for v in fi.range("Kkm1").chain(fi.range("Kkp1")) {
                assert_eq!((count(v, y.clone()), count(v, x.clone())), (3 * k - 5, 0));
            }
            let yl: Vec<usize> = y.collect();
            assert_eq!(g.induced(&yl).components().count, 2);
        }
    }

    #[test]
    fn edge_pair_named_cuts() {
        let k = 6;
        let fi = edge_pair(k).unwrap();
        assert_eq!(fi.vertex("y"), Some(fi.range("H1").end - 1));
        assert_eq!(fi.vertex("x1"), Some(fi.range("X12").start));
        assert_eq!(fi.vertex("x2"), Some(fi.range("X22").start));
        let cut = edge_pair_gamma_prime_cut(&fi);
        assert_eq!(cut.len(), 3 * k - 6);
        assert!(!fi.gamma_prime.delete_edges(&cut).unwrap().is_connected());
        let cut = edge_pair_gamma_cut(&fi);
        assert_eq!(cut.len(), 3 * k - 4);
        assert!(!fi.gamma.delete_edges(&cut).unwrap().is_connected());
        let trio = [
            fi.vertex("x1").unwrap(),
            fi.vertex("x2").unwrap(),
            fi.vertex("y").unwrap(),
        ];
        for g in [&fi.gamma, &fi.gamma_prime] {
            assert!(!g.delete_vertices(&trio).unwrap().0.is_connected());
        }
    }

    #[test]
    fn switch_matches_displayed_primed_blocks() {
        let mut instances = vec![edge_pair(6).unwrap(), edge_pair(8).unwrap()];
        instances.push(edge_pair_variant4().unwrap());
        for fi in instances {
            let y: Vec<usize> = fi.range("Y").collect();
            let b = Matrix01::adjacency(&fi.gamma.induced(&y));
            let want = edge_blocks(fi.k, &b, GAMMA_PRIME_PATTERN).unwrap();
            assert_eq!(fi.gamma_prime, want, "{}", fi.tag);
        }
    }

    #[test]
    fn edge_pair_rejects_bad_k() {
        for k in [0, 4, 5, 7] {
            let msg = edge_pair(k).unwrap_err().to_string();
            assert!(msg.contains("k must be even and ≥ 6"), "{msg}");
        }
    }

    #[test]
    fn overrides_are_validated() {
        let bad = EdgePairOptions {
            h1: Some(Graph::empty(9)),
            h2: None,
        };
        assert!(edge_pair_with(6, bad).is_err());
        let same = EdgePairOptions {
            h1: Some(Graph::circulant(9, &[1]).unwrap()),
            h2: None,
        };
        assert_eq!(
            edge_pair_with(6, same).unwrap().gamma,
            edge_pair(6).unwrap().gamma
        );
    }

    #[test]
    fn variant_shape() {
        let r = variant4_replacement();
        let d = r.degrees();
        assert_eq!(&d[..3], &[3, 3, 3]);
        assert!(d[3..].iter().all(|&x| x == 7));
        let fi = edge_pair_variant4().unwrap();
        assert_eq!(fi.gamma.order(), 36);
        assert_eq!(fi.gamma.regular_degree(), Some(7));
        assert_eq!(fi.gamma_prime.regular_degree(), Some(7));
        assert!(
            validate_plan(&fi.gamma, fi.plan.as_ref().unwrap())
                .unwrap()
                .valid
        );
        let cut = edge_pair_gamma_prime_cut(&fi);
        assert_eq!(cut.len(), 6);
        assert!(!fi.gamma_prime.delete_edges(&cut).unwrap().is_connected());
    }

    #[test]
    fn line_family_shape() {
        let fi = line_graph_family(&edge_pair_variant4().unwrap()).unwrap();
        assert_eq!(fi.gamma.order(), 126);
        assert_eq!(fi.gamma.regular_degree(), Some(12));
        assert_eq!(fi.expected.kappa_gamma, Some(7));
        assert!(fi.plan.is_none());
        let irregular = FamilyInstance {
            gamma: Graph::path(3),
            gamma_prime: Graph::path(3),
            ..fi
        };
        assert!(line_graph_family(&irregular).is_err());
    }

    #[test]
    fn tags_round_trip() {
        for s in [
            "vertex",
            "edge",
            "edge-variant4",
            "line-of-edge",
            "line-of-line-of-vertex",
        ] {
            assert_eq!(s.parse::<FamilyTag>().unwrap().to_string(), s);
        }
        assert!("nope".parse::<FamilyTag>().is_err());
        let line = build(&"line-of-edge".parse().unwrap(), Some(4)).unwrap();
        assert_eq!(line.gamma.order(), 126);
        assert!(build(&FamilyTag::Edge, Some(4)).is_err());
    }

    #[test]
    fn exports() {
        let fi = vertex_pair(2).unwrap();
        let lines = fi.graph6_lines();
        assert_eq!(lines.lines().count(), 2);
        let plan = SwitchingPlan::from_json(&fi.plan_json().unwrap()).unwrap();
        assert_eq!(plan, *fi.plan.as_ref().unwrap());
        let meta: serde_json::Value = serde_json::from_str(&fi.meta_json()).unwrap();
        assert_eq!(meta["family"], "vertex");
        assert_eq!(meta["expected"]["kappa_gamma_prime"], 3);
        assert!(meta["expected"]["kappa_prime_gamma"].is_null());
        assert_eq!(meta["ranges"]["U"], serde_json::json!([4, 7]));
    }
}
