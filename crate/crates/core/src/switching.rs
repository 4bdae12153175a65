//! Godsil-McKay switching.
//!
//! A plan partitions the vertices into classes `X_1..X_m` and a remainder
//! `Y`. It is valid when
//!
//! 1. for every pair of classes `X_i`, `X_j`, all vertices of `X_i` have the
//!    same number of neighbours in `X_j`, and
//! 2. every `y` in `Y` is adjacent to none, exactly half, or all of each
//!    class.
//!
//! Switching complements the adjacency between each `y` and each class it
//! sees exactly half of. The result is cospectral with the input.

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Switching classes for a graph of order `n`. `Y` is everything not listed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwitchingPlan {
    pub classes: Vec<Vec<usize>>,
    pub n: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Condition {
    /// Neighbour counts between two classes are not constant.
    #[serde(rename = "i")]
    ClassRegularity,
    /// A vertex of `Y` sees neither none, half, nor all of a class.
    #[serde(rename = "ii")]
    HalfNeighborhood,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub condition: Condition,
    /// Class index `i` (0-based).
    pub class: usize,
    /// Condition (i): the class `j`; condition (ii): the vertex `y`.
    pub other: usize,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl SwitchingPlan {
    pub fn new(n: usize, classes: Vec<Vec<usize>>) -> Self {
        SwitchingPlan { classes, n }
    }

    /// Vertices outside every class, ascending.
    pub fn rest(&self) -> Vec<usize> {
        let mut inside = FixedBitSet::with_capacity(self.n);
        for c in &self.classes {
            for &v in c {
                if v < self.n {
                    inside.insert(v);
                }
            }
        }
        (0..self.n).filter(|&v| !inside.contains(v)).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plan serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::invalid(format!("plan JSON: {e}")))
    }

    fn class_sets(&self, g: &Graph) -> Result<Vec<FixedBitSet>> {
        if self.n != g.order() {
            return Err(Error::invalid(format!(
                "plan is for order {}, graph has order {}",
                self.n,
                g.order()
            )));
        }
        let mut seen = FixedBitSet::with_capacity(self.n);
        let mut sets = Vec::with_capacity(self.classes.len());
        for (i, c) in self.classes.iter().enumerate() {
            let mut set = FixedBitSet::with_capacity(self.n);
            for &v in c {
                if v >= self.n {
                    return Err(Error::invalid(format!(
                        "class {i}: vertex {v} out of range"
                    )));
                }
                if seen.put(v) {
                    return Err(Error::invalid(format!("vertex {v} listed twice")));
                }
                set.insert(v);
            }
            sets.push(set);
        }
        Ok(sets)
    }
}

/// Check both switching conditions exhaustively. An `Err` means the plan is
/// not a partition of `g`'s vertices; a GM failure is an `Ok` report with
/// `valid == false`.
pub fn validate_plan(g: &Graph, plan: &SwitchingPlan) -> Result<ValidationReport> {
    let sets = plan.class_sets(g)?;
    let mut violations = Vec::new();
    for (i, ci) in plan.classes.iter().enumerate() {
        for (j, sj) in sets.iter().enumerate() {
            let mut counts: Vec<usize> = ci.iter().map(|&x| g.neighbors_in(x, sj)).collect();
            counts.sort_unstable();
            counts.dedup();
            if counts.len() > 1 {
                violations.push(Violation {
                    condition: Condition::ClassRegularity,
                    class: i,
                    other: j,
                    detail: format!("neighbour counts {counts:?} from class {i} into class {j}"),
                });
            }
        }
    }
    for y in plan.rest() {
        for (i, si) in sets.iter().enumerate() {
            let size = plan.classes[i].len();
            let c = g.neighbors_in(y, si);
            let half_ok = c * 2 == size;
            if c != 0 && c != size && !half_ok {
                violations.push(Violation {
                    condition: Condition::HalfNeighborhood,
                    class: i,
                    other: y,
                    detail: format!("vertex {y} has {c} of {size} neighbours in class {i}"),
                });
            }
        }
    }
    Ok(ValidationReport {
        valid: violations.is_empty(),
        violations,
    })
}

/// Apply the switch. Refuses plans that fail validation.
pub fn switch(g: &Graph, plan: &SwitchingPlan) -> Result<Graph> {
    let report = validate_plan(g, plan)?;
    if !report.valid {
        return Err(Error::InvalidPlan(Box::new(report)));
    }
    let sets = plan.class_sets(g)?;
    let mut out = g.clone();
    for y in plan.rest() {
        for (class, set) in plan.classes.iter().zip(&sets) {
            if !class.is_empty() && 2 * g.neighbors_in(y, set) == class.len() {
                for &x in class {
                    out.set_edge(y, x, !g.has_edge(y, x));
                }
            }
        }
    }
    Ok(out)
}
