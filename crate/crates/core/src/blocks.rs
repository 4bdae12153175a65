//! Partitioned 0/1 matrices and their assembly into graphs.
//!
//! The constructions are written down as block matrices built from
//! `O`, `J`, `I`, `J - I`, cycle blocks `C`, `J - C` and explicit patterns.
//! [`Matrix01`] is the small dense matrix used for explicit blocks; it
//! supports the concatenations the layouts need. [`BlockSpec`] places cells
//! on a grid of row/column classes and [`from_blocks`] checks that the result
//! is a valid adjacency matrix.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix01 {
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
}

impl Matrix01 {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix01 {
            rows,
            cols,
            bits: vec![false; rows * cols],
        }
    }

    pub fn ones(rows: usize, cols: usize) -> Self {
        Matrix01 {
            rows,
            cols,
            bits: vec![true; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix01::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut m = Matrix01::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn adjacency(g: &Graph) -> Self {
        Matrix01::from_fn(g.order(), g.order(), |i, j| g.has_edge(i, j))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        self.bits[i * self.cols + j] = b;
    }

    pub fn transpose(&self) -> Self {
        Matrix01::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// `J - self`.
    pub fn complement(&self) -> Self {
        Matrix01::from_fn(self.rows, self.cols, |i, j| !self.get(i, j))
    }

    pub fn hcat(parts: &[Matrix01]) -> Result<Self> {
        let rows = parts.first().map_or(0, |p| p.rows);
        if parts.iter().any(|p| p.rows != rows) {
            return Err(Error::invalid("hcat: row counts differ"));
        }
        let cols = parts.iter().map(|p| p.cols).sum();
        let mut m = Matrix01::zeros(rows, cols);
        let mut off = 0;
        for p in parts {
            for i in 0..rows {
                for j in 0..p.cols {
                    m.set(i, off + j, p.get(i, j));
                }
            }
            off += p.cols;
        }
        Ok(m)
    }

    pub fn vcat(parts: &[Matrix01]) -> Result<Self> {
        let cols = parts.first().map_or(0, |p| p.cols);
        if parts.iter().any(|p| p.cols != cols) {
            return Err(Error::invalid("vcat: column counts differ"));
        }
        let rows = parts.iter().map(|p| p.rows).sum();
        let mut bits = Vec::with_capacity(rows * cols);
        for p in parts {
            bits.extend_from_slice(&p.bits);
        }
        Ok(Matrix01 { rows, cols, bits })
    }

    pub fn row_sum(&self, i: usize) -> usize {
        (0..self.cols).filter(|&j| self.get(i, j)).count()
    }
}

impl fmt::Debug for Matrix01 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix01 {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let line: String = (0..self.cols)
                .map(|j| if self.get(i, j) { '1' } else { '.' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// One cell of a partitioned matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    Zero,
    AllOnes,
    Identity,
    AllOnesMinusIdentity,
    /// Adjacency matrix of the cycle on the cell's vertices, in order.
    Cycle,
    AllOnesMinusCycle,
    Explicit(Matrix01),
}

impl Cell {
    pub fn from_graph(g: &Graph) -> Self {
        Cell::Explicit(Matrix01::adjacency(g))
    }

    fn materialize(&self, rows: usize, cols: usize, at: (usize, usize)) -> Result<Matrix01> {
        let square = |what: &str| {
            if rows == cols {
                Ok(())
            } else {
                Err(Error::invalid(format!(
                    "cell {at:?}: {what} needs a square cell, got {rows}x{cols}"
                )))
            }
        };
        let cycle = |n: usize| {
            if n < 3 {
                return Err(Error::invalid(format!(
                    "cell {at:?}: cycle needs at least 3 vertices, got {n}"
                )));
            }
            Ok(Matrix01::from_fn(n, n, |i, j| {
                (i + 1) % n == j || (j + 1) % n == i
            }))
        };
        Ok(match self {
            Cell::Zero => Matrix01::zeros(rows, cols),
            Cell::AllOnes => Matrix01::ones(rows, cols),
            Cell::Identity => {
                square("identity")?;
                Matrix01::identity(rows)
            }
            Cell::AllOnesMinusIdentity => {
                square("J - I")?;
                Matrix01::identity(rows).complement()
            }
            Cell::Cycle => {
                square("cycle")?;
                cycle(rows)?
            }
            Cell::AllOnesMinusCycle => {
                square("J - C")?;
                cycle(rows)?.complement()
            }
            Cell::Explicit(m) => {
                if m.rows() != rows || m.cols() != cols {
                    return Err(Error::invalid(format!(
                        "cell {at:?}: explicit block is {}x{}, layout needs {rows}x{cols}",
                        m.rows(),
                        m.cols()
                    )));
                }
                m.clone()
            }
        })
    }
}

#[derive(Clone, Debug)]
pub struct BlockSpec {
    pub row_classes: Vec<usize>,
    pub col_classes: Vec<usize>,
    pub cells: Vec<Vec<Cell>>,
}

/// Half-open vertex ranges of the classes of an assembled graph.
pub type ClassBounds = Vec<std::ops::Range<usize>>;

impl BlockSpec {
    /// Layout whose row and column classes coincide, as needed for a graph.
    pub fn square(classes: Vec<usize>, cells: Vec<Vec<Cell>>) -> Self {
        BlockSpec {
            row_classes: classes.clone(),
            col_classes: classes,
            cells,
        }
    }

    /// Assemble the full matrix without any symmetry requirement.
    pub fn assemble(&self) -> Result<Matrix01> {
        if self.cells.len() != self.row_classes.len()
            || self.cells.iter().any(|r| r.len() != self.col_classes.len())
        {
            return Err(Error::invalid("cell grid does not match the class counts"));
        }
        let mut band = Vec::with_capacity(self.row_classes.len());
        for (bi, &rows) in self.row_classes.iter().enumerate() {
            let parts = self
                .col_classes
                .iter()
                .enumerate()
                .map(|(bj, &cols)| self.cells[bi][bj].materialize(rows, cols, (bi, bj)))
                .collect::<Result<Vec<_>>>()?;
            band.push(Matrix01::hcat(&parts)?);
        }
        if band.is_empty() {
            return Ok(Matrix01::zeros(0, self.col_classes.iter().sum()));
        }
        Matrix01::vcat(&band)
    }

    fn locate(classes: &[usize], mut idx: usize) -> (usize, usize) {
        for (c, &size) in classes.iter().enumerate() {
            if idx < size {
                return (c, idx);
            }
            idx -= size;
        }
        unreachable!("index beyond layout")
    }
}

/// Build the graph whose adjacency matrix is the assembled layout.
pub fn from_blocks(spec: &BlockSpec) -> Result<(Graph, ClassBounds)> {
    let m = spec.assemble()?;
    if m.rows() != m.cols() {
        return Err(Error::invalid(format!(
            "assembled matrix is {}x{}, not square",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut g = Graph::empty(n);
    for i in 0..n {
        if m.get(i, i) {
            let (c, off) = BlockSpec::locate(&spec.row_classes, i);
            return Err(Error::invalid(format!(
                "nonzero diagonal at vertex {i} (cell ({c},{c}), offset {off})"
            )));
        }
        for j in i + 1..n {
            if m.get(i, j) != m.get(j, i) {
                let (ci, oi) = BlockSpec::locate(&spec.row_classes, i);
                let (cj, oj) = BlockSpec::locate(&spec.col_classes, j);
                return Err(Error::invalid(format!(
                    "asymmetric entry ({i},{j}): cell ({ci},{cj}) offset ({oi},{oj})"
                )));
            }
            if m.get(i, j) {
                g.set_edge(i, j, true);
            }
        }
    }
    let mut bounds = Vec::with_capacity(spec.row_classes.len());
    let mut start = 0;
    for &s in &spec.row_classes {
        bounds.push(start..start + s);
        start += s;
    }
    Ok((g, bounds))
}
