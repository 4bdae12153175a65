//! Exact adjacency and Laplacian spectra, represented by integer
//! characteristic polynomials.

mod charpoly;
mod fiedler;
mod modular;
mod poly;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

pub use charpoly::{char_poly, char_poly_berkowitz, coefficient_bound, primes_needed, IntMatrix};
pub use fiedler::{
    default_tolerance, root_counts, second_smallest_root, IntervalSummary, RationalInterval,
    RootCounts,
};
pub use poly::IntPolynomial;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
}

/// `det(xI - A)`.
pub fn char_poly_adjacency(g: &Graph) -> IntPolynomial {
    char_poly(&IntMatrix::adjacency(g))
}

/// `det(xI - (D - A))`.
pub fn char_poly_laplacian(g: &Graph) -> IntPolynomial {
    char_poly(&IntMatrix::laplacian(g))
}

pub fn char_poly_of(g: &Graph, kind: MatrixKind) -> IntPolynomial {
    match kind {
        MatrixKind::Adjacency => char_poly_adjacency(g),
        MatrixKind::Laplacian => char_poly_laplacian(g),
    }
}

/// Exact coefficient-wise comparison; graphs of different order are never
/// cospectral.
pub fn cospectral(g: &Graph, h: &Graph, kind: MatrixKind) -> bool {
    g.order() == h.order() && char_poly_of(g, kind) == char_poly_of(h, kind)
}

pub fn zero_root_multiplicity(p: &IntPolynomial) -> Result<usize> {
    p.zero_root_multiplicity()
}

pub fn spectrum_symmetric(p: &IntPolynomial) -> bool {
    p.spectrum_symmetric()
}

/// Rational enclosure of the algebraic connectivity `mu_2` with width at
/// most `tol`. Disconnected graphs give the point interval `[0, 0]`.
pub fn second_smallest_laplacian_eigenvalue(
    g: &Graph,
    tol: &BigRational,
) -> Result<RationalInterval> {
    if g.order() < 2 {
        return Err(Error::invalid(format!(
            "algebraic connectivity needs at least 2 vertices, got {}",
            g.order()
        )));
    }
    let p = char_poly_laplacian(g);
    // Laplacian eigenvalues lie in [0, 2 * max degree]
    let upper = BigRational::from_integer(BigInt::from(2 * g.max_degree().max(1)));
    second_smallest_root(&p, &upper, tol)
}
