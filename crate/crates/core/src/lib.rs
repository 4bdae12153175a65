//! Cospectral regular graph pairs with different vertex- or
//! edge-connectivity, built by Godsil-McKay switching, together with the
//! exact machinery that verifies them: integer characteristic polynomials,
//! max-flow connectivity with Menger certificates, and brute-force oracles.

pub mod blocks;
pub mod connectivity;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod random;
pub mod spectra;
pub mod switching;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{ComponentPartition, Graph};
