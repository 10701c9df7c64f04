//! Exact-arithmetic spectral graph theory toolkit.
//!
//! The crate builds the sun-like "nice" graph families, computes adjacency,
//! Laplacian and signless-Laplacian spectra exactly over the integers,
//! reconstructs nice graphs from their Laplacian characteristic polynomial,
//! and cross-checks everything against independent brute-force oracles.

pub mod canon;
pub mod census;
pub mod decode;
pub mod error;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod nice;
pub mod oracles;
pub mod poly;
pub mod routes;
pub mod spectra;
pub mod sturm;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Graph, StructuralProfile, SunlikeProfile};
pub use nice::{HousePathSpec, NiceDescriptor};
pub use poly::IntPolynomial;
pub use spectra::{MatrixKind, SpectralSummary};
