//! Exact arithmetic over finite valuation rings, the Erdős–Rényi
//! orthogonality graph on projective classes, its spectral expansion
//! machinery, point-plane incidence counting in R^3, and sum-product
//! inequalities built on top of those incidences.

pub mod error;
pub mod graph;
pub mod harness;
pub mod incidence;
pub mod projective;
pub mod ring;
pub mod sumprod;

pub use error::{Error, Result};
pub use ring::{RingElem, RingFamily, RingSpec};
