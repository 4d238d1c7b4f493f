//! Graph energy toolkit.
//!
//! Exact energy through a dense symmetric eigensolver, a weighted Sachs
//! characteristic-polynomial oracle, leaf-aware upper bounds built from a
//! weighted star decomposition (alongside the classical McClelland,
//! Koolen–Moulton and degree-based bounds), Barabási–Albert and
//! Erdős–Rényi generators, asymptotic constants for both models, and a
//! seeded Monte Carlo harness that runs trials in parallel when the
//! `parallel` feature is enabled.

pub mod asymptotics;
pub mod bounds;
mod error;
pub mod experiment;
pub mod graph;
mod par;
pub mod random;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{DegreeProfile, Graph};
pub use spectral::{CharPoly, Spectrum, WeightedGraph};
