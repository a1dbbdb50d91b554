//! Distance spectral radius, matchings, k-extendability and k-factor-criticality
//! of small graphs, with exhaustive verification of the extremal results that
//! tie them together.

pub mod error;
pub mod extend;
pub mod graph;
pub mod matching;
pub mod spectrum;
pub mod subsets;
pub mod verify;

pub use error::{ExtendError, GraphError, SpectrumError, VerifyError};
pub use extend::{ExtendabilityVerdict, Property, Witness};
pub use graph::{Bipartition, CanonicalForm, Graph, GraphFamily, VertexSet};
pub use matching::Matching;
pub use spectrum::{DistanceMatrix, IntPoly, SpectralResult};
pub use verify::{GraphSource, VerificationReport};
