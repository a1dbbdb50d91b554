//! Distance matrices, the distance spectral radius with its Perron vector, and
//! equitable-partition quotients with exact characteristic polynomials.

mod distance;
mod identities;
mod poly;
mod power;
mod quotient;

pub use distance::{distance_matrix, DistanceMatrix};
pub use identities::{
    check_quotient_charpoly, phi_s_difference, phi_s_difference_expected, quartic_difference,
    quartic_difference_expected, CharpolyCheck, QuotientPoly,
};
pub use poly::{charpoly, IntPoly};
pub use power::{iteration_cap, spectral_radius, SpectralResult, DEFAULT_TOL};
pub use quotient::{perron_part_values, verify_equitable, PartValues, QuotientSystem};

use crate::error::SpectrumError;
use crate::graph::Graph;

/// Two radii closer than this are "potentially equal" and need a structural
/// check before being called distinct.
pub const COMPARISON_MARGIN: f64 = 1e-7;

/// Tolerance for the refined rerun when two radii fall within
/// [`COMPARISON_MARGIN`].
pub const REFINED_TOL: f64 = 1e-13;

/// Distance spectral radius of a connected graph.
pub fn graph_spectrum(g: &Graph, tol: f64) -> Result<SpectralResult, SpectrumError> {
    spectral_radius(&distance_matrix(g)?, tol)
}

/// Shorthand for the radius alone.
pub fn graph_radius(g: &Graph, tol: f64) -> Result<f64, SpectrumError> {
    graph_spectrum(g, tol).map(|r| r.radius)
}
