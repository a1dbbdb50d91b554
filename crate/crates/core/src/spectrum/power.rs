use serde::Serialize;

use super::DistanceMatrix;
use crate::error::SpectrumError;

pub const DEFAULT_TOL: f64 = 1e-10;

/// Dominant eigenpair of a distance matrix.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralResult {
    /// The distance spectral radius.
    pub radius: f64,
    /// Unit Perron vector (all entries positive).
    pub perron: Vec<f64>,
    /// `‖D x − radius · x‖∞` at termination.
    pub residual: f64,
    pub iterations: usize,
}

/// Iteration cap `100 · n · (ln n + 20)`.
pub fn iteration_cap(n: usize) -> usize {
    let n = n.max(1) as f64;
    (100.0 * n * (n.ln() + 20.0)).ceil() as usize
}

/// Power iteration from the all-ones vector with Rayleigh-quotient estimates,
/// stopping once the residual drops to `tol`.
///
/// The all-ones start overlaps the Perron vector of any nonnegative irreducible
/// matrix, so the iteration cannot stall in a complementary eigenspace.
pub fn spectral_radius(d: &DistanceMatrix, tol: f64) -> Result<SpectralResult, SpectrumError> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(SpectrumError::InvalidTolerance(tol));
    }
    let n = d.order();
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut y = vec![0.0; n];
    let cap = iteration_cap(n);
    let mut estimate = 0.0;
    let mut residual = f64::INFINITY;
    for iter in 0..=cap {
        d.mul_vec(&x, &mut y);
        estimate = dot(&x, &y);
        residual = x
            .iter()
            .zip(&y)
            .map(|(xi, yi)| (yi - estimate * xi).abs())
            .fold(0.0, f64::max);
        if residual <= tol {
            return Ok(SpectralResult {
                radius: estimate,
                perron: x,
                residual,
                iterations: iter,
            });
        }
        let norm = dot(&y, &y).sqrt();
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / norm;
        }
    }
    Err(SpectrumError::NoConvergence {
        iterations: cap,
        estimate,
        residual,
    })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
