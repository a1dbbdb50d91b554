use serde::Serialize;

use super::{charpoly, distance_matrix, spectral_radius, DistanceMatrix, IntPoly, SpectralResult};
use crate::error::SpectrumError;
use crate::graph::{Graph, VertexSet};

/// An equitable partition of a distance matrix with its quotient matrix.
#[derive(Clone, Debug, Serialize)]
pub struct QuotientSystem {
    pub parts: Vec<VertexSet>,
    /// `quotient[i][j]` is the common sum of `D[v][w]` over `w` in part `j`,
    /// for any `v` in part `i`.
    pub quotient: Vec<Vec<i64>>,
    pub charpoly: IntPoly,
}

impl QuotientSystem {
    /// Largest eigenvalue of the quotient matrix, which equals the spectral
    /// radius of the full matrix.
    pub fn largest_eigenvalue(&self) -> f64 {
        self.charpoly
            .largest_real_root()
            .expect("quotient of a nonempty partition has positive degree")
    }
}

fn check_partition(n: usize, parts: &[VertexSet]) -> Result<(), SpectrumError> {
    let mut seen = VertexSet::EMPTY;
    for (i, &p) in parts.iter().enumerate() {
        if p.is_empty() {
            return Err(SpectrumError::NotAPartition(format!("part {i} is empty")));
        }
        if !p.is_subset(VertexSet::full(n)) {
            return Err(SpectrumError::NotAPartition(format!("part {i} has vertices >= {n}")));
        }
        if !seen.intersection(p).is_empty() {
            return Err(SpectrumError::NotAPartition(format!("part {i} overlaps an earlier part")));
        }
        seen = seen.union(p);
    }
    if seen.len() != n {
        return Err(SpectrumError::NotAPartition(format!(
            "parts cover {} of {n} vertices",
            seen.len()
        )));
    }
    Ok(())
}

/// Checks that every vertex of a part has the same block sum into each part,
/// and returns the quotient matrix with its exact characteristic polynomial.
pub fn verify_equitable(d: &DistanceMatrix, parts: &[VertexSet]) -> Result<QuotientSystem, SpectrumError> {
    check_partition(d.order(), parts)?;
    let mut quotient = vec![vec![0i64; parts.len()]; parts.len()];
    for (i, &pi) in parts.iter().enumerate() {
        let rep = pi.first().expect("nonempty part");
        for (j, &pj) in parts.iter().enumerate() {
            let expected = d.block_sum(rep, pj);
            for v in pi {
                let found = d.block_sum(v, pj);
                if found != expected {
                    return Err(SpectrumError::NotEquitable {
                        part: i,
                        vertex: v,
                        into: j,
                        found,
                        expected,
                    });
                }
            }
            quotient[i][j] = expected;
        }
    }
    let charpoly = charpoly(&quotient);
    Ok(QuotientSystem {
        parts: parts.to_vec(),
        quotient,
        charpoly,
    })
}

/// Common Perron-vector value on each part, with the spectral result it was
/// read from.
#[derive(Clone, Debug, Serialize)]
pub struct PartValues {
    pub values: Vec<f64>,
    pub spectrum: SpectralResult,
}

/// Reads the Perron vector of `D(g)` on each part, requiring it to be constant
/// there to within `10 · tol`.
pub fn perron_part_values(g: &Graph, parts: &[VertexSet], tol: f64) -> Result<PartValues, SpectrumError> {
    let d = distance_matrix(g)?;
    check_partition(d.order(), parts)?;
    let spectrum = spectral_radius(&d, tol)?;
    let limit = 10.0 * tol;
    let mut values = Vec::with_capacity(parts.len());
    for (i, &p) in parts.iter().enumerate() {
        let (lo, hi, sum) = p.iter().map(|v| spectrum.perron[v]).fold(
            (f64::INFINITY, f64::NEG_INFINITY, 0.0),
            |(lo, hi, s), x| (lo.min(x), hi.max(x), s + x),
        );
        if hi - lo > limit {
            return Err(SpectrumError::NonConstantPart {
                part: i,
                spread: hi - lo,
                limit,
            });
        }
        values.push(sum / p.len() as f64);
    }
    Ok(PartValues { values, spectrum })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{join, GraphFamily};
    use crate::spectrum::DEFAULT_TOL;

    #[test]
    fn extremal_general_three_part_quotient() {
        for k in 1..=4i64 {
            let fam = GraphFamily::ExtremalGeneral { n: k as usize + 2, k: k as usize };
            let g = fam.graph().unwrap();
            let q = verify_equitable(&distance_matrix(&g).unwrap(), &fam.blocks().unwrap()).unwrap();
            assert_eq!(
                q.quotient,
                vec![vec![2 * k - 1, 3, 1], vec![2 * k, 2, 2], vec![2 * k, 6, 0]]
            );
        }
    }

    #[test]
    fn join_with_three_singletons() {
        for k in 1..=4usize {
            let g = join(&Graph::complete(2 * k + 1), &Graph::empty(3));
            let parts = [VertexSet::range(0, 2 * k + 1), VertexSet::range(2 * k + 1, 2 * k + 4)];
            let q = verify_equitable(&distance_matrix(&g).unwrap(), &parts).unwrap();
            let k = k as i64;
            assert_eq!(q.quotient, vec![vec![2 * k, 3], vec![2 * k + 1, 4]]);
            assert_eq!(
                q.charpoly,
                IntPoly::from_descending(&[1, -(2 * k as i128 + 4), 2 * k as i128 - 3])
            );
        }
    }

    #[test]
    fn single_part_of_complete_graph() {
        let q = verify_equitable(&distance_matrix(&Graph::complete(5)).unwrap(), &[VertexSet::full(5)]).unwrap();
        assert_eq!(q.quotient, vec![vec![4]]);
        assert!((q.largest_eigenvalue() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn non_equitable_names_violation() {
        let d = distance_matrix(&Graph::path(3)).unwrap();
        let err = verify_equitable(&d, &[VertexSet::full(3)]).unwrap_err();
        assert!(matches!(err, SpectrumError::NotEquitable { part: 0, vertex: 1, .. }));
        assert!(verify_equitable(&d, &[VertexSet::range(0, 2)]).is_err());
        assert!(verify_equitable(&d, &[VertexSet::range(0, 2), VertexSet::range(1, 3)]).is_err());
    }

    #[test]
    fn uniform_perron_vector_of_complete_graph() {
        let pv = perron_part_values(&Graph::complete(6), &[VertexSet::full(6)], DEFAULT_TOL).unwrap();
        assert!((pv.values[0] - 1.0 / 6f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn wrong_partition_is_flagged() {
        let parts = [VertexSet::full(4)];
        let err = perron_part_values(&Graph::path(4), &parts, DEFAULT_TOL).unwrap_err();
        assert!(matches!(err, SpectrumError::NonConstantPart { .. }));
    }
}
