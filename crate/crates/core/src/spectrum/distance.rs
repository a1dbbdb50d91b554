use std::fmt::Write as _;

use serde::Serialize;

use crate::error::SpectrumError;
use crate::graph::{Graph, VertexSet};

/// Dense symmetric matrix of shortest-path lengths, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn row_sums(&self) -> Vec<u64> {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|&d| d as u64).sum())
            .collect()
    }

    /// Sum of `D[v][w]` over `w` in `set`.
    pub fn block_sum(&self, v: usize, set: VertexSet) -> i64 {
        set.iter().map(|w| self.get(v, w) as i64).sum()
    }

    /// `y = D x`.
    pub fn mul_vec(&self, x: &[f64], y: &mut [f64]) {
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = self.row(i).iter().zip(x).map(|(&d, &xj)| d as f64 * xj).sum();
        }
    }

    /// `x^T D y`.
    pub fn bilinear(&self, x: &[f64], y: &[f64]) -> f64 {
        (0..self.n)
            .map(|i| x[i] * self.row(i).iter().zip(y).map(|(&d, &yj)| d as f64 * yj).sum::<f64>())
            .sum()
    }

    /// Row-major CSV, one matrix row per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.n {
            for (j, d) in self.row(i).iter().enumerate() {
                if j > 0 {
                    out.push(',');
                }
                write!(out, "{d}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

/// All-pairs shortest-path lengths by one breadth-first search per vertex.
pub fn distance_matrix(g: &Graph) -> Result<DistanceMatrix, SpectrumError> {
    let n = g.order();
    if n == 0 {
        return Err(SpectrumError::EmptyGraph);
    }
    let mut entries = vec![0u32; n * n];
    for src in 0..n {
        let mut seen = VertexSet::singleton(src);
        let mut frontier = seen;
        let mut depth = 0;
        while !frontier.is_empty() {
            depth += 1;
            let next = g.neighborhood(frontier).difference(seen);
            for v in next {
                entries[src * n + v] = depth;
            }
            seen = seen.union(next);
            frontier = next;
        }
        if seen.len() < n {
            let v = g.vertices().difference(seen).first().expect("unreached vertex");
            return Err(SpectrumError::Disconnected { u: src, v });
        }
    }
    Ok(DistanceMatrix { n, entries })
}
