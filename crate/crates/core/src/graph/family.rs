//! Named graph families: the extremal graphs and the intermediate
//! configurations `K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_p})`, `G^(s)` and `B^(s)`.
//!
//! Blocks are laid out in the order they appear in the expression (the join's
//! left operand first), so the parts of the natural equitable partitions are
//! contiguous index ranges.

use serde::{Deserialize, Serialize};

use super::{diamond, join, union, union_all, Graph, VertexSet};
use crate::error::GraphError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GraphFamily {
    Complete { n: usize },
    Empty { n: usize },
    Join { left: Box<GraphFamily>, right: Box<GraphFamily> },
    Union { left: Box<GraphFamily>, right: Box<GraphFamily> },
    /// `K_{a,b} ⋄ K_{c,d}`.
    Diamond { a: usize, b: usize, c: usize, d: usize },
    /// `K_{2k} ∨ (K_{2n-2k-1} ∪ K_1)` on `2n` vertices.
    ExtremalGeneral { n: usize, k: usize },
    /// `K_{n-k,n-1} ⋄ K_{k,1}` on `2n` vertices.
    ExtremalBipartite { n: usize, k: usize },
    /// `K_k ∨ (K_{n-k-1} ∪ K_1)` on `n` vertices.
    ExtremalFactorCritical { n: usize, k: usize },
    /// `K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_p})`.
    Configuration { s: usize, parts: Vec<usize> },
    /// `G^(s) = K_s ∨ (K_{2n-2s+2k-1} ∪ (s-2k+1) K_1)` on `2n` vertices.
    GeneralS { n: usize, k: usize, s: usize },
    /// `B^(s) = K_{s,s+k-1} ⋄ K_{n-s,n-s-k+1}` on `2n` vertices.
    BipartiteS { n: usize, k: usize, s: usize },
}

/// A constructed graph plus any warnings about parameters lying outside the
/// ranges of the corresponding theorem.
#[derive(Clone, Debug)]
pub struct Built {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

impl GraphFamily {
    pub fn build(&self) -> Result<Built, GraphError> {
        let mut warnings = Vec::new();
        let graph = self.build_into(&mut warnings)?;
        Ok(Built { graph, warnings })
    }

    /// Builds and drops warnings.
    pub fn graph(&self) -> Result<Graph, GraphError> {
        self.build().map(|b| b.graph)
    }

    fn build_into(&self, warnings: &mut Vec<String>) -> Result<Graph, GraphError> {
        use GraphFamily::*;
        let bad = |msg: String| Err(GraphError::InvalidParameters(msg));
        let g = match self {
            Complete { n } => {
                check_order(*n)?;
                Graph::complete(*n)
            }
            Empty { n } => {
                check_order(*n)?;
                Graph::empty(*n)
            }
            Join { left, right } => {
                let (l, r) = (left.build_into(warnings)?, right.build_into(warnings)?);
                check_order(l.order() + r.order())?;
                join(&l, &r)
            }
            Union { left, right } => {
                let (l, r) = (left.build_into(warnings)?, right.build_into(warnings)?);
                check_order(l.order() + r.order())?;
                union(&l, &r)
            }
            &Diamond { a, b, c, d } => {
                if a + b == 0 || c + d == 0 {
                    return bad(format!("diamond({a},{b},{c},{d}) needs a+b >= 1 and c+d >= 1"));
                }
                check_order(a + b + c + d)?;
                diamond(a, b, c, d)
            }
            &ExtremalGeneral { n, k } => {
                if k < 1 || n < k + 1 {
                    warnings.push(format!("extremal-general(n={n}, k={k}) outside k >= 1, n >= k+1"));
                }
                if n < k + 1 {
                    return bad(format!("extremal-general needs n >= k+1, got n={n}, k={k}"));
                }
                check_order(2 * n)?;
                join(
                    &Graph::complete(2 * k),
                    &union(&Graph::complete(2 * n - 2 * k - 1), &Graph::complete(1)),
                )
            }
            &ExtremalBipartite { n, k } => {
                if k < 1 || n < k + 1 {
                    warnings.push(format!("extremal-bipartite(n={n}, k={k}) outside k >= 1, n >= k+1"));
                }
                if n < k || n == 0 {
                    return bad(format!("extremal-bipartite needs n >= k and n >= 1, got n={n}, k={k}"));
                }
                check_order(2 * n)?;
                diamond(n - k, n - 1, k, 1)
            }
            &ExtremalFactorCritical { n, k } => {
                if k < 1 || n < k + 2 || (n - k) % 2 != 0 {
                    warnings.push(format!(
                        "extremal-factor-critical(n={n}, k={k}) outside k >= 1, n >= k+2, n ≡ k (mod 2)"
                    ));
                }
                if n < k + 1 {
                    return bad(format!("extremal-factor-critical needs n >= k+1, got n={n}, k={k}"));
                }
                check_order(n)?;
                join(
                    &Graph::complete(k),
                    &union(&Graph::complete(n - k - 1), &Graph::complete(1)),
                )
            }
            Configuration { s, parts } => {
                if *s < 1 || parts.is_empty() {
                    return bad(format!("configuration needs s >= 1 and p >= 1, got s={s}, p={}", parts.len()));
                }
                if parts.contains(&0) {
                    warnings.push("configuration has an empty part".into());
                }
                check_order(s + parts.iter().sum::<usize>())?;
                let cliques: Vec<Graph> = parts.iter().map(|&m| Graph::complete(m)).collect();
                join(&Graph::complete(*s), &union_all(&cliques))
            }
            &GeneralS { n, k, s } => {
                if s < 2 * k || n + k < s + 1 {
                    return bad(format!("G^(s) needs 2k <= s <= n+k-1, got n={n}, k={k}, s={s}"));
                }
                let mut parts = vec![2 * n + 2 * k - 2 * s - 1];
                parts.extend(std::iter::repeat(1).take(s - 2 * k + 1));
                Configuration { s, parts }.build_into(warnings)?
            }
            &BipartiteS { n, k, s } => {
                if s < 1 || n < s + k {
                    return bad(format!("B^(s) needs 1 <= s <= n-k, got n={n}, k={k}, s={s}"));
                }
                check_order(2 * n)?;
                diamond(s, s + k - 1, n - s, n - s - k + 1)
            }
        };
        Ok(g)
    }

    /// The contiguous blocks of the natural equitable partition, in layout
    /// order, with empty blocks dropped.
    pub fn blocks(&self) -> Result<Vec<VertexSet>, GraphError> {
        use GraphFamily::*;
        let sizes: Vec<usize> = match self {
            Complete { n } | Empty { n } => vec![*n],
            &Diamond { a, b, c, d } => vec![a, b, c, d],
            &ExtremalGeneral { n, k } => vec![2 * k, (2 * n).saturating_sub(2 * k + 1), 1],
            &ExtremalBipartite { n, k } => vec![n.saturating_sub(k), n.saturating_sub(1), k, 1],
            &ExtremalFactorCritical { n, k } => vec![k, n.saturating_sub(k + 1), 1],
            Configuration { s, parts } => std::iter::once(*s).chain(parts.iter().copied()).collect(),
            &GeneralS { n, k, s } => vec![s, (2 * n + 2 * k).saturating_sub(2 * s + 1), s + 1 - 2 * k],
            &BipartiteS { n, k, s } => vec![s, s + k - 1, n - s, (n + 1).saturating_sub(s + k)],
            Join { .. } | Union { .. } => {
                let n = self.graph()?.order();
                vec![n]
            }
        };
        let mut out = Vec::new();
        let mut start = 0;
        for len in sizes {
            if len > 0 {
                out.push(VertexSet::range(start, start + len));
            }
            start += len;
        }
        Ok(out)
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    if n > super::MAX_ORDER {
        return Err(GraphError::OrderTooLarge {
            order: n,
            max: super::MAX_ORDER,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;

    #[test]
    fn extremal_general_3_1_has_12_edges() {
        let g = GraphFamily::ExtremalGeneral { n: 3, k: 1 }.graph().unwrap();
        assert_eq!(g.order(), 6);
        // K_5 minus the edges from the isolated K_1 to the K_3: C(5,2) + 2.
        assert_eq!(g.edge_count(), 10 + 2);
    }

    #[test]
    fn configuration_coincides_with_extremal_general() {
        let a = GraphFamily::Configuration { s: 2, parts: vec![3, 1] }.graph().unwrap();
        let b = GraphFamily::ExtremalGeneral { n: 3, k: 1 }.graph().unwrap();
        assert!(a.same_adjacency(&b));
        let c = GraphFamily::GeneralS { n: 3, k: 1, s: 2 }.graph().unwrap();
        assert!(c.same_adjacency(&b));
    }

    #[test]
    fn extremal_bipartite_is_balanced() {
        let g = GraphFamily::ExtremalBipartite { n: 3, k: 1 }.graph().unwrap();
        assert_eq!(g.order(), 6);
        let b = g.bipartition().unwrap();
        assert!(b.is_balanced());
        assert!(g.is_connected());
    }

    #[test]
    fn b1_matches_extremal_bipartite() {
        for (n, k) in [(3, 1), (5, 2), (6, 1)] {
            let b1 = GraphFamily::BipartiteS { n, k, s: 1 }.graph().unwrap();
            let ext = GraphFamily::ExtremalBipartite { n, k }.graph().unwrap();
            assert_eq!(canonical_form(&b1).unwrap(), canonical_form(&ext).unwrap());
        }
    }

    #[test]
    fn out_of_range_parameters_warn() {
        let built = GraphFamily::ExtremalFactorCritical { n: 5, k: 2 }.build().unwrap();
        assert!(!built.warnings.is_empty());
        let built = GraphFamily::ExtremalFactorCritical { n: 6, k: 2 }.build().unwrap();
        assert!(built.warnings.is_empty());
        assert!(GraphFamily::Diamond { a: 0, b: 0, c: 1, d: 1 }.build().is_err());
    }

    #[test]
    fn blocks_cover_the_vertices() {
        for fam in [
            GraphFamily::ExtremalGeneral { n: 4, k: 1 },
            GraphFamily::ExtremalBipartite { n: 5, k: 2 },
            GraphFamily::ExtremalFactorCritical { n: 7, k: 3 },
            GraphFamily::GeneralS { n: 6, k: 2, s: 6 },
            GraphFamily::BipartiteS { n: 6, k: 2, s: 3 },
        ] {
            let g = fam.graph().unwrap();
            let blocks = fam.blocks().unwrap();
            let total: usize = blocks.iter().map(|b| b.len()).sum();
            assert_eq!(total, g.order(), "{fam:?}");
        }
    }

    #[test]
    fn serde_tagging() {
        let fam: GraphFamily =
            serde_json::from_str(r#"{"kind":"extremal-general","n":3,"k":1}"#).unwrap();
        assert_eq!(fam, GraphFamily::ExtremalGeneral { n: 3, k: 1 });
    }
}
