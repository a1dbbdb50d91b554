//! Maximum matchings, perfect-matching tests, odd-component counts and the
//! Tutte–Berge cross-check.

mod bipartite;
mod blossom;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

pub use bipartite::hopcroft_karp_within;
pub use blossom::blossom_within;

/// Largest order accepted by the exhaustive Tutte–Berge scan.
pub const TUTTE_BERGE_CAP: usize = 16;

/// A set of pairwise disjoint edges, stored as a mate array.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matching {
    #[serde(skip)]
    mate: Vec<Option<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn from_mates(mate: Vec<Option<usize>>) -> Self {
        let edges = mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect();
        Matching { mate, edges }
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    pub fn covered(&self) -> VertexSet {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }

    /// Checks the matching invariants against `g`: disjoint edges that all
    /// exist in `g`.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let mut seen = VertexSet::EMPTY;
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) || seen.contains(u) || seen.contains(v) {
                return false;
            }
            seen.insert(u);
            seen.insert(v);
        }
        true
    }
}

/// Maximum-cardinality matching. Uses Hopcroft–Karp when the graph carries a
/// bipartition and the blossom algorithm otherwise.
pub fn max_matching(g: &Graph) -> Matching {
    max_matching_within(g, g.vertices())
}

/// Maximum matching of the subgraph induced by `alive`, in the labels of `g`.
pub fn max_matching_within(g: &Graph, alive: VertexSet) -> Matching {
    let mate = match g.bipartition() {
        Some(sides) => hopcroft_karp_within(g, sides, alive),
        None => blossom_within(g, alive),
    };
    Matching::from_mates(mate)
}

/// Maximum matching forced through the blossom algorithm, ignoring any
/// bipartition metadata.
pub fn general_max_matching(g: &Graph) -> Matching {
    Matching::from_mates(blossom_within(g, g.vertices()))
}

/// Size of a maximum matching of `G[alive]`.
pub fn matching_number_within(g: &Graph, alive: VertexSet) -> usize {
    max_matching_within(g, alive).len()
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    has_perfect_matching_within(g, g.vertices())
}

/// Whether `G[alive]` has a perfect matching. The empty vertex set has one.
pub fn has_perfect_matching_within(g: &Graph, alive: VertexSet) -> bool {
    alive.len() % 2 == 0 && 2 * matching_number_within(g, alive) == alive.len()
}

/// `o(G − S)`: the number of odd-order components of `G − S`.
pub fn odd_components(g: &Graph, removed: VertexSet) -> usize {
    g.components_within(g.vertices().difference(removed))
        .into_iter()
        .filter(|c| c.len() % 2 == 1)
        .count()
}

/// Deficiency `max_S (o(G − S) − |S|)` with the lexicographically first
/// maximizing set among those of smallest size.
pub fn tutte_berge_deficiency(g: &Graph) -> (usize, VertexSet) {
    let n = g.order();
    assert!(n <= TUTTE_BERGE_CAP, "exhaustive scan limited to {TUTTE_BERGE_CAP} vertices");
    let mut best = (odd_components(g, VertexSet::EMPTY) as i64, VertexSet::EMPTY);
    for size in 1..=n {
        for s in crate::subsets::of_size(g.vertices(), size) {
            let def = odd_components(g, s) as i64 - size as i64;
            if def > best.0 {
                best = (def, s);
            }
        }
    }
    (best.0.max(0) as usize, best.1)
}

/// Confirms `ν(G) = (n − max_S (o(G − S) − |S|)) / 2`.
pub fn tutte_berge_check(g: &Graph) -> bool {
    let (def, _) = tutte_berge_deficiency(g);
    2 * max_matching(g).len() == g.order() - def
}

/// Exhaustive maximum matching by backtracking on the lowest undecided vertex.
/// Exponential; an independent oracle for small graphs.
pub fn brute_force_matching_number(g: &Graph) -> usize {
    fn go(g: &Graph, free: VertexSet) -> usize {
        let Some(v) = free.first() else {
            return 0;
        };
        let rest = free.difference(VertexSet::singleton(v));
        let mut best = go(g, rest);
        for u in g.neighbors(v).intersection(rest) {
            best = best.max(1 + go(g, rest.difference(VertexSet::singleton(u))));
        }
        best
    }
    go(g, g.vertices())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{join, union, Graph, GraphFamily};

    #[test]
    fn small_cases() {
        assert_eq!(max_matching(&Graph::complete(4)).len(), 2);
        assert_eq!(max_matching(&Graph::path(5)).len(), 2);
        assert_eq!(max_matching(&Graph::petersen()).len(), 5);
        assert_eq!(brute_force_matching_number(&Graph::petersen()), 5);
    }

    #[test]
    fn matchings_are_valid() {
        for g in [Graph::petersen(), Graph::cycle(7), Graph::complete(6)] {
            let m = max_matching(&g);
            assert!(m.is_valid_in(&g));
            assert_eq!(m.covered().len(), 2 * m.len());
        }
    }

    #[test]
    fn perfect_matching_tests() {
        assert!(has_perfect_matching(&Graph::cycle(6)));
        assert!(!has_perfect_matching(&Graph::cycle(5)));
        // K_1 ∨ (K_7 ∪ 2K_1), order 10
        let g = join(
            &Graph::complete(1),
            &union(&Graph::complete(7), &Graph::empty(2)),
        );
        assert!(!has_perfect_matching(&g));
        for (n, k) in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3), (5, 2), (5, 4)] {
            let g = GraphFamily::ExtremalGeneral { n, k }.graph().unwrap();
            assert!(has_perfect_matching(&g), "extremal-general({n},{k})");
        }
    }

    #[test]
    fn odd_component_counts() {
        let g = GraphFamily::ExtremalGeneral { n: 4, k: 1 }.graph().unwrap();
        assert_eq!(odd_components(&g, VertexSet::range(0, 2)), 2);
        assert_eq!(odd_components(&Graph::complete(5), VertexSet::EMPTY), 1);
        assert_eq!(odd_components(&Graph::complete(4), VertexSet::EMPTY), 0);
        let p4 = Graph::path(4);
        assert_eq!(odd_components(&p4, VertexSet::singleton(1)), 1);
        assert_eq!(odd_components(&p4, VertexSet::from_iter([1, 2])), 2);
    }

    #[test]
    fn tutte_berge_examples() {
        let (def, s) = tutte_berge_deficiency(&Graph::cycle(6));
        assert_eq!((def, s), (0, VertexSet::EMPTY));
        let g = join(
            &Graph::complete(1),
            &union(&Graph::complete(7), &Graph::empty(2)),
        );
        let (def, s) = tutte_berge_deficiency(&g);
        // Removing the join vertex leaves K_7, K_1, K_1: three odd pieces.
        assert_eq!(def, 2);
        assert_eq!(s, VertexSet::singleton(0));
        assert!(tutte_berge_check(&g));
    }

    #[test]
    fn bipartite_and_general_agree() {
        for (a, b, c, d) in [(2, 3, 1, 1), (3, 1, 2, 2), (1, 4, 4, 1)] {
            let g = crate::graph::diamond(a, b, c, d);
            assert_eq!(max_matching(&g).len(), general_max_matching(&g).len());
        }
    }
}
