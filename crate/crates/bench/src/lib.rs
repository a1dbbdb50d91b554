//! Shared fixtures for the benchmarks.

use distext::graph::{join, union};
use distext::{Graph, GraphFamily};

/// Named graphs of increasing order used across the kernel benchmarks.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    let family = |f: GraphFamily| f.graph().expect("fixture builds");
    vec![
        ("petersen", Graph::petersen()),
        ("cycle-12", Graph::cycle(12)),
        ("extremal-general-6-2", family(GraphFamily::ExtremalGeneral { n: 6, k: 2 })),
        ("bipartite-s-8-2-3", family(GraphFamily::BipartiteS { n: 8, k: 2, s: 3 })),
        ("wheel-20", join(&Graph::complete(1), &Graph::cycle(19))),
        ("path-union-24", union(&Graph::path(12), &Graph::cycle(12))),
    ]
}

/// Connected fixtures only; the distance matrix needs finite entries.
pub fn connected_fixtures() -> Vec<(&'static str, Graph)> {
    fixtures().into_iter().filter(|(_, g)| g.is_connected()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_build() {
        assert_eq!(fixtures().len(), 6);
        assert_eq!(connected_fixtures().len(), 5);
    }
}
