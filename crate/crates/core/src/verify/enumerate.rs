//! Isomorph-free generation of connected graphs and connected balanced
//! bipartite graphs, plus graph6 file loading.

use std::collections::BTreeMap;
use std::path::Path;

use rayon::prelude::*;

use crate::error::VerifyError;
use crate::graph::{canonical_labeling, parse_graph6, CanonicalForm, Graph, VertexSet, DEFAULT_CANON_CAP};

/// Largest order handled by the built-in connected-graph generator.
pub const ENUMERATION_CAP: usize = 10;

/// Largest order handled by the built-in bipartite generator.
pub const BIPARTITE_ENUMERATION_CAP: usize = 12;

/// One representative per isomorphism class of connected graphs on `order`
/// vertices, each in canonical labeling, sorted by canonical form.
///
/// Every connected graph on `n ≥ 2` vertices has a vertex whose removal keeps
/// it connected, so extending each class of order `n − 1` by a new vertex with
/// every nonempty neighbor set reaches all classes of order `n`.
pub fn enumerate_connected(order: usize) -> Result<Vec<Graph>, VerifyError> {
    if order > ENUMERATION_CAP {
        return Err(VerifyError::UnsupportedOrder {
            order,
            cap: ENUMERATION_CAP,
        });
    }
    if order == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![Graph::empty(1)];
    for n in 2..=order {
        let children: Vec<(CanonicalForm, Graph)> = level
            .par_iter()
            .flat_map_iter(|g| {
                (1u64..1 << (n - 1)).map(move |mask| {
                    let mut h = extend_by_vertex(g);
                    for u in VertexSet(mask) {
                        h.add_edge(u, n - 1);
                    }
                    canonical(&h)
                })
            })
            .collect();
        level = dedup_sorted(children);
    }
    Ok(level)
}

/// One representative per isomorphism class of all graphs on `order`
/// vertices, connected or not, sorted by canonical form. Each class is a
/// multiset of connected components, chosen in non-increasing order.
pub fn enumerate_graphs(order: usize) -> Result<Vec<Graph>, VerifyError> {
    fn go(
        rest: usize,
        max: (usize, usize),
        by_order: &[Vec<Graph>],
        chosen: &mut Vec<Graph>,
        out: &mut Vec<(CanonicalForm, Graph)>,
    ) {
        if rest == 0 {
            out.push(canonical(&crate::graph::union_all(chosen.iter())));
            return;
        }
        for m in (1..=rest.min(max.0)).rev() {
            let limit = if m == max.0 { max.1 } else { by_order[m].len() - 1 };
            for i in (0..=limit).rev() {
                chosen.push(by_order[m][i].clone());
                go(rest - m, (m, i), by_order, chosen, out);
                chosen.pop();
            }
        }
    }
    if order == 0 {
        return Ok(vec![Graph::empty(0)]);
    }
    let mut by_order = vec![Vec::new()];
    for m in 1..=order {
        by_order.push(enumerate_connected(m)?);
    }
    let mut out = Vec::new();
    go(order, (order, by_order[order].len() - 1), &by_order, &mut Vec::new(), &mut out);
    Ok(dedup_sorted(out))
}

/// One representative per isomorphism class of connected bipartite graphs on
/// `order` vertices with both sides of size `order / 2`. Each carries its
/// bipartition, oriented so that vertex 0 lies on the left side.
///
/// Candidates are biadjacency matrices whose rows are nonzero and sorted,
/// which covers every class up to row permutation.
pub fn enumerate_connected_balanced_bipartite(order: usize) -> Result<Vec<Graph>, VerifyError> {
    if order % 2 == 1 {
        return Err(VerifyError::InvalidParameters(format!(
            "balanced bipartite graphs have even order, got {order}"
        )));
    }
    if order > BIPARTITE_ENUMERATION_CAP {
        return Err(VerifyError::UnsupportedOrder {
            order,
            cap: BIPARTITE_ENUMERATION_CAP,
        });
    }
    if order == 0 {
        return Ok(Vec::new());
    }
    let m = order / 2;
    let full = (1u64 << m) - 1;
    let mut firsts: Vec<u64> = (1..=full).collect();
    firsts.reverse();
    let found: Vec<(CanonicalForm, Graph)> = firsts
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut out = Vec::new();
            let mut rows = vec![first];
            sorted_rows(m, full, &mut rows, &mut out);
            out
        })
        .collect();
    Ok(dedup_sorted(found))
}

fn sorted_rows(m: usize, full: u64, rows: &mut Vec<u64>, out: &mut Vec<(CanonicalForm, Graph)>) {
    if rows.len() == m {
        let cover = rows.iter().fold(0, |acc, r| acc | r);
        if cover != full {
            return;
        }
        let mut g = Graph::empty(2 * m);
        for (i, &r) in rows.iter().enumerate() {
            for j in VertexSet(r) {
                g.add_edge(i, m + j);
            }
        }
        if !g.is_connected() {
            return;
        }
        let g = g
            .with_bipartition(VertexSet::range(0, m))
            .expect("rows index the left side, columns the right");
        out.push(canonical(&g));
        return;
    }
    let last = *rows.last().expect("seeded with a first row");
    for r in last..=full {
        rows.push(r);
        sorted_rows(m, full, rows, out);
        rows.pop();
    }
}

fn extend_by_vertex(g: &Graph) -> Graph {
    let mut rows = g.rows().to_vec();
    rows.push(0);
    Graph::from_rows(rows)
}

fn canonical(g: &Graph) -> (CanonicalForm, Graph) {
    let (_, mut h) = canonical_labeling(g, DEFAULT_CANON_CAP).expect("order within the canonical cap");
    if let Some(b) = h.bipartition() {
        if !b.left.contains(0) {
            let right = b.right;
            h = h.with_bipartition(right).expect("swapping sides keeps a valid bipartition");
        }
    }
    let form = CanonicalForm::from_canonical(&h);
    (form, h)
}

fn dedup_sorted(items: Vec<(CanonicalForm, Graph)>) -> Vec<Graph> {
    let mut seen: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for (form, g) in items {
        seen.entry(form).or_insert(g);
    }
    seen.into_values().collect()
}

/// Reads one graph6 string per nonblank line. With `dedup`, later graphs
/// isomorphic to an earlier one are dropped.
pub fn load_graph6_file(path: &Path, dedup: bool) -> Result<Vec<Graph>, VerifyError> {
    let text = std::fs::read_to_string(path).map_err(|source| VerifyError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_graph6_lines(&text, &path.display().to_string(), dedup)
}

/// [`load_graph6_file`] on text already in memory; `label` names the source in
/// errors.
pub fn parse_graph6_lines(text: &str, label: &str, dedup: bool) -> Result<Vec<Graph>, VerifyError> {
    let mut graphs = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let g = parse_graph6(line).map_err(|source| VerifyError::Input {
            path: label.to_string(),
            line: i + 1,
            source,
        })?;
        if dedup {
            let form = crate::graph::canonical_form(&g)?;
            if !seen.insert(form) {
                continue;
            }
        }
        graphs.push(g);
    }
    Ok(graphs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{canonical_form, write_graph6};
    use std::collections::BTreeSet;

    /// Isomorphism classes of all connected graphs on `n` vertices by
    /// canonicalizing every labeled edge set.
    fn brute_force_classes(n: usize) -> BTreeSet<CanonicalForm> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let mut out = BTreeSet::new();
        for mask in 0u64..1 << pairs.len() {
            let mut g = Graph::empty(n);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            if g.is_connected() {
                out.insert(canonical_form(&g).unwrap());
            }
        }
        out
    }

    #[test]
    fn connected_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
    }

    #[test]
    fn connected_matches_brute_force() {
        for n in 1..=5 {
            let got: BTreeSet<_> = enumerate_connected(n)
                .unwrap()
                .iter()
                .map(|g| canonical_form(g).unwrap())
                .collect();
            assert_eq!(got, brute_force_classes(n), "order {n}");
        }
    }

    #[test]
    fn enumerated_graphs_are_canonical_and_connected() {
        for g in enumerate_connected(5).unwrap() {
            assert!(g.is_connected());
            assert_eq!(canonical_form(&g).unwrap().as_str(), write_graph6(&g));
        }
    }

    #[test]
    fn all_graph_counts() {
        let counts: Vec<usize> = (0..=6).map(|n| enumerate_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            enumerate_connected(11),
            Err(VerifyError::UnsupportedOrder { order: 11, cap: 10 })
        ));
    }

    fn brute_force_bipartite(m: usize) -> BTreeSet<CanonicalForm> {
        let mut out = BTreeSet::new();
        for mask in 0u64..1 << (m * m) {
            let mut g = Graph::empty(2 * m);
            for i in 0..m {
                for j in 0..m {
                    if mask >> (i * m + j) & 1 == 1 {
                        g.add_edge(i, m + j);
                    }
                }
            }
            if g.is_connected() {
                out.insert(canonical_form(&g).unwrap());
            }
        }
        out
    }

    #[test]
    fn bipartite_small_orders() {
        let two = enumerate_connected_balanced_bipartite(2).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].edge_count(), 1);
        let four = enumerate_connected_balanced_bipartite(4).unwrap();
        let forms: BTreeSet<_> = four.iter().map(|g| canonical_form(g).unwrap()).collect();
        let expected: BTreeSet<_> = [Graph::path(4), Graph::cycle(4)]
            .iter()
            .map(|g| canonical_form(g).unwrap())
            .collect();
        assert_eq!(forms, expected);
    }

    #[test]
    fn bipartite_matches_brute_force() {
        for m in 1..=3 {
            let got = enumerate_connected_balanced_bipartite(2 * m).unwrap();
            let forms: BTreeSet<_> = got.iter().map(|g| canonical_form(g).unwrap()).collect();
            assert_eq!(forms.len(), got.len());
            assert_eq!(forms, brute_force_bipartite(m), "order {}", 2 * m);
            for g in &got {
                let b = g.bipartition().unwrap();
                assert!(b.is_balanced() && b.left.contains(0));
                assert!(g.edges().all(|(u, v)| b.left.contains(u) != b.left.contains(v)));
            }
        }
    }

    #[test]
    fn bipartite_counts() {
        // Cross-checked against an isomorphism-bucketed brute force in networkx.
        let counts: Vec<usize> = [2, 4, 6, 8]
            .iter()
            .map(|&n| enumerate_connected_balanced_bipartite(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 2, 10, 93]);
    }

    #[test]
    fn bipartite_rejects_odd_order() {
        assert!(matches!(
            enumerate_connected_balanced_bipartite(5),
            Err(VerifyError::InvalidParameters(_))
        ));
    }

    #[test]
    fn graph6_lines_with_dedup() {
        let text = "Ch\n\nCM\nC~\n";
        // "Ch" and "CM" are both paths on four vertices.
        assert_eq!(parse_graph6_lines(text, "mem", false).unwrap().len(), 3);
        assert_eq!(parse_graph6_lines(text, "mem", true).unwrap().len(), 2);
        let err = parse_graph6_lines("C~\nC\n", "mem", false).unwrap_err();
        assert!(matches!(err, VerifyError::Input { line: 2, .. }));
    }
}
