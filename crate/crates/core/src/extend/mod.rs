//! Deciders for k-extendability and k-factor-criticality.
//!
//! Each property has a direct decider that works from the definition and one
//! or two deciders built on structural characterizations (Tutte-type for all
//! graphs, Hall-type and deletion-type for bipartite graphs). A negative
//! verdict carries a witness that [`ExtendabilityVerdict::revalidate`] can
//! re-check independently.
//!
//! Conventions:
//! - `k = 0` means "has a perfect matching".
//! - A graph with no k-matching at all is reported as not k-extendable with
//!   the [`Witness::NoKMatching`] marker, by the direct and Tutte deciders.
//! - Subset scans go by increasing size and then lexicographically, so the
//!   first witness found is canonical.

use serde::Serialize;

use crate::error::ExtendError;
use crate::graph::{Graph, VertexSet};
use crate::matching::{has_perfect_matching_within, matching_number_within};
use crate::subsets;

/// Largest order accepted by the exhaustive subset scans.
pub const SUBSET_SCAN_CAP: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    KExtendable,
    KFactorCritical,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    /// A set `S` violating the Tutte-type odd-component bound.
    TutteSet { vertices: Vec<usize> },
    /// A set `X ⊆ U` with `|N(X)| < |X| + k`.
    HallSet { vertices: Vec<usize> },
    /// A k-matching that does not extend to a perfect matching.
    BadMatching { edges: Vec<(usize, usize)> },
    /// Vertices whose deletion leaves a graph without a perfect matching.
    DeletionSet { vertices: Vec<usize> },
    /// The order has the wrong parity.
    Parity,
    /// The bipartition sides differ in size.
    Unbalanced,
    /// The graph has no matching with k edges.
    NoKMatching,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtendabilityVerdict {
    pub property: Property,
    pub k: usize,
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl ExtendabilityVerdict {
    fn yes(property: Property, k: usize) -> Self {
        ExtendabilityVerdict {
            property,
            k,
            holds: true,
            witness: None,
        }
    }

    fn no(property: Property, k: usize, witness: Witness) -> Self {
        ExtendabilityVerdict {
            property,
            k,
            holds: false,
            witness: Some(witness),
        }
    }

    /// True for the vacuous "no k-matching" outcome.
    pub fn lacks_k_matching(&self) -> bool {
        self.witness == Some(Witness::NoKMatching)
    }

    /// Recomputes the violated condition from the witness. Positive verdicts
    /// have nothing to re-check and return `true`.
    pub fn revalidate(&self, g: &Graph) -> bool {
        let Some(w) = &self.witness else {
            return self.holds;
        };
        let k = self.k;
        let n = g.order();
        let all = g.vertices();
        match (self.property, w) {
            (Property::KExtendable, Witness::Parity) => n % 2 == 1,
            (Property::KFactorCritical, Witness::Parity) => n % 2 != k % 2,
            (_, Witness::NoKMatching) => matching_number_within(g, all) < k,
            (_, Witness::Unbalanced) => g.bipartition().is_some_and(|b| !b.is_balanced()),
            (Property::KExtendable, Witness::TutteSet { vertices }) => {
                let s = VertexSet::from_iter(vertices.iter().copied());
                matching_number_within(g, s) >= k
                    && (crate::matching::odd_components(g, s) as i64) > s.len() as i64 - 2 * k as i64
            }
            (Property::KFactorCritical, Witness::TutteSet { vertices }) => {
                let s = VertexSet::from_iter(vertices.iter().copied());
                s.len() >= k && (crate::matching::odd_components(g, s) as i64) > s.len() as i64 - k as i64
            }
            (Property::KExtendable, Witness::HallSet { vertices }) => {
                let Some(b) = g.bipartition() else {
                    return false;
                };
                let x = VertexSet::from_iter(vertices.iter().copied());
                !x.is_empty()
                    && x.is_subset(b.left)
                    && x.len() + k <= b.left.len()
                    && g.neighborhood(x).len() < x.len() + k
            }
            (Property::KExtendable, Witness::BadMatching { edges }) => {
                let mut covered = VertexSet::EMPTY;
                for &(u, v) in edges {
                    if !g.has_edge(u, v) || covered.contains(u) || covered.contains(v) {
                        return false;
                    }
                    covered.insert(u);
                    covered.insert(v);
                }
                edges.len() == k && !has_perfect_matching_within(g, all.difference(covered))
            }
            (Property::KExtendable, Witness::DeletionSet { vertices }) => {
                let Some(b) = g.bipartition() else {
                    return false;
                };
                let d = VertexSet::from_iter(vertices.iter().copied());
                d.intersection(b.left).len() == k
                    && d.intersection(b.right).len() == k
                    && !has_perfect_matching_within(g, all.difference(d))
            }
            (Property::KFactorCritical, Witness::DeletionSet { vertices }) => {
                let d = VertexSet::from_iter(vertices.iter().copied());
                d.len() == k && d.is_subset(all) && !has_perfect_matching_within(g, all.difference(d))
            }
            (Property::KFactorCritical, _) => false,
        }
    }
}

/// All k-matchings of `g` in lexicographic order of their sorted edge lists.
pub fn k_matchings(g: &Graph, k: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(
        edges: &[(usize, usize)],
        start: usize,
        k: usize,
        used: VertexSet,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..edges.len() {
            if edges.len() - i < k - cur.len() {
                break;
            }
            let (u, v) = edges[i];
            if used.contains(u) || used.contains(v) {
                continue;
            }
            cur.push((u, v));
            go(edges, i + 1, k, used.union(VertexSet::from_iter([u, v])), cur, out);
            cur.pop();
        }
    }
    let edges: Vec<_> = g.edges().collect();
    let mut out = Vec::new();
    go(&edges, 0, k, VertexSet::EMPTY, &mut Vec::with_capacity(k), &mut out);
    out
}

/// k-extendability from the definition: every k-matching extends to a perfect
/// matching.
pub fn is_k_extendable_direct(g: &Graph, k: usize) -> ExtendabilityVerdict {
    let p = Property::KExtendable;
    let all = g.vertices();
    if g.order() % 2 == 1 {
        return ExtendabilityVerdict::no(p, k, Witness::Parity);
    }
    if matching_number_within(g, all) < k {
        return ExtendabilityVerdict::no(p, k, Witness::NoKMatching);
    }
    for m in k_matchings(g, k) {
        let covered: VertexSet = m.iter().flat_map(|&(u, v)| [u, v]).collect();
        if !has_perfect_matching_within(g, all.difference(covered)) {
            return ExtendabilityVerdict::no(p, k, Witness::BadMatching { edges: m });
        }
    }
    ExtendabilityVerdict::yes(p, k)
}

/// k-extendability by the Tutte-type condition: `o(G − S) ≤ |S| − 2k` for
/// every `S` whose induced subgraph contains a k-matching.
pub fn is_k_extendable_tutte(g: &Graph, k: usize) -> Result<ExtendabilityVerdict, ExtendError> {
    let p = Property::KExtendable;
    let n = g.order();
    check_cap(n)?;
    if n % 2 == 1 {
        return Ok(ExtendabilityVerdict::no(p, k, Witness::Parity));
    }
    let all = g.vertices();
    if matching_number_within(g, all) < k {
        return Ok(ExtendabilityVerdict::no(p, k, Witness::NoKMatching));
    }
    for s in subsets::by_size(all, (2 * k).min(n)..=n) {
        if (crate::matching::odd_components(g, s) as i64) > s.len() as i64 - 2 * k as i64
            && matching_number_within(g, s) >= k
        {
            return Ok(ExtendabilityVerdict::no(p, k, Witness::TutteSet { vertices: s.to_vec() }));
        }
    }
    Ok(ExtendabilityVerdict::yes(p, k))
}

/// k-extendability of a bipartite graph by the Hall-type condition: balanced,
/// and `|N(X)| ≥ |X| + k` for every nonempty `X ⊆ U` with `|X| ≤ |U| − k`.
pub fn is_k_extendable_hall(g: &Graph, k: usize) -> Result<ExtendabilityVerdict, ExtendError> {
    let p = Property::KExtendable;
    let sides = g.bipartition().ok_or(ExtendError::MissingBipartition)?;
    if !sides.is_balanced() {
        return Ok(ExtendabilityVerdict::no(p, k, Witness::Unbalanced));
    }
    let u = sides.left;
    if u.len() >= k {
        for x in subsets::by_size(u, 1..=u.len() - k) {
            if g.neighborhood(x).len() < x.len() + k {
                return Ok(ExtendabilityVerdict::no(p, k, Witness::HallSet { vertices: x.to_vec() }));
            }
        }
    }
    Ok(ExtendabilityVerdict::yes(p, k))
}

/// k-extendability of a balanced bipartite graph by deletion: removing any k
/// vertices from each side leaves a graph with a perfect matching.
pub fn is_k_extendable_deletion(g: &Graph, k: usize) -> Result<ExtendabilityVerdict, ExtendError> {
    let p = Property::KExtendable;
    let sides = g.bipartition().ok_or(ExtendError::MissingBipartition)?;
    if !sides.is_balanced() {
        return Ok(ExtendabilityVerdict::no(p, k, Witness::Unbalanced));
    }
    let all = g.vertices();
    for a in subsets::of_size(sides.left, k) {
        for b in subsets::of_size(sides.right, k) {
            let gone = a.union(b);
            if !has_perfect_matching_within(g, all.difference(gone)) {
                return Ok(ExtendabilityVerdict::no(p, k, Witness::DeletionSet { vertices: gone.to_vec() }));
            }
        }
    }
    Ok(ExtendabilityVerdict::yes(p, k))
}

/// k-factor-criticality from the definition: `G − S` has a perfect matching
/// for every `S` with `|S| = k`.
pub fn is_k_factor_critical(g: &Graph, k: usize) -> ExtendabilityVerdict {
    let p = Property::KFactorCritical;
    if g.order() % 2 != k % 2 {
        return ExtendabilityVerdict::no(p, k, Witness::Parity);
    }
    let all = g.vertices();
    if k <= g.order() {
        for s in subsets::of_size(all, k) {
            if !has_perfect_matching_within(g, all.difference(s)) {
                return ExtendabilityVerdict::no(p, k, Witness::DeletionSet { vertices: s.to_vec() });
            }
        }
    }
    ExtendabilityVerdict::yes(p, k)
}

/// k-factor-criticality by the Tutte-type condition: `n ≡ k (mod 2)` and
/// `o(G − S) ≤ |S| − k` for every `S` with `|S| ≥ k`.
pub fn is_k_factor_critical_tutte(g: &Graph, k: usize) -> Result<ExtendabilityVerdict, ExtendError> {
    let p = Property::KFactorCritical;
    let n = g.order();
    check_cap(n)?;
    if n % 2 != k % 2 {
        return Ok(ExtendabilityVerdict::no(p, k, Witness::Parity));
    }
    if k <= n {
        for s in subsets::by_size(g.vertices(), k..=n) {
            if (crate::matching::odd_components(g, s) as i64) > s.len() as i64 - k as i64 {
                return Ok(ExtendabilityVerdict::no(p, k, Witness::TutteSet { vertices: s.to_vec() }));
            }
        }
    }
    Ok(ExtendabilityVerdict::yes(p, k))
}

fn check_cap(n: usize) -> Result<(), ExtendError> {
    if n > SUBSET_SCAN_CAP {
        return Err(ExtendError::UnsupportedSize {
            order: n,
            cap: SUBSET_SCAN_CAP,
        });
    }
    Ok(())
}
