//! Simple undirected graphs on at most 64 vertices, stored as one adjacency
//! bitmask per vertex, together with the block operators used to build the
//! extremal families (join, disjoint union, diamond).

mod canon;
mod family;
mod graph6;

pub use canon::{canonical_form, canonical_form_with_cap, canonical_labeling, CanonicalForm, DEFAULT_CANON_CAP};
pub use family::{Built, GraphFamily};
pub use graph6::{parse_graph6, write_graph6, MAX_GRAPH6_ORDER};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// Largest order representable by the bitmask adjacency.
pub const MAX_ORDER: usize = 64;

/// A set of vertices encoded as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", from = "Vec<usize>")]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_ORDER);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    /// The vertices `start..end`.
    pub fn range(start: usize, end: usize) -> Self {
        if start >= end {
            return Self::EMPTY;
        }
        VertexSet(Self::full(end).0 & !Self::full(start).0)
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest vertex in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        v.into_iter().collect()
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Self {
        s.to_vec()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for VertexIter {}

/// The two sides `(U, W)` of a bipartite graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl Bipartition {
    pub fn is_balanced(&self) -> bool {
        self.left.len() == self.right.len()
    }

    pub fn swapped(self) -> Self {
        Bipartition {
            left: self.right,
            right: self.left,
        }
    }
}

/// A simple undirected graph with optional bipartition metadata.
///
/// Vertices are `0..n`. Values are immutable once built by the constructors
/// below; the `add_edge` family is only meant for construction code.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    bipartition: Option<Bipartition>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = f.debug_struct("Graph");
        s.field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>());
        if let Some(b) = &self.bipartition {
            s.field("bipartition", b);
        }
        s.finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        Graph {
            n,
            adj: vec![0; n],
            bipartition: None,
        }
    }

    /// Complete graph `K_n`.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        let all = VertexSet::full(n).0;
        for v in 0..n {
            g.adj[v] = all & !(1u64 << v);
        }
        g
    }

    /// Path `P_n` on vertices `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Cycle `C_n` (requires `n >= 3`).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    /// The Petersen graph (outer 5-cycle 0..5, inner pentagram 5..10).
    pub fn petersen() -> Self {
        let mut g = Graph::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    /// Complete bipartite graph `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        diamond(a, b, 0, 0)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge {
                order: n,
                max: MAX_ORDER,
            });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows. Rows must be symmetric and loop-free.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Self {
        debug_assert!(rows.iter().enumerate().all(|(v, r)| r >> v & 1 == 0));
        Graph {
            n: rows.len(),
            adj: rows,
            bipartition: None,
        }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u},{v}) out of range");
        assert_ne!(u, v, "self-loop at {u}");
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1u64 << v);
        self.adj[v] &= !(1u64 << u);
    }

    /// Copy of `self` with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.add_edge(u, v);
        if let Some(b) = g.bipartition {
            if !(b.left.contains(u) ^ b.left.contains(v)) {
                g.bipartition = None;
            }
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Union of the neighborhoods of `set`.
    pub fn neighborhood(&self, set: VertexSet) -> VertexSet {
        set.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.neighbors(v)))
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !VertexSet::full(u + 1).0)
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Unordered non-adjacent pairs `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(!self.adj[u] & VertexSet::range(u + 1, self.n).0)
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() * 2 == self.n * self.n.saturating_sub(1)
    }

    pub fn bipartition(&self) -> Option<&Bipartition> {
        self.bipartition.as_ref()
    }

    /// Attaches `(left, complement)` as the bipartition after checking every
    /// edge crosses it.
    pub fn with_bipartition(mut self, left: VertexSet) -> Result<Self, GraphError> {
        if !left.is_subset(self.vertices()) {
            return Err(GraphError::InvalidBipartition(format!(
                "{left:?} is not a subset of the vertex set"
            )));
        }
        let right = self.vertices().difference(left);
        for (u, v) in self.edges() {
            if left.contains(u) == left.contains(v) {
                return Err(GraphError::InvalidBipartition(format!(
                    "edge ({u},{v}) lies inside one side"
                )));
            }
        }
        self.bipartition = Some(Bipartition { left, right });
        Ok(self)
    }

    pub fn without_bipartition(mut self) -> Self {
        self.bipartition = None;
        self
    }

    /// Proper 2-coloring, if one exists. For a connected graph the result is
    /// the unique bipartition up to swapping sides, with vertex 0 on the left.
    pub fn two_coloring(&self) -> Option<Bipartition> {
        let mut left = VertexSet::EMPTY;
        let mut right = VertexSet::EMPTY;
        let mut unseen = self.vertices();
        while let Some(root) = unseen.first() {
            let mut layer = VertexSet::singleton(root);
            let mut on_left = true;
            while !layer.is_empty() {
                unseen = unseen.difference(layer);
                if on_left {
                    left = left.union(layer);
                } else {
                    right = right.union(layer);
                }
                layer = self.neighborhood(layer).intersection(unseen);
                on_left = !on_left;
            }
        }
        self.edges()
            .all(|(u, v)| left.contains(u) != left.contains(v))
            .then_some(Bipartition { left, right })
    }

    /// Vertex sets of the connected components of the subgraph induced by
    /// `alive`, ordered by smallest vertex.
    pub fn components_within(&self, alive: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        let mut rest = alive;
        while let Some(root) = rest.first() {
            let mut comp = VertexSet::singleton(root);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let next = self.neighborhood(frontier).intersection(rest).difference(comp);
                comp = comp.union(next);
                frontier = next;
            }
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// True iff the graph has exactly one connected component. The graph on
    /// zero vertices is not connected.
    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    /// Subgraph induced by `keep`, relabeled to `0..|keep|` preserving order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let order: Vec<usize> = keep.to_vec();
        let mut pos = [usize::MAX; MAX_ORDER];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut h = Graph::empty(order.len());
        for (i, &v) in order.iter().enumerate() {
            h.adj[i] = VertexSet(self.adj[v] & keep.0).iter().fold(0, |r, w| r | 1u64 << pos[w]);
        }
        if let Some(b) = &self.bipartition {
            let left: VertexSet = order
                .iter()
                .enumerate()
                .filter(|(_, &v)| b.left.contains(v))
                .map(|(i, _)| i)
                .collect();
            h.bipartition = Some(Bipartition {
                left,
                right: h.vertices().difference(left),
            });
        }
        h
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let map = |s: u64| VertexSet(s).iter().fold(0u64, |r, w| r | 1u64 << perm[w]);
        let mut rows = vec![0u64; self.n];
        for v in 0..self.n {
            rows[perm[v]] = map(self.adj[v]);
        }
        Graph {
            n: self.n,
            adj: rows,
            bipartition: self.bipartition.map(|b| Bipartition {
                left: VertexSet(map(b.left.0)),
                right: VertexSet(map(b.right.0)),
            }),
        }
    }

    /// Compares adjacency only, ignoring bipartition metadata.
    pub fn same_adjacency(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

/// Join `g ∨ h`: disjoint union with `g` on `0..n_g`, plus every edge between
/// the two blocks. The join of two edgeless graphs keeps its bipartition.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let mut out = union(g, h);
    let left = VertexSet::full(g.n);
    let right = VertexSet::range(g.n, g.n + h.n);
    for v in left {
        out.adj[v] |= right.0;
    }
    for v in right {
        out.adj[v] |= left.0;
    }
    out.bipartition = (g.edge_count() == 0 && h.edge_count() == 0 && g.n > 0 && h.n > 0)
        .then_some(Bipartition { left, right });
    out
}

/// Disjoint union `g ∪ h` with `g` on `0..n_g`.
pub fn union(g: &Graph, h: &Graph) -> Graph {
    let n = g.n + h.n;
    assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
    let mut adj = g.adj.clone();
    adj.extend(h.adj.iter().map(|r| r << g.n));
    let shift = |s: VertexSet| VertexSet(s.0 << g.n);
    let bipartition = match (g.bipartition, h.bipartition) {
        (Some(a), Some(b)) => Some(Bipartition {
            left: a.left.union(shift(b.left)),
            right: a.right.union(shift(b.right)),
        }),
        _ => None,
    };
    Graph {
        n,
        adj,
        bipartition,
    }
}

/// Disjoint union of all graphs in order.
pub fn union_all<'a>(parts: impl IntoIterator<Item = &'a Graph>) -> Graph {
    parts.into_iter().fold(Graph::empty(0), |acc, g| union(&acc, g))
}

/// `K_{a,b} ⋄ K_{c,d}`: the union of `K_{a,b}` and `K_{c,d}` plus every edge
/// between the `b`-part and the `c`-part.
///
/// Blocks are laid out contiguously as `a | b | c | d`; the bipartition is
/// `(a ∪ c, b ∪ d)`.
pub fn diamond(a: usize, b: usize, c: usize, d: usize) -> Graph {
    let [pa, pb, pc, pd] = diamond_blocks(a, b, c, d);
    let mut g = Graph::empty(a + b + c + d);
    let mut connect = |x: VertexSet, y: VertexSet| {
        for u in x {
            g.adj[u] |= y.0;
        }
        for v in y {
            g.adj[v] |= x.0;
        }
    };
    connect(pa, pb);
    connect(pc, pd);
    connect(pb, pc);
    let left = pa.union(pc);
    g.bipartition = Some(Bipartition {
        left,
        right: pb.union(pd),
    });
    g
}

/// Vertex blocks `[a, b, c, d]` of [`diamond`].
pub fn diamond_blocks(a: usize, b: usize, c: usize, d: usize) -> [VertexSet; 4] {
    [
        VertexSet::range(0, a),
        VertexSet::range(a, a + b),
        VertexSet::range(a + b, a + b + c),
        VertexSet::range(a + b + c, a + b + c + d),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn join_of_singletons_is_k2() {
        let g = join(&Graph::complete(1), &Graph::complete(1));
        assert!(g.same_adjacency(&Graph::complete(2)));
    }

    #[test]
    fn join_of_empties_is_complete_bipartite() {
        let g = join(&Graph::empty(3), &Graph::empty(2));
        let mut direct = Graph::empty(5);
        for u in 0..3 {
            for v in 3..5 {
                direct.add_edge(u, v);
            }
        }
        assert!(g.same_adjacency(&direct));
        assert!(g.same_adjacency(&Graph::complete_bipartite(3, 2)));
        assert_eq!(g.bipartition().unwrap().left.len(), 3);
    }

    #[test]
    fn diamond_1111_is_p4() {
        // a=0, b=1, c=2, d=3 gives the path 0-1-2-3.
        assert!(diamond(1, 1, 1, 1).same_adjacency(&Graph::path(4)));
    }

    #[test]
    fn diamond_with_empty_second_block() {
        let g = diamond(2, 3, 0, 0);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.bipartition().unwrap().left, VertexSet::range(0, 2));
    }

    #[test]
    fn diamond_is_two_colorable_with_expected_sides() {
        for (a, b, c, d) in [(2, 3, 1, 1), (1, 2, 3, 1), (3, 2, 2, 1)] {
            let g = diamond(a, b, c, d);
            let col = g.two_coloring().expect("bipartite");
            let sizes = {
                let mut s = [col.left.len(), col.right.len()];
                s.sort();
                s
            };
            let mut want = [a + c, b + d];
            want.sort();
            assert_eq!(sizes, want);
        }
    }

    #[test]
    fn connectivity() {
        assert!(Graph::complete(4).is_connected());
        assert!(!union(&Graph::complete(2), &Graph::complete(2)).is_connected());
        assert!(!Graph::empty(0).is_connected());
        assert!(Graph::complete(1).is_connected());
    }

    #[test]
    fn induced_and_relabel() {
        let p = Graph::path(4);
        let h = p.induced(VertexSet::from_iter([1, 2, 3]));
        assert!(h.same_adjacency(&Graph::path(3)));
        let r = p.relabel(&[3, 2, 1, 0]);
        assert!(r.same_adjacency(&p));
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn with_bipartition_validates_edges() {
        assert!(Graph::path(3).with_bipartition(VertexSet::from_iter([0, 2])).is_ok());
        assert!(Graph::path(3).with_bipartition(VertexSet::from_iter([0, 1])).is_err());
    }

    #[test]
    fn petersen_is_cubic() {
        let g = Graph::petersen();
        assert_eq!(g.edge_count(), 15);
        assert!((0..10).all(|v| g.degree(v) == 3));
    }
}
