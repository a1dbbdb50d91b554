//! Canonical labeling by color refinement plus an individualization search.
//!
//! Every leaf of the search tree is a discrete ordered partition, i.e. a
//! relabeling of the graph. The canonical form is the lexicographically
//! smallest relabeled adjacency among the leaves. Automorphisms found when two
//! leaves produce the same relabeled graph prune the search: siblings in the
//! same orbit under automorphisms fixing the current prefix are skipped, and a
//! leaf equivalent to the first leaf abandons its subtree.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{write_graph6, Graph, VertexSet};
use crate::error::GraphError;

pub const DEFAULT_CANON_CAP: usize = 12;

/// Isomorphism-invariant key: the graph6 string of the canonically relabeled
/// graph. Two graphs have equal forms iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// Wraps the graph6 string of a graph already in canonical labeling.
    pub(crate) fn from_canonical(g: &Graph) -> Self {
        CanonicalForm(write_graph6(g))
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.0)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    canonical_form_with_cap(g, DEFAULT_CANON_CAP)
}

pub fn canonical_form_with_cap(g: &Graph, cap: usize) -> Result<CanonicalForm, GraphError> {
    canonical_labeling(g, cap).map(|(_, h)| CanonicalForm(write_graph6(&h)))
}

/// Returns `(perm, h)` where `h = g.relabel(&perm)` is the canonical
/// representative of the isomorphism class of `g`. Bipartition metadata is
/// carried through the relabeling but does not influence it.
pub fn canonical_labeling(g: &Graph, cap: usize) -> Result<(Vec<usize>, Graph), GraphError> {
    let n = g.order();
    if n > cap {
        return Err(GraphError::UnsupportedSize { order: n, cap });
    }
    let mut search = Search {
        rows: g.rows(),
        n,
        first: None,
        best: None,
        automorphisms: Vec::new(),
    };
    let root = refine(g.rows(), vec![(0..n).collect()]);
    let mut prefix = Vec::with_capacity(n);
    search.descend(root, &mut prefix);
    let perm = match search.best {
        Some(leaf) => leaf.positions(),
        None => Vec::new(),
    };
    Ok((perm.clone(), g.relabel(&perm)))
}

type Cells = Vec<Vec<usize>>;

struct Leaf {
    /// `lab[i]` is the vertex placed at position `i`.
    lab: Vec<usize>,
    rows: Vec<u64>,
    path: Vec<usize>,
}

impl Leaf {
    fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.lab.len()];
        for (i, &v) in self.lab.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

struct Search<'a> {
    rows: &'a [u64],
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Explores the subtree at `cells`. Returns `Some(level)` when the caller
    /// chain should unwind to the node at depth `level`.
    fn descend(&mut self, cells: Cells, prefix: &mut Vec<usize>) -> Option<usize> {
        let level = prefix.len();
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            return self.visit_leaf(&cells, prefix);
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if !tried.is_empty() {
                let orbits = self.orbits_fixing(prefix);
                if tried.iter().any(|&w| orbits.same(w, v)) {
                    continue;
                }
            }
            tried.push(v);
            let child = refine(self.rows, individualize(&cells, target, v));
            prefix.push(v);
            let jump = self.descend(child, prefix);
            prefix.pop();
            if let Some(to) = jump {
                if to < level {
                    return Some(to);
                }
            }
        }
        None
    }

    fn visit_leaf(&mut self, cells: &Cells, prefix: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let rows = permuted_rows(self.rows, &lab);
        let leaf = Leaf {
            lab,
            rows,
            path: prefix.to_vec(),
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                lab: leaf.lab.clone(),
                rows: leaf.rows.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if leaf.rows == first.rows {
            let common = first
                .path
                .iter()
                .zip(&leaf.path)
                .take_while(|(a, b)| a == b)
                .count();
            let auto = automorphism(&first.lab, &leaf.lab);
            self.automorphisms.push(auto);
            return Some(common);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match leaf.rows.cmp(&best.rows) {
            std::cmp::Ordering::Equal => {
                let auto = automorphism(&best.lab, &leaf.lab);
                self.automorphisms.push(auto);
            }
            std::cmp::Ordering::Less => self.best = Some(leaf),
            std::cmp::Ordering::Greater => {}
        }
        None
    }

    /// Orbits of the group generated by the known automorphisms that fix
    /// every vertex of `prefix`.
    fn orbits_fixing(&self, prefix: &[usize]) -> Orbits {
        let mut orbits = Orbits::new(self.n);
        for auto in &self.automorphisms {
            if prefix.iter().all(|&v| auto[v] == v) {
                for (v, &w) in auto.iter().enumerate() {
                    orbits.merge(v, w);
                }
            }
        }
        orbits
    }
}

/// `γ` with `γ(from[i]) = to[i]`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut gamma = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        gamma[a] = b;
    }
    gamma
}

fn permuted_rows(rows: &[u64], lab: &[usize]) -> Vec<u64> {
    let mut pos = vec![0usize; lab.len()];
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i;
    }
    lab.iter()
        .map(|&v| VertexSet(rows[v]).iter().fold(0u64, |r, w| r | 1u64 << pos[w]))
        .collect()
}

fn individualize(cells: &Cells, target: usize, v: usize) -> Cells {
    let mut out = Vec::with_capacity(cells.len() + 1);
    out.extend(cells[..target].iter().cloned());
    out.push(vec![v]);
    out.push(cells[target].iter().copied().filter(|&w| w != v).collect());
    out.extend(cells[target + 1..].iter().cloned());
    out
}

/// Equitable refinement of an ordered partition. Cells split by the vector
/// of neighbor counts into every current cell; the new cells keep the
/// position of their parent and are ordered by that vector, which makes the
/// result independent of vertex labels.
fn refine(rows: &[u64], mut cells: Cells) -> Cells {
    loop {
        let masks: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &v| m | 1u64 << v))
            .collect();
        let mut next: Cells = Vec::with_capacity(cells.len());
        let mut split = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| {
                    let sig = masks.iter().map(|m| (rows[v] & m).count_ones()).collect();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                    split |= i - start < cell.len();
                    start = i;
                }
            }
        }
        if !split {
            return next;
        }
        cells = next;
    }
}

struct Orbits(Vec<usize>);

impl Orbits {
    fn new(n: usize) -> Self {
        Orbits((0..n).collect())
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.0[v] != v {
            self.0[v] = self.0[self.0[v]];
            v = self.0[v];
        }
        v
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }

    fn same(&self, a: usize, b: usize) -> bool {
        let root = |mut v: usize| {
            while self.0[v] != v {
                v = self.0[v];
            }
            v
        };
        root(a) == root(b)
    }
}
