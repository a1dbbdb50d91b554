//! Edmonds' blossom algorithm with explicit contraction through a `base`
//! label array. Free vertices are processed in increasing index order and
//! neighbors are scanned in increasing order, so results are deterministic.

use crate::graph::{Graph, VertexSet};

const NONE: usize = usize::MAX;

/// Maximum-cardinality matching of the subgraph induced by `alive`, as a mate
/// array over all vertices of `g` (`None` for unmatched or dead vertices).
pub fn blossom_within(g: &Graph, alive: VertexSet) -> Vec<Option<usize>> {
    let n = g.order();
    let mut state = State {
        g,
        alive,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        queue: Vec::with_capacity(n),
    };
    for root in alive {
        if state.mate[root] == NONE {
            if let Some(end) = state.find_augmenting_path(root) {
                state.augment(end);
            }
        }
    }
    state
        .mate
        .into_iter()
        .map(|m| (m != NONE).then_some(m))
        .collect()
}

struct State<'a> {
    g: &'a Graph,
    alive: VertexSet,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    queue: Vec<usize>,
}

impl State<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut on_path = vec![false; self.mate.len()];
        loop {
            a = self.base[a];
            on_path[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if on_path[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, in_blossom: &mut [bool]) {
        while self.base[v] != b {
            in_blossom[self.base[v]] = true;
            in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the free vertex that
    /// ends an augmenting path.
    fn find_augmenting_path(&mut self, root: usize) -> Option<usize> {
        let n = self.mate.len();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for to in self.g.neighbors(v).intersection(self.alive) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // `to` is an outer vertex: contract the odd cycle.
                    let cur = self.lca(v, to);
                    let mut in_blossom = vec![false; n];
                    self.mark_path(v, cur, to, &mut in_blossom);
                    self.mark_path(to, cur, v, &mut in_blossom);
                    for i in 0..n {
                        if in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }
}
