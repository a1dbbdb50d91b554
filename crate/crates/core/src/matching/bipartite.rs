//! Hopcroft–Karp: phases of breadth-first layering from the free left
//! vertices followed by vertex-disjoint shortest augmenting paths.

use crate::graph::{Bipartition, Graph, VertexSet};

const INF: usize = usize::MAX;

pub fn hopcroft_karp_within(g: &Graph, sides: &Bipartition, alive: VertexSet) -> Vec<Option<usize>> {
    let n = g.order();
    let left: Vec<usize> = sides.left.intersection(alive).to_vec();
    let mut mate = vec![None; n];
    let mut dist = vec![INF; n];
    loop {
        // Layer the left vertices by alternating distance from a free one.
        let mut queue = Vec::with_capacity(left.len());
        for &u in &left {
            if mate[u].is_none() {
                dist[u] = 0;
                queue.push(u);
            } else {
                dist[u] = INF;
            }
        }
        let mut found = false;
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for w in g.neighbors(u).intersection(alive) {
                match mate[w] {
                    None => found = true,
                    Some(u2) if dist[u2] == INF => {
                        dist[u2] = dist[u] + 1;
                        queue.push(u2);
                    }
                    Some(_) => {}
                }
            }
        }
        if !found {
            break;
        }
        for &u in &left {
            if mate[u].is_none() {
                augment(g, alive, u, &mut mate, &mut dist);
            }
        }
    }
    mate
}

fn augment(g: &Graph, alive: VertexSet, u: usize, mate: &mut [Option<usize>], dist: &mut [usize]) -> bool {
    for w in g.neighbors(u).intersection(alive) {
        let ok = match mate[w] {
            None => true,
            Some(u2) => dist[u2] == dist[u] + 1 && augment(g, alive, u2, mate, dist),
        };
        if ok {
            mate[u] = Some(w);
            mate[w] = Some(u);
            return true;
        }
    }
    dist[u] = INF;
    false
}
