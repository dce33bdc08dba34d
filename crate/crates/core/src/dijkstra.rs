//! Sequential Dijkstra, the reference every parallel algorithm is checked against.

use crate::graph::{Digraph, EdgeOf};
use crate::weights::WeightKind;

fn relax<K: WeightKind>(kind: &K, d: &K::Value, e: &EdgeOf<K>) -> K::Value {
    match &e.atom {
        Some(a) => kind.add_edge_batch(d, std::slice::from_ref(a)),
        // only source edges lack atoms, and the source is never entered
        None => e.weight.clone(),
    }
}

/// Distances from `from` to every vertex slot of `g` (`None` if unreachable).
pub fn dijkstra_from<K: WeightKind + Clone>(g: &Digraph<K>, from: usize) -> Vec<Option<K::Value>> {
    let kind = g.kind();
    let n = g.n();
    let mut dist: Vec<Option<K::Value>> = vec![None; n];
    let mut done = vec![false; n];
    if !g.contains(from) {
        return dist;
    }
    dist[from] = Some(kind.zero());
    loop {
        let mut best: Option<usize> = None;
        for v in 0..n {
            if done[v] {
                continue;
            }
            if let Some(d) = &dist[v] {
                if best.is_none_or(|b| kind.less(d, dist[b].as_ref().unwrap())) {
                    best = Some(v);
                }
            }
        }
        let Some(u) = best else { break };
        done[u] = true;
        let du = dist[u].clone().unwrap();
        for e in g.out_edges(u) {
            if done[e.head] {
                continue;
            }
            let cand = relax(kind, &du, e);
            if dist[e.head].as_ref().is_none_or(|old| kind.less(&cand, old)) {
                dist[e.head] = Some(cand);
            }
        }
    }
    dist
}

pub fn dijkstra<K: WeightKind + Clone>(g: &Digraph<K>) -> Vec<Option<K::Value>> {
    dijkstra_from(g, g.source())
}
