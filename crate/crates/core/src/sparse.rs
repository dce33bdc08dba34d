//! Phases of discovery steps that share one round of near-list preprocessing.
//!
//! The input is first split to constant degree. Within a phase each step
//! runs the `t`-nearest kernel on `G_t[Z* ∪ B ∪ Y]` only: the undiscovered
//! heavy vertices, the vertices whose near-list lost an entry to this
//! phase's contractions, and the near-lists hanging off their top-`t` edges.

use std::collections::{BTreeMap, BTreeSet};

use crate::basic::{check_t, tight_parents, Params, RunStats, SsspResult};
use crate::error::Result;
use crate::graph::{split_constant_degree, Digraph};
use crate::nearest::{t_nearest_from, NearGraph};
use crate::nearlist::{preprocess_near_lists, NearLists};
use crate::observe::Observer;
use crate::rt::Runtime;
use crate::weights::{HasZeroAtom, Lifted, WeightKind};

/// `Z* ∪ B ∪ Y` for the current graph, given the phase's near-lists, heavy
/// set and the vertices discovered since the phase started.
pub fn candidate_vertices<K: WeightKind + Clone>(
    rt: &mut Runtime,
    g: &Digraph<K>,
    nl: &NearLists<K::Value>,
    heavy: &BTreeSet<usize>,
    discovered: &BTreeSet<usize>,
    t: usize,
) -> Vec<usize> {
    let mut special: BTreeSet<usize> = heavy.iter().copied().filter(|&z| g.contains(z)).collect();
    let found: Vec<usize> = discovered.iter().copied().collect();
    let bad = rt.par_map(&found, |c, &x| {
        let owners: Vec<usize> = nl.inverse[x].iter().copied().filter(|&u| g.contains(u)).collect();
        c.charge(nl.inverse[x].len() as u64);
        owners
    });
    special.extend(bad.into_iter().flatten());
    let roots: Vec<usize> = special.iter().copied().collect();
    let special_ref = &special;
    let extension = rt.par_map(&roots, |c, &b| {
        let mut ys = Vec::new();
        for e in g.out_by_weight(b).take(t) {
            if !special_ref.contains(&e.head) {
                ys.extend(nl.lists[e.head].iter().map(|x| x.vertex).filter(|&y| g.contains(y)));
            }
        }
        c.charge_batch(ys.len(), ys.len());
        ys
    });
    special.extend(extension.into_iter().flatten());
    special.into_iter().collect()
}

/// Phase length and heavy threshold for an `n`-vertex split graph.
pub fn sparse_params(n: usize, t: usize) -> (usize, usize) {
    let nf = n as f64;
    let tf = t as f64;
    let raw = (nf.cbrt() / (tf * tf)).ceil() as usize;
    let ell = raw.max(t).min((n / t).max(1)).max(1);
    let p = (nf / ell as f64).sqrt().round() as usize;
    let p = p.clamp(2, n.max(2));
    (ell, p)
}

/// Distances in the split graph for the original vertices, with parents
/// mapped back to original vertices.
pub fn sparse_sssp<K, O>(rt: &mut Runtime, g: &Digraph<Lifted<K>>, t: usize, obs: &mut O) -> Result<SsspResult<<Lifted<K> as WeightKind>::Value>>
where
    K: HasZeroAtom + Clone,
    O: Observer<Lifted<K>> + ?Sized,
{
    check_t(t)?;
    let start = rt.counters();
    let (split, _map) = split_constant_degree(g);
    let n_split = split.vertex_count();
    let (ell, p) = sparse_params(n_split, t);
    let s = split.source();
    let kind = split.kind().clone();
    let mut dist = vec![None; split.n()];
    dist[s] = Some(kind.zero());
    let mut cur = split.clone();
    let mut stats = RunStats::default();
    let mut steps = 0;
    'phases: while cur.vertex_count() > 1 {
        let table = preprocess_near_lists(rt, &cur, t, p, &BTreeSet::new())?;
        obs.near_lists(&cur, &table);
        stats.phases += 1;
        let mut discovered = BTreeSet::new();
        for _ in 0..ell {
            if cur.vertex_count() <= 1 {
                break 'phases;
            }
            let h = candidate_vertices(rt, &cur, &table.nl, &table.heavy, &discovered, t);
            let view = NearGraph::induced_top_t(&cur, &h, t);
            let found = t_nearest_from(rt, &kind, &view, s, t)?;
            if found.is_empty() {
                break 'phases;
            }
            obs.discovery(&cur, &h, &found);
            stats.max_h = stats.max_h.max(h.len());
            let batch: BTreeMap<usize, _> = found.iter().map(|e| (e.vertex, e.dist.clone())).collect();
            for (v, d) in &batch {
                dist[*v] = Some(d.clone());
            }
            let xs: Vec<usize> = batch.keys().copied().collect();
            cur.contract_into_source(rt, &xs, &batch)?;
            discovered.extend(xs);
            steps += 1;
        }
    }
    let split_parent = tight_parents(rt, &split, &dist);
    let n = g.n();
    let parent = (0..n)
        .map(|v| {
            let mut at = split_parent[v]?;
            while at >= n {
                at = split_parent[at].expect("gadget nodes on a tree path are reached");
            }
            Some(at)
        })
        .collect();
    dist.truncate(n);
    Ok(SsspResult {
        dist,
        parent,
        steps,
        counters: rt.counters() - start,
        params: Params { t, ell: Some(ell), p: Some(p) },
        stats,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dijkstra::dijkstra;
    use crate::observe::Silent;
    use crate::weights::{integer, RealKind};

    #[test]
    fn g_star() {
        let k = Lifted(RealKind);
        let e = [(0, 1, 1), (0, 2, 4), (1, 2, 2), (2, 3, 1)];
        let g = Digraph::new(k.clone(), 4, 0, e.iter().map(|&(u, v, w)| (u, v, k.atom(u, v, integer(w))))).unwrap();
        let r = sparse_sssp(&mut Runtime::default(), &g, 2, &mut Silent).unwrap();
        let scal: Vec<i64> = r.dist.iter().map(|d| d.as_ref().unwrap().base.to_integer().try_into().unwrap()).collect();
        assert_eq!(scal, vec![0, 1, 3, 4]);
        assert_eq!(r.parent, vec![None, Some(0), Some(1), Some(2)]);
        let (split, _) = split_constant_degree(&g);
        assert_eq!(r.dist, dijkstra(&split)[..4].to_vec());
    }

    #[test]
    fn params_are_clamped() {
        assert_eq!(sparse_params(1, 1), (1, 2));
        let (ell, p) = sparse_params(1000, 2);
        assert!(ell >= 2 && ell <= 500);
        assert!((2..=1000).contains(&p));
    }
}
