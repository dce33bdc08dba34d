//! Phases over general graphs.
//!
//! Near-lists are computed on the alive subgraph with the permanently heavy
//! vertices pre-marked, then extended by one alive edge so that they again
//! dominate distances in the whole graph. Discovery steps work as in the
//! sparse algorithm with the extended lists.

use std::collections::{BTreeMap, BTreeSet};

use crate::alive::{init_alive, update_alive, AliveState};
use crate::basic::{basic_sssp, check_t, tight_parents, Params, RunStats, SsspResult};
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::nearest::{t_nearest_from, NearGraph};
use crate::nearlist::{preprocess_near_lists, NearListTable, NearLists, NlEntry};
use crate::observe::Observer;
use crate::rt::Runtime;
use crate::sparse::candidate_vertices;
use crate::weights::WeightKind;

/// Phase-length exponent of `t` for real weights.
pub const REAL_ELL_EXPONENT: f64 = 12.0 / 5.0;
/// Phase-length exponent of `t` when weights come from a tree-backed monoid.
pub const EXOTIC_ELL_EXPONENT: f64 = 16.0 / 5.0;

/// `(t, ell, p)` for an `n`-vertex graph, or `None` when the phase length
/// cannot be at least `t`.
pub fn dense_params(n: usize, t: usize, ell_exponent: f64) -> Option<(usize, usize, usize)> {
    let t = t.clamp(1, n.saturating_sub(1).max(1));
    let cap = n / t;
    if cap < t {
        return None;
    }
    let nf = n as f64;
    let raw = (nf.powf(0.2) / (t as f64).powf(ell_exponent)).ceil() as usize;
    let ell = raw.clamp(t, cap);
    let p = (nf / ell as f64).powf(0.25).round() as usize;
    Some((t, ell, p.clamp(2, n.max(2))))
}

/// The alive subgraph `J` and near-lists computed on it from `Z0 ∪ {s}`.
pub fn dense_near_lists<K: WeightKind + Clone>(
    rt: &mut Runtime,
    g: &Digraph<K>,
    st: &AliveState,
) -> Result<(Digraph<K>, NearListTable<K::Value>)> {
    let mut j = g.clone();
    let s = g.source();
    for v in g.vertices() {
        for e in g.out_edges(v) {
            if !st.is_alive(v, e.head) {
                j.remove_edge(v, e.head);
            }
        }
    }
    for v in j.vertices() {
        if v != s && (j.outdeg(v) > 3 * st.t || j.indeg(v) > st.p) {
            return Err(Error::InvariantBreach(format!(
                "alive degrees of {v} are out {} / in {} with t = {}, p = {}",
                j.outdeg(v),
                j.indeg(v),
                st.t,
                st.p
            )));
        }
    }
    let mut z = st.z0.clone();
    z.insert(s);
    let table = preprocess_near_lists(rt, &j, st.t, st.p, &z)?;
    Ok((j, table))
}

/// Extends every light vertex's near-list by one alive edge and keeps the
/// `t + 1` closest vertices.
pub fn improve_near_lists<K: WeightKind + Clone>(
    rt: &mut Runtime,
    g: &Digraph<K>,
    st: &AliveState,
    table: &NearListTable<K::Value>,
) -> NearLists<K::Value> {
    let kind = g.kind();
    let t = table.t;
    let vs: Vec<usize> = (0..g.n()).collect();
    let lists = rt.par_map(&vs, |c, &u| {
        let nl = &table.nl.lists[u];
        if table.heavy.contains(&u) || !g.contains(u) {
            return nl.clone();
        }
        let mut best: BTreeMap<usize, NlEntry<K::Value>> = BTreeMap::new();
        let mut offer = |e: NlEntry<K::Value>| match best.get(&e.vertex) {
            Some(old) if !kind.less(&e.dist, &old.dist) => {}
            _ => {
                best.insert(e.vertex, e);
            }
        };
        for x in nl {
            offer(x.clone());
            for &y in &st.alive_out[x.vertex] {
                let edge = g.edge(x.vertex, y).expect("alive edges are graph edges");
                let atom = edge.atom.as_ref().expect("light vertices are not the source");
                offer(NlEntry { vertex: y, dist: kind.add_edge_batch(&x.dist, std::slice::from_ref(atom)), via: Some(x.vertex) });
            }
        }
        let mut out: Vec<NlEntry<K::Value>> = best.into_values().collect();
        out.sort_by(|a, b| kind.compare(&a.dist, &b.dist));
        out.truncate(t + 1);
        c.charge_batch(out.len(), nl.len());
        out
    });
    NearLists::new(lists)
}

pub fn dense_sssp<K, O>(rt: &mut Runtime, g: &Digraph<K>, t: usize, obs: &mut O) -> Result<SsspResult<K::Value>>
where
    K: WeightKind + Clone,
    O: Observer<K> + ?Sized,
{
    dense_sssp_scheduled(rt, g, t, REAL_ELL_EXPONENT, obs)
}

/// As [`dense_sssp`] with the phase length computed from `ell_exponent`.
pub fn dense_sssp_scheduled<K, O>(rt: &mut Runtime, g: &Digraph<K>, t: usize, ell_exponent: f64, obs: &mut O) -> Result<SsspResult<K::Value>>
where
    K: WeightKind + Clone,
    O: Observer<K> + ?Sized,
{
    check_t(t)?;
    let Some((t, ell, p)) = dense_params(g.vertex_count(), t, ell_exponent) else {
        let mut r = basic_sssp(rt, g, t, obs)?;
        r.stats.fell_back = true;
        return Ok(r);
    };
    let start = rt.counters();
    let s = g.source();
    let kind = g.kind();
    let mut dist = vec![None; g.n()];
    dist[s] = Some(kind.zero());
    let mut cur = g.clone();
    let mut st = init_alive(rt, &cur, t, p);
    obs.alive(&cur, &st);
    let mut stats = RunStats::default();
    let mut steps = 0;
    'phases: while cur.vertex_count() > 1 {
        let (j, table) = dense_near_lists(rt, &cur, &st)?;
        obs.near_lists(&j, &table);
        let improved = improve_near_lists(rt, &cur, &st, &table);
        obs.improved(&cur, &table, &improved);
        stats.phases += 1;
        let mut discovered = BTreeSet::new();
        for _ in 0..ell {
            if cur.vertex_count() <= 1 {
                break 'phases;
            }
            let h = candidate_vertices(rt, &cur, &improved, &table.heavy, &discovered, t);
            let view = NearGraph::induced_top_t(&cur, &h, t);
            let found = t_nearest_from(rt, kind, &view, s, t)?;
            if found.is_empty() {
                break 'phases;
            }
            obs.discovery(&cur, &h, &found);
            stats.max_h = stats.max_h.max(h.len());
            let batch: BTreeMap<usize, K::Value> = found.iter().map(|e| (e.vertex, e.dist.clone())).collect();
            for (v, d) in &batch {
                dist[*v] = Some(d.clone());
            }
            let xs: Vec<usize> = batch.keys().copied().collect();
            cur.contract_into_source(rt, &xs, &batch)?;
            let gone: BTreeSet<usize> = xs.iter().copied().collect();
            update_alive(rt, &mut st, &cur, &gone);
            obs.alive(&cur, &st);
            discovered.extend(xs);
            steps += 1;
        }
    }
    stats.refill_steps = st.refill_steps;
    stats.non_concluding_refills = st.non_concluding;
    let parent = tight_parents(rt, g, &dist);
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
    use crate::weights::{integer, Lifted, RealKind};

    #[test]
    fn g_star_unit_t() {
        let k = Lifted(RealKind);
        let e = [(0, 1, 1), (0, 2, 4), (1, 2, 2), (2, 3, 1)];
        let g = Digraph::new(k.clone(), 4, 0, e.iter().map(|&(u, v, w)| (u, v, k.atom(u, v, integer(w))))).unwrap();
        let r = dense_sssp(&mut Runtime::default(), &g, 1, &mut Silent).unwrap();
        assert_eq!(r.dist, dijkstra(&g));
        assert_eq!(r.steps, 3);
        assert!(!r.stats.fell_back);
    }

    #[test]
    fn params() {
        assert_eq!(dense_params(4, 1, REAL_ELL_EXPONENT), Some((1, 2, 2)));
        assert_eq!(dense_params(10, 4, REAL_ELL_EXPONENT), None);
        let (t, ell, p) = dense_params(60, 2, REAL_ELL_EXPONENT).unwrap();
        assert_eq!((t, ell), (2, 2));
        assert_eq!(p, 2);
    }
}
