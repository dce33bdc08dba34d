//! Repeated `t`-nearest discovery on the whole graph, then contraction.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::nearest::{t_nearest_from, NearGraph};
use crate::observe::Observer;
use crate::rt::{Counters, Runtime};
use crate::weights::WeightKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Params {
    pub t: usize,
    pub ell: Option<usize>,
    pub p: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunStats {
    pub phases: usize,
    /// Largest candidate subgraph a discovery step ran on.
    pub max_h: usize,
    pub refill_steps: usize,
    pub non_concluding_refills: usize,
    /// The dense algorithm gave way to the basic one.
    pub fell_back: bool,
}

#[derive(Debug, Clone)]
pub struct SsspResult<V> {
    pub dist: Vec<Option<V>>,
    pub parent: Vec<Option<usize>>,
    pub steps: usize,
    pub counters: Counters,
    pub params: Params,
    pub stats: RunStats,
}

/// For each reached vertex other than the source, an in-neighbour whose edge is tight.
pub fn tight_parents<K: WeightKind + Clone>(rt: &mut Runtime, g: &Digraph<K>, dist: &[Option<K::Value>]) -> Vec<Option<usize>> {
    let kind = g.kind();
    let s = g.source();
    let vs: Vec<usize> = (0..g.n()).collect();
    rt.par_map(&vs, |c, &v| {
        if v == s || !g.contains(v) {
            return None;
        }
        let dv = dist[v].as_ref()?;
        let found = g.in_neighbors(v).find(|&u| {
            let Some(du) = &dist[u] else { return false };
            let e = g.edge(u, v).expect("mirror agrees");
            let via = match &e.atom {
                Some(a) => kind.add_edge_batch(du, std::slice::from_ref(a)),
                None => e.weight.clone(),
            };
            kind.eq(&via, dv)
        });
        c.charge(g.indeg(v) as u64);
        Some(found.expect("every reached vertex has a tight in-edge"))
    })
}

pub(crate) fn check_t(t: usize) -> Result<()> {
    if t < 1 {
        return Err(Error::InvalidParameter(format!("t must be positive, got {t}")));
    }
    Ok(())
}

pub fn basic_sssp<K, O>(rt: &mut Runtime, g: &Digraph<K>, t: usize, obs: &mut O) -> Result<SsspResult<K::Value>>
where
    K: WeightKind + Clone,
    O: Observer<K> + ?Sized,
{
    check_t(t)?;
    let start = rt.counters();
    let s = g.source();
    let kind = g.kind();
    let mut dist: Vec<Option<K::Value>> = vec![None; g.n()];
    dist[s] = Some(kind.zero());
    let mut cur = g.clone();
    let mut steps = 0;
    while cur.vertex_count() > 1 {
        let view = NearGraph::top_t(&cur, t);
        let found = t_nearest_from(rt, kind, &view, s, t)?;
        if found.is_empty() {
            break;
        }
        obs.discovery(&cur, view.vertices(), &found);
        let batch: BTreeMap<usize, K::Value> = found.iter().map(|e| (e.vertex, e.dist.clone())).collect();
        for (v, d) in &batch {
            dist[*v] = Some(d.clone());
        }
        let xs: Vec<usize> = batch.keys().copied().collect();
        cur.contract_into_source(rt, &xs, &batch)?;
        steps += 1;
    }
    let parent = tight_parents(rt, g, &dist);
    Ok(SsspResult {
        dist,
        parent,
        steps,
        counters: rt.counters() - start,
        params: Params { t, ell: None, p: None },
        stats: RunStats { max_h: g.vertex_count(), ..RunStats::default() },
    })
}
