//! Near-lists: synchronized truncated Dijkstra runs from every vertex.
//!
//! Run `u` grows `NL(u)` one vertex per iteration, exploring only edges
//! between light vertices. After each iteration every light vertex found in
//! at least `p` near-lists turns heavy; queues drop heavy vertices and the
//! key contributions of heavy tails, and runs rooted at heavy vertices stop.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::rt::Runtime;
use crate::weights::WeightKind;

#[derive(Debug, Clone, PartialEq)]
pub struct NlEntry<V> {
    pub vertex: usize,
    pub dist: V,
    /// Previous vertex on the path realizing `dist` (`None` for the root).
    pub via: Option<usize>,
}

/// Near-lists with their inverse lists, indexed by vertex slot.
#[derive(Debug, Clone)]
pub struct NearLists<V> {
    pub lists: Vec<Vec<NlEntry<V>>>,
    pub inverse: Vec<Vec<usize>>,
}

impl<V> NearLists<V> {
    pub fn new(lists: Vec<Vec<NlEntry<V>>>) -> Self {
        let mut inverse = vec![Vec::new(); lists.len()];
        for (u, list) in lists.iter().enumerate() {
            for e in list {
                inverse[e.vertex].push(u);
            }
        }
        NearLists { lists, inverse }
    }

    pub fn appearances(&self, v: usize) -> usize {
        self.inverse[v].len()
    }

    pub fn get(&self, u: usize, v: usize) -> Option<&NlEntry<V>> {
        self.lists[u].iter().find(|e| e.vertex == v)
    }
}

#[derive(Debug, Clone)]
pub struct NearListTable<V> {
    pub t: usize,
    pub p: usize,
    pub nl: NearLists<V>,
    /// `Z`, always containing the source and the initial heavy set.
    pub heavy: BTreeSet<usize>,
}

struct Run<V> {
    list: Vec<NlEntry<V>>,
    /// `(candidate, contributing tail, value)`; a candidate may appear once per tail.
    queue: Vec<(usize, usize, V)>,
}

impl<V> Run<V> {
    fn holds(&self, v: usize) -> bool {
        self.list.iter().any(|e| e.vertex == v)
    }
}

struct Visit<V> {
    x: usize,
    dist: V,
    via: usize,
    pushes: Vec<(usize, V)>,
}

fn pushes_from<K: WeightKind + Clone>(g: &Digraph<K>, heavy: &[bool], run: Option<&Run<K::Value>>, x: usize, d: &K::Value) -> Vec<(usize, K::Value)> {
    let kind = g.kind();
    g.out_edges(x)
        .filter(|e| !heavy[e.head] && e.head != x && !run.is_some_and(|r| r.holds(e.head)))
        .map(|e| {
            let a = e.atom.as_ref().expect("light vertices are not the source");
            (e.head, kind.add_edge_batch(d, std::slice::from_ref(a)))
        })
        .collect()
}

/// Runs the procedure on `g` for `t` iterations with heavy threshold `p`,
/// starting from `Z = z_init ∪ {s}`.
pub fn preprocess_near_lists<K: WeightKind + Clone>(
    rt: &mut Runtime,
    g: &Digraph<K>,
    t: usize,
    p: usize,
    z_init: &BTreeSet<usize>,
) -> Result<NearListTable<K::Value>> {
    if t < 1 {
        return Err(Error::InvalidParameter(format!("t must be positive, got {t}")));
    }
    if p < 2 {
        return Err(Error::InvalidParameter(format!("heavy threshold p must be at least 2, got {p}")));
    }
    let kind = g.kind();
    let n = g.n();
    let vs: Vec<usize> = g.vertices().collect();
    let mut heavy = vec![false; n];
    heavy[g.source()] = true;
    for &z in z_init {
        heavy[z] = true;
    }
    let mut appear = vec![0usize; n];
    let mut runs: Vec<Option<Run<K::Value>>> = (0..n).map(|_| None).collect();

    let zero = kind.zero();
    let init = rt.par_map(&vs, |c, &u| {
        let pushes = if heavy[u] { Vec::new() } else { pushes_from(g, &heavy, None, u, &zero) };
        c.charge_batch(pushes.len(), pushes.len());
        pushes
    });
    for (&u, pushes) in vs.iter().zip(init) {
        appear[u] = 1;
        let queue = pushes.into_iter().map(|(y, w)| (y, u, w)).collect();
        let list = vec![NlEntry { vertex: u, dist: zero.clone(), via: None }];
        runs[u] = Some(Run { list, queue });
    }

    for _ in 0..t {
        let active: Vec<usize> = vs.iter().copied().filter(|&u| !heavy[u]).collect();
        let runs_ref = &runs;
        let heavy_ref = &heavy;
        let visits: Vec<Option<Visit<K::Value>>> = rt.par_map(&active, |c, &u| {
            let run = runs_ref[u].as_ref().expect("active run");
            let mut best: Option<&(usize, usize, K::Value)> = None;
            for cand in &run.queue {
                if best.is_none_or(|b| kind.less(&cand.2, &b.2)) {
                    best = Some(cand);
                }
            }
            let (x, via, d) = best?;
            let pushes = pushes_from(g, heavy_ref, Some(run), *x, d);
            c.charge_batch(1 + pushes.len(), run.queue.len() + 1);
            Some(Visit { x: *x, dist: d.clone(), via: *via, pushes })
        });
        for (&u, visit) in active.iter().zip(visits) {
            let Some(v) = visit else { continue };
            let run = runs[u].as_mut().expect("active run");
            run.queue.retain(|q| q.0 != v.x);
            run.list.push(NlEntry { vertex: v.x, dist: v.dist, via: Some(v.via) });
            appear[v.x] += 1;
            run.queue.extend(v.pushes.into_iter().map(|(y, w)| (y, v.x, w)));
        }

        let appear_ref = &appear;
        let heavy_ref = &heavy;
        let promote: Vec<bool> = rt.par_map(&vs, |_, &v| !heavy_ref[v] && appear_ref[v] >= p);
        let promoted: Vec<usize> = vs.iter().zip(&promote).filter(|(_, &f)| f).map(|(&v, _)| v).collect();
        if promoted.is_empty() {
            continue;
        }
        for &v in &promoted {
            heavy[v] = true;
        }
        let still: Vec<usize> = vs.iter().copied().filter(|&u| !heavy[u]).collect();
        let runs_ref = &runs;
        let heavy_ref = &heavy;
        let filtered = rt.par_map(&still, |c, &u| {
            let run = runs_ref[u].as_ref().expect("active run");
            let kept: Vec<usize> = (0..run.queue.len()).filter(|&i| !heavy_ref[run.queue[i].0] && !heavy_ref[run.queue[i].1]).collect();
            c.charge_batch(run.queue.len() - kept.len(), run.queue.len());
            kept
        });
        for (&u, kept) in still.iter().zip(filtered) {
            let run = runs[u].as_mut().expect("active run");
            if kept.len() < run.queue.len() {
                let old = std::mem::take(&mut run.queue);
                let mut keep = kept.into_iter().peekable();
                run.queue = old.into_iter().enumerate().filter(|(i, _)| keep.next_if_eq(i).is_some()).map(|(_, q)| q).collect();
            }
        }
    }

    let mut lists = vec![Vec::new(); n];
    for (u, run) in runs.into_iter().enumerate() {
        if let Some(r) = run {
            lists[u] = r.list;
        }
    }
    let heavy_set = (0..n).filter(|&v| heavy[v] && g.contains(v)).collect();
    Ok(NearListTable { t, p, nl: NearLists::new(lists), heavy: heavy_set })
}
