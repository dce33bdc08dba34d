//! Brute-force references. None of these reuse algorithm code from the
//! library; they only read graphs through its accessors.

use std::cmp::Ordering;
use std::collections::{BTreeSet, BinaryHeap};
use std::ops::Add;

use num_bigint::BigUint;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};
use sssp_core::graph::EdgeOf;
use sssp_core::io::EdgeList;
use sssp_core::{Digraph, WeightKind};

fn relax<K: WeightKind>(kind: &K, d: &K::Value, e: &EdgeOf<K>) -> K::Value {
    match &e.atom {
        Some(a) => kind.add_edge_batch(d, std::slice::from_ref(a)),
        None => e.weight.clone(),
    }
}

/// Dijkstra on plain rationals, straight from an edge list.
pub fn scalar_dijkstra(g: &EdgeList<BigRational>) -> Vec<Option<BigRational>> {
    generic_dijkstra(g.n, g.source, &g.edges, BigRational::zero())
}

/// Dijkstra over any totally ordered monoid given by `Ord` and `Add`.
pub fn generic_dijkstra<W>(n: usize, s: usize, edges: &[(usize, usize, W)], zero: W) -> Vec<Option<W>>
where
    W: Ord + Clone,
    for<'a> &'a W: Add<&'a W, Output = W>,
{
    let mut adj = vec![Vec::new(); n];
    for (u, v, w) in edges {
        adj[*u].push((*v, w.clone()));
    }
    let mut dist: Vec<Option<W>> = vec![None; n];
    let mut done = vec![false; n];
    dist[s] = Some(zero);
    loop {
        let Some(u) = (0..n).filter(|&v| !done[v] && dist[v].is_some()).min_by(|&a, &b| dist[a].cmp(&dist[b])) else {
            break;
        };
        done[u] = true;
        let du = dist[u].clone().expect("selected vertices are reached");
        for (v, w) in &adj[u] {
            let cand = &du + w;
            if dist[*v].as_ref().is_none_or(|old| cand < *old) {
                dist[*v] = Some(cand);
            }
        }
    }
    dist
}

struct Keyed<'a, K: WeightKind>(&'a K, K::Value, usize);

impl<K: WeightKind> PartialEq for Keyed<'_, K> {
    fn eq(&self, o: &Self) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}

impl<K: WeightKind> Eq for Keyed<'_, K> {}

impl<K: WeightKind> PartialOrd for Keyed<'_, K> {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl<K: WeightKind> Ord for Keyed<'_, K> {
    /// Reversed, so that `BinaryHeap` pops the lightest entry.
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.compare(&o.1, &self.1).then(o.2.cmp(&self.2))
    }
}

/// Dijkstra in the graph's own weight kind on `g - removed`, from `from`.
pub fn dijkstra_without<K: WeightKind + Clone>(g: &Digraph<K>, from: usize, removed: &BTreeSet<usize>) -> Vec<Option<K::Value>> {
    let kind = g.kind();
    let n = g.n();
    let mut dist: Vec<Option<K::Value>> = vec![None; n];
    if !g.contains(from) || removed.contains(&from) {
        return dist;
    }
    let mut done = vec![false; n];
    dist[from] = Some(kind.zero());
    let mut heap = BinaryHeap::from([Keyed(kind, kind.zero(), from)]);
    while let Some(Keyed(_, du, u)) = heap.pop() {
        if std::mem::replace(&mut done[u], true) {
            continue;
        }
        for e in g.out_edges(u) {
            if removed.contains(&e.head) || done[e.head] {
                continue;
            }
            let c = relax(kind, &du, e);
            if dist[e.head].as_ref().is_none_or(|old| kind.less(&c, old)) {
                dist[e.head] = Some(c.clone());
                heap.push(Keyed(kind, c, e.head));
            }
        }
    }
    dist
}

/// Bellman-Ford in the graph's own kind, from `from`.
pub fn bellman_ford<K: WeightKind + Clone>(g: &Digraph<K>, from: usize) -> Vec<Option<K::Value>> {
    let kind = g.kind();
    let mut dist: Vec<Option<K::Value>> = vec![None; g.n()];
    if !g.contains(from) {
        return dist;
    }
    dist[from] = Some(kind.zero());
    loop {
        let mut changed = false;
        for e in g.edges() {
            let Some(du) = dist[e.tail].clone() else { continue };
            let c = relax(kind, &du, e);
            if dist[e.head].as_ref().is_none_or(|old| kind.less(&c, old)) {
                dist[e.head] = Some(c);
                changed = true;
            }
        }
        if !changed {
            return dist;
        }
    }
}

/// Lightest walks of at most `hops` edges from `from`, using only each
/// vertex's `t` lightest out-edges among `within`.
pub fn hop_bounded<K: WeightKind + Clone>(g: &Digraph<K>, within: &[usize], t: usize, from: usize, hops: usize) -> Vec<Option<K::Value>> {
    let kind = g.kind();
    let inside: BTreeSet<usize> = within.iter().copied().collect();
    let mut dist: Vec<Option<K::Value>> = vec![None; g.n()];
    dist[from] = Some(kind.zero());
    for _ in 0..hops {
        let prev = dist.clone();
        for &u in &inside {
            let Some(du) = &prev[u] else { continue };
            for e in g.out_by_weight(u).take(t) {
                if !inside.contains(&e.head) {
                    continue;
                }
                let c = relax(kind, du, e);
                if dist[e.head].as_ref().is_none_or(|old| kind.less(&c, old)) {
                    dist[e.head] = Some(c);
                }
            }
        }
    }
    dist
}

/// The `t` vertices other than `from` with the smallest distances, in order.
pub fn t_closest<K: WeightKind>(kind: &K, dist: &[Option<K::Value>], from: usize, t: usize) -> Vec<(usize, K::Value)> {
    let mut all: Vec<(usize, K::Value)> =
        dist.iter().enumerate().filter(|(v, d)| *v != from && d.is_some()).map(|(v, d)| (v, d.clone().unwrap())).collect();
    all.sort_by(|a, b| kind.compare(&a.1, &b.1));
    all.truncate(t);
    all
}

/// Lexicographic-bottleneck weights: a multiset kept sorted in decreasing
/// order, so `Vec`'s order is the multiset order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SortedMultiset(pub Vec<u64>);

impl Add for &SortedMultiset {
    type Output = SortedMultiset;
    fn add(self, o: &SortedMultiset) -> SortedMultiset {
        let mut v: Vec<u64> = self.0.iter().chain(&o.0).copied().collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        SortedMultiset(v)
    }
}

pub fn lex_dijkstra(n: usize, s: usize, edges: &[(usize, usize, u64)]) -> Vec<Option<SortedMultiset>> {
    let e: Vec<_> = edges.iter().map(|&(u, v, a)| (u, v, SortedMultiset(vec![a]))).collect();
    generic_dijkstra(n, s, &e, SortedMultiset(Vec::new()))
}

/// Distances when edge `e` weighs `2^{a_e}`.
pub fn bin_dijkstra(n: usize, s: usize, edges: &[(usize, usize, u64)]) -> Vec<Option<BigUint>> {
    let e: Vec<_> = edges.iter().map(|&(u, v, a)| (u, v, BigUint::one() << a)).collect();
    generic_dijkstra(n, s, &e, BigUint::zero())
}

/// For every vertex, the tails of its tight in-edges.
pub fn tight_tail_sets<W>(n: usize, edges: &[(usize, usize, W)], dist: &[Option<W>]) -> Vec<BTreeSet<usize>>
where
    W: Eq,
    for<'a> &'a W: Add<&'a W, Output = W>,
{
    let mut out = vec![BTreeSet::new(); n];
    for (u, v, w) in edges {
        if let (Some(du), Some(dv)) = (&dist[*u], &dist[*v]) {
            if u != v && &(du + w) == dv {
                out[*v].insert(*u);
            }
        }
    }
    out
}

pub type Q = Ratio<i64>;

/// Minimum cost-to-time ratio over all cycles, maintained under insertions
/// by enumerating the simple paths that close a cycle with the new edge.
#[derive(Debug, Clone)]
pub struct CycleOracle {
    adj: Vec<Vec<Vec<(Q, Q)>>>,
    pub best: Option<Q>,
}

impl CycleOracle {
    pub fn new(n: usize) -> Self {
        CycleOracle { adj: vec![vec![Vec::new(); n]; n], best: None }
    }

    /// Smallest ratio of a cycle through the new edge `p -> q`, then records the edge.
    pub fn insert(&mut self, p: usize, q: usize, c: Q, t: Q) -> Option<Q> {
        let through = if p == q { Some(c / t) } else { self.best_closing(p, q, c, t) };
        self.adj[p][q].push((c, t));
        if let Some(r) = through {
            if self.best.is_none_or(|b| r < b) {
                self.best = Some(r);
            }
        }
        self.best
    }

    fn best_closing(&self, p: usize, q: usize, c: Q, t: Q) -> Option<Q> {
        let n = self.adj.len();
        let mut best: Option<Q> = None;
        let mut path = vec![q];
        let mut on = vec![false; n];
        on[q] = true;
        self.paths(p, &mut path, &mut on, &mut |path| {
            let r = self.dinkelbach(path, c, t);
            if best.is_none_or(|b| r < b) {
                best = Some(r);
            }
        });
        best
    }

    fn paths(&self, target: usize, path: &mut Vec<usize>, on: &mut [bool], f: &mut dyn FnMut(&[usize])) {
        let u = *path.last().unwrap();
        if u == target {
            f(path);
            return;
        }
        for v in 0..self.adj.len() {
            if !on[v] && !self.adj[u][v].is_empty() {
                on[v] = true;
                path.push(v);
                self.paths(target, path, on, f);
                path.pop();
                on[v] = false;
            }
        }
    }

    /// Minimum ratio over the choices of parallel edges along `path`, with the
    /// closing edge fixed to `(c, t)`.
    fn dinkelbach(&self, path: &[usize], c: Q, t: Q) -> Q {
        let hops: Vec<&Vec<(Q, Q)>> = path.windows(2).map(|w| &self.adj[w[0]][w[1]]).collect();
        let ratio_of = |pick: &[(Q, Q)]| {
            let (sc, st) = pick.iter().fold((c, t), |(a, b), (x, y)| (a + x, b + y));
            sc / st
        };
        let mut pick: Vec<(Q, Q)> = hops.iter().map(|h| h[0]).collect();
        let mut lambda = ratio_of(&pick);
        loop {
            pick = hops.iter().map(|h| *h.iter().min_by(|a, b| (a.0 - lambda * a.1).cmp(&(b.0 - lambda * b.1))).unwrap()).collect();
            let r = ratio_of(&pick);
            if r < lambda {
                lambda = r;
            } else {
                return lambda;
            }
        }
    }
}

/// Near-lists by the textbook procedure: every iteration recomputes each
/// light run's queue keys from scratch, then promotes every light vertex
/// found in at least `p` lists. Returns `(vertex, distance)` lists and `Z`.
#[allow(clippy::type_complexity)]
pub fn reference_near_lists<K: WeightKind + Clone>(
    g: &Digraph<K>,
    t: usize,
    p: usize,
    z_init: &BTreeSet<usize>,
) -> (Vec<Vec<(usize, K::Value)>>, BTreeSet<usize>) {
    let kind = g.kind();
    let n = g.n();
    let mut heavy: BTreeSet<usize> = z_init.iter().copied().collect();
    heavy.insert(g.source());
    let mut lists: Vec<Vec<(usize, K::Value)>> = (0..n).map(|u| if g.contains(u) { vec![(u, kind.zero())] } else { Vec::new() }).collect();
    for _ in 0..t {
        let mut picks = Vec::new();
        for u in g.vertices().filter(|u| !heavy.contains(u)) {
            let list = &lists[u];
            let mut best: Option<(usize, K::Value)> = None;
            for (v, d) in list.iter().filter(|(v, _)| !heavy.contains(v)) {
                for e in g.out_edges(*v) {
                    let y = e.head;
                    if heavy.contains(&y) || list.iter().any(|(x, _)| *x == y) {
                        continue;
                    }
                    let key = relax(kind, d, e);
                    if best.as_ref().is_none_or(|(_, b)| kind.less(&key, b)) {
                        best = Some((y, key));
                    }
                }
            }
            if let Some(b) = best {
                picks.push((u, b));
            }
        }
        for (u, b) in picks {
            lists[u].push(b);
        }
        let mut count = vec![0usize; n];
        for list in &lists {
            for (v, _) in list {
                count[*v] += 1;
            }
        }
        heavy.extend(g.vertices().filter(|v| count[*v] >= p));
    }
    (lists, heavy)
}
