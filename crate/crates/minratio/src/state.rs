//! Minimum cost-to-time ratio cycle under edge insertions.
//!
//! The state keeps `λ*`, a cycle attaining it and a potential `φ` with
//! `c(uv) - λ* t(uv) - φ(u) + φ(v) >= 0` on every edge. For a fixed `λ` those
//! reduced weights define `G_λ`; when `φ` attests a bound above `λ` they are
//! non-negative, so `λ <= λ_new` can be decided with one Dijkstra run.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use sssp_core::basic::basic_sssp;
use sssp_core::dense::dense_sssp;
use sssp_core::observe::Silent;
use sssp_core::{Backend, Digraph, Lifted, Runtime};

use crate::error::{RatioError, Result};
use crate::linear::{Decide, Interval, Linear, LinearKind, SearchStats};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatioEdge {
    pub tail: usize,
    pub head: usize,
    pub cost: BigRational,
    pub time: BigRational,
}

impl RatioEdge {
    pub fn new(tail: usize, head: usize, cost: BigRational, time: BigRational) -> Result<Self> {
        if !time.is_positive() {
            return Err(RatioError::NonPositiveTime(time.to_string()));
        }
        Ok(RatioEdge { tail, head, cost, time })
    }

    /// `c - λt - φ(tail) + φ(head)`.
    pub fn reduced(&self, lambda: &BigRational, phi: &[BigRational]) -> BigRational {
        &self.cost - lambda * &self.time - &phi[self.tail] + &phi[self.head]
    }
}

/// Every edge has non-negative reduced weight under `φ` and `λ`.
pub fn attests(edges: &[RatioEdge], phi: &[BigRational], lambda: &BigRational) -> bool {
    edges.iter().all(|e| !e.reduced(lambda, phi).is_negative())
}

/// Total cost over total time of the edges `cycle` indexes.
pub fn ratio(edges: &[RatioEdge], cycle: &[usize]) -> BigRational {
    let (c, t) = cycle.iter().fold((BigRational::zero(), BigRational::zero()), |(c, t), &i| (c + &edges[i].cost, t + &edges[i].time));
    c / t
}

/// The indexed edges chain head to tail and return to the start.
pub fn is_cycle(edges: &[RatioEdge], cycle: &[usize]) -> bool {
    !cycle.is_empty()
        && cycle.iter().all(|&i| i < edges.len())
        && (0..cycle.len()).all(|k| edges[cycle[k]].head == edges[cycle[(k + 1) % cycle.len()]].tail)
}

/// Longest-path potential with edge weights `λt - c`; it attests `λ` on a
/// DAG. `None` if the graph has a cycle.
pub fn dag_potential(n: usize, edges: &[RatioEdge], lambda: &BigRational) -> Option<Vec<BigRational>> {
    let mut indeg = vec![0usize; n];
    let mut out = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        indeg[e.head] += 1;
        out[e.tail].push(i);
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut phi = vec![BigRational::zero(); n];
    let mut done = 0;
    while let Some(u) = queue.pop_front() {
        done += 1;
        for &i in &out[u] {
            let e = &edges[i];
            let cand = &phi[u] + lambda * &e.time - &e.cost;
            if cand > phi[e.head] {
                phi[e.head] = cand;
            }
            indeg[e.head] -= 1;
            if indeg[e.head] == 0 {
                queue.push_back(e.head);
            }
        }
    }
    (done == n).then_some(phi)
}

/// Dijkstra over a multigraph with non-negative `weight`s: distances and
/// the index of each reached vertex's tight incoming edge.
fn dijkstra(n: usize, edges: &[RatioEdge], weight: &[BigRational], from: usize) -> (Vec<Option<BigRational>>, Vec<Option<usize>>) {
    let mut out = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        out[e.tail].push(i);
    }
    let mut dist: Vec<Option<BigRational>> = vec![None; n];
    let mut parent = vec![None; n];
    let mut done = vec![false; n];
    let mut heap = BinaryHeap::new();
    dist[from] = Some(BigRational::zero());
    heap.push(Reverse((BigRational::zero(), from)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        for &i in &out[u] {
            let v = edges[i].head;
            let nd = &d + &weight[i];
            if !done[v] && dist[v].as_ref().is_none_or(|old| nd < *old) {
                dist[v] = Some(nd.clone());
                parent[v] = Some(i);
                heap.push(Reverse((nd, v)));
            }
        }
    }
    (dist, parent)
}

/// Edge indices of some `from -> to` path, by breadth-first search.
fn any_path(n: usize, edges: &[RatioEdge], from: usize, to: usize) -> Option<Vec<usize>> {
    let mut out = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        out[e.tail].push(i);
    }
    let mut parent: Vec<Option<usize>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        for &i in &out[u] {
            let v = edges[i].head;
            if !seen[v] {
                seen[v] = true;
                parent[v] = Some(i);
                queue.push_back(v);
            }
        }
    }
    seen[to].then(|| walk_back(edges, &parent, from, to))
}

fn walk_back(edges: &[RatioEdge], parent: &[Option<usize>], from: usize, to: usize) -> Vec<usize> {
    let mut path = Vec::new();
    let mut v = to;
    while v != from {
        let i = parent[v].expect("reached vertices have parents");
        path.push(i);
        v = edges[i].tail;
    }
    path.reverse();
    path
}

/// Decides `λ <= λ_new` for the insertion of `pq` into `G - pq`.
#[derive(Debug, Clone)]
pub struct Tester {
    n: usize,
    edges: Vec<RatioEdge>,
    pq: RatioEdge,
    old: Option<(BigRational, Vec<BigRational>)>,
}

impl Tester {
    /// `Γ_λ = λ t(pq) - c(pq) + φ(p) - φ(q)`.
    fn gamma(&self, lambda: &BigRational, phi: &[BigRational]) -> BigRational {
        lambda * &self.pq.time - &self.pq.cost + &phi[self.pq.tail] - &phi[self.pq.head]
    }

    pub fn test(&self, lambda: &BigRational) -> bool {
        let phi = match &self.old {
            Some((old, _)) if lambda > old => return false,
            Some((_, phi)) => phi.clone(),
            None => dag_potential(self.n, &self.edges, lambda).expect("no attesting potential means G - pq is acyclic"),
        };
        let w = reduced_weights(&self.edges, lambda, &phi);
        let (dist, _) = dijkstra(self.n, &self.edges, &w, self.pq.head);
        dist[self.pq.tail].as_ref().is_none_or(|d| *d >= self.gamma(lambda, &phi))
    }
}

impl Decide for Tester {
    fn decide(&self, lambda: &BigRational) -> bool {
        self.test(lambda)
    }
}

fn reduced_weights(edges: &[RatioEdge], lambda: &BigRational, phi: &[BigRational]) -> Vec<BigRational> {
    edges
        .iter()
        .map(|e| {
            let w = e.reduced(lambda, phi);
            assert!(!w.is_negative(), "negative reduced weight {w} on {} -> {}", e.tail, e.head);
            w
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Comparator {
    #[default]
    Basic,
    Dense,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub comparator: Comparator,
    /// Vertices discovered per step by the comparator.
    pub t: usize,
    pub backend: Backend,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { comparator: Comparator::Basic, t: 2, backend: Backend::Sequential }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    /// `min(λ_old, λ_pq)`, `None` for `+∞`.
    pub lambda: Option<BigRational>,
    /// The comparator ran, so `λ_new < λ_old`.
    pub searched: bool,
    pub stats: SearchStats,
}

/// A ratio known to be at least `λ_new` with a potential attesting it on `G - pq`.
struct Cap {
    lambda: BigRational,
    phi: Vec<BigRational>,
}

#[derive(Debug, Clone, Default)]
pub struct RatioState {
    n: usize,
    edges: Vec<RatioEdge>,
    lambda: Option<BigRational>,
    cycle: Vec<usize>,
    phi: Option<Vec<BigRational>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InsertReport {
    pub lambda_old: Option<BigRational>,
    pub lambda_new: Option<BigRational>,
    pub stats: SearchStats,
    pub searched: bool,
}

impl RatioState {
    pub fn new(n: usize) -> Self {
        RatioState { n, ..RatioState::default() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[RatioEdge] {
        &self.edges
    }

    /// `None` while the graph is acyclic.
    pub fn lambda(&self) -> Option<&BigRational> {
        self.lambda.as_ref()
    }

    /// Edge indices of a cycle attaining `λ*`, starting with the edge that closed it.
    pub fn cycle(&self) -> Option<&[usize]> {
        self.lambda.as_ref().map(|_| self.cycle.as_slice())
    }

    pub fn potential(&self) -> Option<&[BigRational]> {
        self.phi.as_deref()
    }

    /// Sum of the potential, for compact logs.
    pub fn potential_checksum(&self) -> Option<BigRational> {
        self.phi.as_ref().map(|phi| phi.iter().fold(BigRational::zero(), |acc, x| acc + x))
    }

    fn grow(&mut self, n: usize) {
        if n > self.n {
            self.n = n;
            if let Some(phi) = &mut self.phi {
                phi.resize(n, BigRational::zero());
            }
        }
    }

    pub fn tester(&self, pq: &RatioEdge) -> Tester {
        let n = self.n.max(pq.tail + 1).max(pq.head + 1);
        let old = self.lambda.clone().zip(self.phi.clone()).map(|(l, mut phi)| {
            phi.resize(n, BigRational::zero());
            (l, phi)
        });
        Tester { n, edges: self.edges.clone(), pq: pq.clone(), old }
    }

    /// Is `λ <= λ_new` for inserting `pq`?
    pub fn test_lambda(&self, pq: &RatioEdge, lambda: &BigRational) -> bool {
        self.tester(pq).test(lambda)
    }

    fn cap(&self, pq: &RatioEdge, n: usize) -> Option<Cap> {
        if let (Some(lambda), Some(phi)) = (&self.lambda, &self.phi) {
            let mut phi = phi.clone();
            phi.resize(n, BigRational::zero());
            return Some(Cap { lambda: lambda.clone(), phi });
        }
        let path = any_path(n, &self.edges, pq.head, pq.tail)?;
        let mut closed = self.edges.clone();
        closed.push(pq.clone());
        let mut cycle = path;
        cycle.push(closed.len() - 1);
        let lambda = ratio(&closed, &cycle);
        let phi = dag_potential(n, &self.edges, &lambda).expect("an acyclic graph has a potential");
        Some(Cap { lambda, phi })
    }

    fn search_with(&self, pq: &RatioEdge, opts: &SearchOptions) -> Result<(Option<Cap>, SearchOutcome)> {
        let n = self.n.max(pq.tail + 1).max(pq.head + 1);
        let Some(cap) = self.cap(pq, n) else {
            return Ok((None, SearchOutcome { lambda: None, searched: false, stats: SearchStats::default() }));
        };
        let tester = self.tester(pq);
        if tester.test(&cap.lambda) {
            let stats = SearchStats { tests: 1, ..SearchStats::default() };
            let outcome = SearchOutcome { lambda: Some(cap.lambda.clone()), searched: false, stats };
            return Ok((Some(cap), outcome));
        }
        let interval = Interval::new(cap.lambda.clone(), Box::new(tester.clone()));
        let kind = Lifted(LinearKind::new(interval.clone()));
        let atoms: Vec<_> = self
            .edges
            .iter()
            .map(|e| {
                let w = Linear::new(&e.cost - &cap.phi[e.tail] + &cap.phi[e.head], -e.time.clone());
                (e.tail, e.head, kind.atom(e.tail, e.head, w))
            })
            .collect();
        let g = Digraph::new(kind, n, pq.head, atoms)?;
        let mut rt = Runtime::new(opts.backend).with_hook(interval.clone());
        let run = match opts.comparator {
            Comparator::Basic => basic_sssp(&mut rt, &g, opts.t, &mut Silent)?,
            Comparator::Dense => dense_sssp(&mut rt, &g, opts.t, &mut Silent)?,
        };
        let d = run.dist[pq.tail].as_ref().expect("λ_new < λ_old needs a q -> p path").base.clone();
        // d = c(P) - φ(q) + φ(p) - λ t(P) for the shortest path P at λ_new.
        let cost = &pq.cost + &d.a + &cap.phi[pq.head] - &cap.phi[pq.tail];
        let time = &pq.time - &d.b;
        let lambda = cost / time;
        let mut stats = interval.stats();
        stats.tests += 1;
        debug_assert!(tester.test(&lambda) && lambda < cap.lambda);
        Ok((Some(cap), SearchOutcome { lambda: Some(lambda), searched: true, stats }))
    }

    /// `λ_new = min(λ_old, λ_pq)` for inserting `pq`, without inserting it.
    pub fn parametric_search(&self, pq: &RatioEdge, opts: &SearchOptions) -> Result<SearchOutcome> {
        Ok(self.search_with(pq, opts)?.1)
    }

    pub fn insert_edge(&mut self, pq: RatioEdge, opts: &SearchOptions) -> Result<InsertReport> {
        let (cap, outcome) = self.search_with(&pq, opts)?;
        let lambda_old = self.lambda.clone();
        self.grow(pq.tail.max(pq.head) + 1);
        let report = InsertReport { lambda_old, lambda_new: outcome.lambda.clone(), stats: outcome.stats, searched: outcome.searched };
        let (Some(cap), Some(lambda)) = (cap, outcome.lambda) else {
            self.edges.push(pq);
            return Ok(report);
        };
        let n = self.n;
        let phi = cap.phi;
        let w = reduced_weights(&self.edges, &lambda, &phi);
        let (p, q) = (pq.tail, pq.head);
        let (dist, parent) = dijkstra(n, &self.edges, &w, q);
        let gamma = &lambda * &pq.time - &pq.cost + &phi[p] - &phi[q];
        let improved = self.lambda.as_ref().is_none_or(|old| lambda < *old);
        let closes = dist[p].as_ref().is_some_and(|d| *d == gamma);
        let mut delta = gamma.clone().max(BigRational::zero());
        for (e, we) in self.edges.iter().zip(&w) {
            if let (None, Some(dv)) = (&dist[e.tail], &dist[e.head]) {
                delta = delta.max(dv - we);
            }
        }
        let phi_new: Vec<BigRational> = (0..n).map(|v| &phi[v] - dist[v].as_ref().unwrap_or(&delta)).collect();
        let index = self.edges.len();
        if improved {
            assert!(closes, "the shortest q -> p path in G_λ must have weight Γ_λ");
            let mut cycle = vec![index];
            cycle.extend(walk_back(&self.edges, &parent, q, p));
            self.cycle = cycle;
        }
        self.edges.push(pq);
        self.lambda = Some(lambda);
        self.phi = Some(phi_new);
        debug_assert!(attests(&self.edges, self.phi.as_deref().unwrap_or_default(), self.lambda.as_ref().expect("finite")));
        Ok(report)
    }
}
