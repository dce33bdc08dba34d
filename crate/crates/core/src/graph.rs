//! Weighted digraph with a distinguished source.
//!
//! Out-edges are kept twice: in a map keyed by head (merging on contraction)
//! and as a head list sorted by weight (top-`t` extraction). Vertex ids are
//! stable; removed vertices leave an empty slot.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::rt::{ceil_log2, Runtime};
use crate::weights::{HasZeroAtom, Lifted, LiftedAtom, WeightKind};

#[derive(Debug, Clone, PartialEq)]
pub struct Edge<V, A> {
    pub tail: usize,
    pub head: usize,
    pub weight: V,
    /// `None` only for edges created by contraction, which leave the source
    /// and are never decomposed again.
    pub atom: Option<A>,
    /// Index of the input edge this one descends from.
    pub id: usize,
}

pub type EdgeOf<K> = Edge<<K as WeightKind>::Value, <K as WeightKind>::Atom>;

/// Constant in the contraction bookkeeping bound `touched <= c * k * ceil(log2 n)`.
pub const BATCH_TOUCH_CONSTANT: u64 = 2;

#[derive(Debug, Clone)]
pub struct Digraph<K: WeightKind> {
    kind: K,
    source: usize,
    present: Vec<bool>,
    live: usize,
    out: Vec<BTreeMap<usize, EdgeOf<K>>>,
    by_weight: Vec<Vec<usize>>,
    inn: Vec<BTreeSet<usize>>,
    rewrites: Vec<u32>,
    touched: u64,
}

#[derive(Debug, Clone)]
pub struct ContractionRecord<V> {
    pub contracted: Vec<(usize, V)>,
    /// Out-edges of contracted vertices turned into source edges.
    pub rewritten: usize,
    /// Rewritten edges that lost a min-merge.
    pub merged: usize,
    /// Single-edge edits applied to the adjacency structures.
    pub edits: usize,
    pub touched: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMapping {
    /// Original vertex to its representative.
    pub rep: Vec<usize>,
    /// Split vertex to the original vertex whose gadget contains it.
    pub original: Vec<usize>,
}

impl SplitMapping {
    pub fn is_representative(&self, v: usize) -> bool {
        self.rep.get(self.original[v]) == Some(&v)
    }
}

impl<K: WeightKind + Clone> Digraph<K> {
    /// Drops self-loops and edges into the source; keeps the lightest of
    /// parallel edges.
    pub fn new(
        kind: K,
        n: usize,
        source: usize,
        edges: impl IntoIterator<Item = (usize, usize, K::Atom)>,
    ) -> Result<Self> {
        if source >= n {
            return Err(Error::UnknownVertex(source));
        }
        let mut g = Digraph {
            kind,
            source,
            present: vec![true; n],
            live: n,
            out: vec![BTreeMap::new(); n],
            by_weight: vec![Vec::new(); n],
            inn: vec![BTreeSet::new(); n],
            rewrites: Vec::new(),
            touched: 0,
        };
        for (id, (u, v, atom)) in edges.into_iter().enumerate() {
            g.rewrites.push(0);
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v || v == source {
                continue;
            }
            let weight = g.kind.atom_value(&atom);
            g.upsert(Edge { tail: u, head: v, weight, atom: Some(atom), id });
        }
        Ok(g)
    }

    pub fn kind(&self) -> &K {
        &self.kind
    }

    pub fn source(&self) -> usize {
        self.source
    }

    /// Number of vertex slots, including removed ones.
    pub fn n(&self) -> usize {
        self.present.len()
    }

    pub fn vertex_count(&self) -> usize {
        self.live
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.present.len() && self.present[v]
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.present.iter().enumerate().filter(|(_, p)| **p).map(|(v, _)| v)
    }

    pub fn edge_count(&self) -> usize {
        self.out.iter().map(|m| m.len()).sum()
    }

    pub fn out_edges(&self, v: usize) -> impl Iterator<Item = &EdgeOf<K>> + '_ {
        self.out[v].values()
    }

    /// Out-edges of `v` from lightest to heaviest.
    pub fn out_by_weight(&self, v: usize) -> impl Iterator<Item = &EdgeOf<K>> + '_ {
        self.by_weight[v].iter().map(move |h| &self.out[v][h])
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.inn[v].iter().copied()
    }

    pub fn edge(&self, u: usize, v: usize) -> Option<&EdgeOf<K>> {
        self.out.get(u).and_then(|m| m.get(&v))
    }

    pub fn outdeg(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn indeg(&self, v: usize) -> usize {
        self.inn[v].len()
    }

    pub fn edges(&self) -> impl Iterator<Item = &EdgeOf<K>> + '_ {
        self.out.iter().flat_map(|m| m.values())
    }

    /// The `min(t, outdeg(v))` lightest out-edges of `v`.
    pub fn top_t_edges(&self, v: usize, t: usize) -> Vec<&EdgeOf<K>> {
        self.out_by_weight(v).take(t).collect()
    }

    /// Per input edge, how many times it was turned into a source edge.
    pub fn rewrite_counts(&self) -> &[u32] {
        &self.rewrites
    }

    pub fn touched_nodes(&self) -> u64 {
        self.touched
    }

    fn weight_position(&self, v: usize, w: &K::Value) -> usize {
        let list = &self.by_weight[v];
        list.partition_point(|h| self.kind.compare(&self.out[v][h].weight, w) == Ordering::Less)
    }

    fn unlink_weight(&mut self, v: usize, head: usize) {
        let pos = self.by_weight[v].iter().position(|&h| h == head).expect("views agree");
        self.by_weight[v].remove(pos);
    }

    /// Inserts an edge or lowers an existing one; returns false if an existing
    /// edge was at least as light.
    fn upsert(&mut self, e: EdgeOf<K>) -> bool {
        let (u, v) = (e.tail, e.head);
        if let Some(old) = self.out[u].get(&v) {
            if self.kind.compare(&e.weight, &old.weight) != Ordering::Less {
                return false;
            }
            self.unlink_weight(u, v);
        }
        let pos = self.weight_position(u, &e.weight);
        self.by_weight[u].insert(pos, v);
        self.out[u].insert(v, e);
        self.inn[v].insert(u);
        true
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Option<EdgeOf<K>> {
        let e = self.out[u].remove(&v)?;
        self.unlink_weight(u, v);
        self.inn[v].remove(&u);
        Some(e)
    }

    /// Removes `v` with all incident edges; returns the number of edges removed.
    pub fn remove_vertex(&mut self, v: usize) -> usize {
        if !self.contains(v) {
            return 0;
        }
        let tails: Vec<usize> = self.inn[v].iter().copied().collect();
        for &u in &tails {
            self.out[u].remove(&v);
            self.unlink_weight(u, v);
        }
        let heads: Vec<usize> = self.out[v].keys().copied().collect();
        for &h in &heads {
            self.inn[h].remove(&v);
        }
        self.out[v].clear();
        self.by_weight[v].clear();
        self.inn[v].clear();
        self.present[v] = false;
        self.live -= 1;
        tails.len() + heads.len()
    }

    /// Contracts `x` into the source: each edge `xv` with `v` outside
    /// `x` becomes `sv` of weight `dist(x) + w(xv)`, lighter edge wins.
    pub fn contract_into_source(
        &mut self,
        rt: &mut Runtime,
        x: &[usize],
        dists: &BTreeMap<usize, K::Value>,
    ) -> Result<ContractionRecord<K::Value>> {
        let s = self.source;
        let set: BTreeSet<usize> = x.iter().copied().collect();
        if set.contains(&s) {
            return Err(Error::InvalidContraction);
        }
        for &v in &set {
            if !self.contains(v) {
                return Err(Error::UnknownVertex(v));
            }
            if !dists.contains_key(&v) {
                return Err(Error::MissingDistance(v));
            }
        }
        let members: Vec<usize> = set.iter().copied().collect();
        let size = self.live;
        let this = &*self;
        let staged: Vec<Vec<EdgeOf<K>>> = rt.par_map(&members, |_, &u| {
            let d = &dists[&u];
            this.out[u]
                .values()
                .filter(|e| !set.contains(&e.head))
                .map(|e| {
                    let atom = e.atom.as_ref().expect("edges leaving a non-source vertex carry atoms");
                    Edge {
                        tail: s,
                        head: e.head,
                        weight: this.kind.add_edge_batch(d, std::slice::from_ref(atom)),
                        atom: None,
                        id: e.id,
                    }
                })
                .collect()
        });
        let mut edits = 0;
        for &u in &members {
            edits += self.remove_vertex(u);
        }
        let mut rewritten = 0;
        let mut merged = 0;
        for e in staged.into_iter().flatten() {
            rewritten += 1;
            self.rewrites[e.id] += 1;
            if self.upsert(e) {
                edits += 1;
            } else {
                merged += 1;
            }
        }
        let touched = rt.charge_batch(edits, size);
        self.touched += touched;
        Ok(ContractionRecord {
            contracted: members.iter().map(|v| (*v, dists[v].clone())).collect(),
            rewritten,
            merged,
            edits,
            touched,
        })
    }

    /// Copy without the vertices in `drop` (the source may not be dropped).
    pub fn without(&self, drop: &BTreeSet<usize>) -> Digraph<K> {
        let mut g = self.clone();
        for &v in drop {
            if v != self.source {
                g.remove_vertex(v);
            }
        }
        g
    }
}

/// Bound on ordered-map nodes touched by `k` edits on an `n`-vertex graph.
pub fn batch_touch_bound(k: usize, n: usize) -> u64 {
    BATCH_TOUCH_CONSTANT * k as u64 * ceil_log2(n as u64).max(1)
}

/// Replaces every vertex other than the source whose in- or out-degree
/// exceeds two by paths of zero-scalar edges. Representatives keep their ids.
pub fn split_constant_degree<K>(g: &Digraph<Lifted<K>>) -> (Digraph<Lifted<K>>, SplitMapping)
where
    K: HasZeroAtom + Clone,
{
    let n = g.n();
    let s = g.source();
    let lk = g.kind().clone();
    let mut original: Vec<usize> = (0..n).collect();
    let fresh = |owner: usize, original: &mut Vec<usize>| {
        original.push(owner);
        original.len() - 1
    };
    // where edge (u, v) enters v's gadget / leaves u's gadget
    let mut landing: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut leaving: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut chain: Vec<(usize, usize)> = Vec::new();
    for v in g.vertices() {
        if v == s {
            continue;
        }
        let tails: Vec<usize> = g.in_neighbors(v).collect();
        if tails.len() > 2 {
            let nodes: Vec<usize> = tails.iter().map(|_| fresh(v, &mut original)).collect();
            for (j, &u) in tails.iter().enumerate() {
                landing.insert((u, v), nodes[j]);
                let next = nodes.get(j + 1).copied().unwrap_or(v);
                chain.push((nodes[j], next));
            }
        }
        let heads: Vec<usize> = g.out_by_weight(v).map(|e| e.head).collect();
        if heads.len() > 2 {
            let mut at = v;
            for (j, &h) in heads.iter().enumerate() {
                if j > 0 {
                    let node = fresh(v, &mut original);
                    chain.push((at, node));
                    at = node;
                }
                leaving.insert((v, h), at);
            }
        }
    }
    let mut edges = Vec::new();
    for e in g.edges() {
        let from = leaving.get(&(e.tail, e.head)).copied().unwrap_or(e.tail);
        let to = landing.get(&(e.tail, e.head)).copied().unwrap_or(e.head);
        let base = e.atom.as_ref().expect("split needs input edges").base.clone();
        edges.push((from, to, LiftedAtom { base, delta: to as i64 - from as i64 }));
    }
    for (a, b) in chain {
        edges.push((a, b, LiftedAtom { base: lk.inner().zero_atom(), delta: b as i64 - a as i64 }));
    }
    let total = original.len();
    let mut out = Digraph::new(lk, total, s, edges).expect("split ids are in range");
    for v in 0..n {
        if !g.contains(v) {
            out.remove_vertex(v);
        }
    }
    (out, SplitMapping { rep: (0..n).collect(), original })
}
