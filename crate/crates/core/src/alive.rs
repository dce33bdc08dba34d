//! Permanently heavy vertices and alive edges.
//!
//! Every vertex offers its out-edges in weight order, up to `2t` per refill
//! step, until it has `t` alive out-edges or runs out. A head that would get
//! more than `p` alive in-edges takes what fits and becomes permanently heavy;
//! it is then withdrawn from every pending list.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::graph::Digraph;
use crate::rt::Runtime;
use crate::weights::WeightKind;

#[derive(Debug, Clone)]
pub struct AliveState {
    pub t: usize,
    pub p: usize,
    /// Vertex count of the graph the state was created for.
    pub n0: usize,
    pub z0: BTreeSet<usize>,
    pub alive_out: Vec<BTreeSet<usize>>,
    pub alive_in: Vec<BTreeSet<usize>>,
    /// Heads not yet offered, lightest first.
    pending: Vec<VecDeque<usize>>,
    /// For each head, the tails whose pending list holds it.
    pending_in: Vec<BTreeSet<usize>>,
    pub refill_steps: usize,
    /// Refill steps after which some vertex still needed edges.
    pub non_concluding: usize,
}

impl AliveState {
    pub fn pending(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.pending[v].iter().copied()
    }

    pub fn is_alive(&self, u: usize, v: usize) -> bool {
        self.alive_out[u].contains(&v)
    }

    pub fn alive_edge_count(&self) -> usize {
        self.alive_out.iter().map(BTreeSet::len).sum()
    }

    fn offer<K: WeightKind + Clone>(&mut self, g: &Digraph<K>, v: usize) {
        for h in std::mem::take(&mut self.pending[v]) {
            self.pending_in[h].remove(&v);
        }
        let heads: VecDeque<usize> = g.out_by_weight(v).map(|e| e.head).filter(|h| !self.z0.contains(h)).collect();
        for &h in &heads {
            self.pending_in[h].insert(v);
        }
        self.pending[v] = heads;
    }

    fn needy<K: WeightKind + Clone>(&self, g: &Digraph<K>) -> Vec<usize> {
        g.vertices().filter(|&v| self.alive_out[v].len() < self.t && !self.pending[v].is_empty()).collect()
    }

    fn link(&mut self, u: usize, v: usize) {
        self.alive_out[u].insert(v);
        self.alive_in[v].insert(u);
    }

    fn unlink(&mut self, u: usize, v: usize) {
        self.alive_out[u].remove(&v);
        self.alive_in[v].remove(&u);
    }

    /// Refill steps until no vertex with fewer than `t` alive out-edges has
    /// pending edges left.
    fn refill<K: WeightKind + Clone>(&mut self, rt: &mut Runtime, g: &Digraph<K>) {
        let mut needy = self.needy(g);
        while !needy.is_empty() {
            let take = 2 * self.t;
            let this = &*self;
            let offers: Vec<Vec<usize>> = rt.par_map(&needy, |c, &v| {
                let popped: Vec<usize> = this.pending[v].iter().take(take).copied().collect();
                c.charge_batch(popped.len(), this.pending[v].len());
                popped
            });
            let mut by_head: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for (&v, popped) in needy.iter().zip(&offers) {
                for &h in popped {
                    self.pending_in[h].remove(&v);
                    by_head.entry(h).or_default().push(v);
                }
                self.pending[v].drain(..popped.len());
            }
            let edits: usize = offers.iter().map(Vec::len).sum();
            for (h, tails) in by_head {
                let room = self.p.saturating_sub(self.alive_in[h].len());
                if tails.len() > room {
                    for &u in &tails[..room] {
                        self.link(u, h);
                    }
                    self.z0.insert(h);
                    for v in std::mem::take(&mut self.pending_in[h]) {
                        self.pending[v].retain(|&x| x != h);
                    }
                } else {
                    for u in tails {
                        self.link(u, h);
                    }
                }
            }
            rt.charge_batch(edits, g.vertex_count());
            self.refill_steps += 1;
            needy = self.needy(g);
            if !needy.is_empty() {
                self.non_concluding += 1;
            }
        }
    }
}

pub fn init_alive<K: WeightKind + Clone>(rt: &mut Runtime, g: &Digraph<K>, t: usize, p: usize) -> AliveState {
    let n = g.n();
    let mut st = AliveState {
        t,
        p,
        n0: g.vertex_count(),
        z0: BTreeSet::new(),
        alive_out: vec![BTreeSet::new(); n],
        alive_in: vec![BTreeSet::new(); n],
        pending: vec![VecDeque::new(); n],
        pending_in: vec![BTreeSet::new(); n],
        refill_steps: 0,
        non_concluding: 0,
    };
    let vs: Vec<usize> = g.vertices().collect();
    for &v in &vs {
        st.offer(g, v);
    }
    rt.charge(g.edge_count() as u64);
    st.refill(rt, g);
    st
}

/// Brings the state in line with `g` after `gone` was contracted into the
/// source. The source's alive edges are rebuilt from scratch since
/// contraction rewrites its out-edges.
pub fn update_alive<K: WeightKind + Clone>(rt: &mut Runtime, st: &mut AliveState, g: &Digraph<K>, gone: &BTreeSet<usize>) {
    let s = g.source();
    let mut edits = 0;
    for &d in gone {
        for u in std::mem::take(&mut st.alive_in[d]) {
            st.alive_out[u].remove(&d);
            edits += 1;
        }
        for h in std::mem::take(&mut st.alive_out[d]) {
            st.alive_in[h].remove(&d);
            edits += 1;
        }
        for v in std::mem::take(&mut st.pending_in[d]) {
            st.pending[v].retain(|&x| x != d);
            edits += 1;
        }
        for h in std::mem::take(&mut st.pending[d]) {
            st.pending_in[h].remove(&d);
        }
        st.z0.remove(&d);
    }
    let heads: Vec<usize> = st.alive_out[s].iter().copied().collect();
    for h in heads {
        st.unlink(s, h);
        edits += 1;
    }
    st.offer(g, s);
    rt.charge_batch(edits + g.outdeg(s), g.vertex_count());
    st.refill(rt, g);
}

/// Lists every violated alive-state invariant; empty when all hold.
pub fn alive_violations<K: WeightKind + Clone>(g: &Digraph<K>, st: &AliveState) -> Vec<String> {
    let kind = g.kind();
    let mut out = Vec::new();
    for v in g.vertices() {
        let alive = &st.alive_out[v];
        for &h in alive {
            if g.edge(v, h).is_none() {
                out.push(format!("alive edge {v}->{h} is not in the graph"));
            }
        }
        if alive.len() < st.t {
            let missing: Vec<usize> = g.out_edges(v).map(|e| e.head).filter(|h| !alive.contains(h) && !st.z0.contains(h)).collect();
            if !missing.is_empty() {
                out.push(format!("(i) {v} has {} alive out-edges and misses {missing:?}", alive.len()));
            }
        }
        if alive.len() > 3 * st.t {
            out.push(format!("(ii) {v} has {} alive out-edges", alive.len()));
        }
        if st.alive_in[v].len() > st.p {
            out.push(format!("(iii) {v} has {} alive in-edges", st.alive_in[v].len()));
        }
        for &y in alive {
            let wy = &g.edge(v, y).expect("checked above").weight;
            for e in g.out_edges(v) {
                if kind.less(&e.weight, wy) && !alive.contains(&e.head) && !st.z0.contains(&e.head) {
                    out.push(format!("(v) {v}->{} is lighter than alive {v}->{y} but neither alive nor heavy", e.head));
                }
            }
        }
    }
    if st.z0.len() * st.p > 3 * st.n0 * st.t {
        out.push(format!("(iv) |Z0| = {} exceeds 3nt/p with n = {}, t = {}, p = {}", st.z0.len(), st.n0, st.t, st.p));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::{integer, Lifted, RealKind};

    fn unit(n: usize, e: &[(usize, usize)]) -> Digraph<Lifted<RealKind>> {
        let k = Lifted(RealKind);
        Digraph::new(k.clone(), n, 0, e.iter().map(|&(u, v)| (u, v, k.atom(u, v, integer(1))))).unwrap()
    }

    #[test]
    fn converging_edges() {
        // u1..u4 = 1..4 all point at z = 5
        let g = unit(6, &[(0, 1), (1, 5), (2, 5), (3, 5), (4, 5)]);
        let st = init_alive(&mut Runtime::default(), &g, 1, 2);
        assert_eq!(st.alive_in[5].len(), 2);
        assert_eq!(st.z0, BTreeSet::from([5]));
        for u in 1..=4 {
            assert_eq!(st.pending(u).count(), 0);
        }
        assert!(alive_violations(&g, &st).is_empty());
    }

    #[test]
    fn everything_fits() {
        let g = unit(4, &[(0, 1), (1, 2), (2, 3)]);
        let st = init_alive(&mut Runtime::default(), &g, 1, 3);
        assert!(st.z0.is_empty());
        assert_eq!(st.alive_edge_count(), 3);
    }

    #[test]
    fn update_keeps_invariants() {
        let g0 = unit(5, &[(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (3, 4), (2, 4)]);
        let rt = &mut Runtime::default();
        let mut st = init_alive(rt, &g0, 1, 2);
        let mut g = g0.clone();
        let d = g.kind().atom_value(&g.kind().atom(0, 1, integer(1)));
        g.contract_into_source(rt, &[1], &BTreeMap::from([(1, d)])).unwrap();
        update_alive(rt, &mut st, &g, &BTreeSet::from([1]));
        assert!(alive_violations(&g, &st).is_empty(), "{:?}", alive_violations(&g, &st));
        assert!(st.alive_out[1].is_empty() && st.alive_in[1].is_empty());
    }
}
