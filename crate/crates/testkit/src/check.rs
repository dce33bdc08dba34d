//! Property checks that report every violation as a message.

use std::collections::BTreeSet;

use sssp_core::alive::{alive_violations, AliveState};
use sssp_core::nearest::NearEntry;
use sssp_core::nearlist::{NearListTable, NearLists, NlEntry};
use sssp_core::observe::Observer;
use sssp_core::{Digraph, WeightKind};

use crate::oracle::{dijkstra_without, t_closest};

/// `entry` is `NL(u)`'s root, or extends the entry of its `via` vertex in
/// `list` by an edge of `g`.
fn realized<K: WeightKind + Clone>(g: &Digraph<K>, u: usize, list: &[NlEntry<K::Value>], entry: &NlEntry<K::Value>) -> bool {
    let kind = g.kind();
    match entry.via {
        None => entry.vertex == u && kind.eq(&entry.dist, &kind.zero()),
        Some(x) => {
            let Some(prev) = list.iter().find(|e| e.vertex == x) else { return false };
            let Some(edge) = g.edge(x, entry.vertex) else { return false };
            let Some(atom) = &edge.atom else { return false };
            kind.eq(&kind.add_edge_batch(&prev.dist, std::slice::from_ref(atom)), &entry.dist)
        }
    }
}

fn domination<K: WeightKind + Clone>(
    g: &Digraph<K>,
    u: usize,
    list: &[NlEntry<K::Value>],
    heavy: &BTreeSet<usize>,
    t: usize,
    tag: &str,
    lower: bool,
    out: &mut Vec<String>,
) {
    let kind = g.kind();
    let d = dijkstra_without(g, u, heavy);
    let listed: BTreeSet<usize> = list.iter().map(|e| e.vertex).collect();
    let last = list.iter().map(|e| &e.dist).max_by(|a, b| kind.compare(a, b));
    for (v, dv) in d.iter().enumerate() {
        let Some(dv) = dv else { continue };
        if listed.contains(&v) {
            continue;
        }
        if list.len() != t + 1 || !kind.less(last.expect("non-empty"), dv) {
            out.push(format!("({tag}a) {v} reachable from {u} outside NL({u}) of size {}", list.len()));
        }
    }
    if lower {
        for e in list {
            if let Some(dv) = &d[e.vertex] {
                if kind.less(dv, &e.dist) {
                    out.push(format!("({tag}b) NL({u}) holds {} above its distance", e.vertex));
                }
            }
        }
    }
}

/// Near-list properties on `j` for a table started from `z_init`.
pub fn near_list_violations<K: WeightKind + Clone>(j: &Digraph<K>, table: &NearListTable<K::Value>, z_init: &BTreeSet<usize>) -> Vec<String> {
    let mut out = Vec::new();
    let (t, p) = (table.t, table.p);
    let s = j.source();
    for v in j.vertices() {
        let app = table.nl.appearances(v);
        if app > (p - 1) * (j.indeg(v) + 1) {
            out.push(format!("(i) {v} appears {app} times with indeg {}", j.indeg(v)));
        }
        if table.heavy.contains(&v) && v != s && !z_init.contains(&v) && app < p {
            out.push(format!("(ii) heavy {v} appears only {app} times"));
        }
        let list = &table.nl.lists[v];
        if list.is_empty() || list.len() > t + 1 || list[0].vertex != v {
            out.push(format!("NL({v}) has {} entries or a wrong root", list.len()));
        }
        for e in list {
            if !realized(j, v, list, e) {
                out.push(format!("(iii) NL({v}) entry {} is not a path weight", e.vertex));
            }
        }
        if !table.heavy.contains(&v) {
            domination(j, v, list, &table.heavy, t, "iv", true, &mut out);
        }
    }
    out
}

/// Improved near-list properties on the whole graph `g`.
pub fn improved_violations<K: WeightKind + Clone>(g: &Digraph<K>, table: &NearListTable<K::Value>, improved: &NearLists<K::Value>) -> Vec<String> {
    let mut out = Vec::new();
    let kind = g.kind();
    let p = table.p;
    for v in g.vertices() {
        let app = improved.appearances(v);
        if app > p * p * p + p * p {
            out.push(format!("(v) {v} appears in {app} improved lists"));
        }
        let base = &table.nl.lists[v];
        let list = &improved.lists[v];
        if list.len() > table.t + 1 {
            out.push(format!("NL'({v}) has {} entries", list.len()));
        }
        for e in list {
            let from_base = base.iter().any(|b| b.vertex == e.vertex && kind.eq(&b.dist, &e.dist));
            if !from_base && !realized(g, v, base, e) {
                out.push(format!("(vi) NL'({v}) entry {} is not a path weight", e.vertex));
            }
        }
        if !table.heavy.contains(&v) {
            domination(g, v, list, &table.heavy, table.t, "vii", false, &mut out);
        }
    }
    out
}

/// Records violations of every checkable property seen through the observer hooks.
#[derive(Debug, Default)]
pub struct Checker {
    pub t: usize,
    pub violations: Vec<String>,
    pub discoveries: usize,
    pub near_list_checks: usize,
    pub alive_checks: usize,
    pub improved_checks: usize,
    pub max_h: usize,
    /// Vertices found by each discovery step.
    pub batches: Vec<Vec<usize>>,
    /// Skip the expensive near-list and improved-list checks.
    pub light: bool,
    z_init: BTreeSet<usize>,
    dense: bool,
}

impl Checker {
    pub fn new(t: usize) -> Self {
        Checker { t, ..Checker::default() }
    }

    pub fn light(t: usize) -> Self {
        Checker { t, light: true, ..Checker::default() }
    }
}

impl<K: WeightKind + Clone> Observer<K> for Checker {
    fn discovery(&mut self, g: &Digraph<K>, h: &[usize], found: &[NearEntry<K::Value, K::Atom>]) {
        self.discoveries += 1;
        self.max_h = self.max_h.max(h.len());
        let kind = g.kind();
        let s = g.source();
        let want = t_closest(kind, &dijkstra_without(g, s, &BTreeSet::new()), s, self.t);
        let inside: BTreeSet<usize> = h.iter().copied().collect();
        for (v, _) in &want {
            if !inside.contains(v) {
                self.violations.push(format!("step {}: next-closest {v} missing from the candidate set", self.discoveries));
            }
        }
        let same = want.len() == found.len() && want.iter().zip(found).all(|((v, d), e)| *v == e.vertex && kind.eq(d, &e.dist));
        if !same {
            self.violations.push(format!(
                "step {}: found {:?}, expected {:?}",
                self.discoveries,
                found.iter().map(|e| e.vertex).collect::<Vec<_>>(),
                want.iter().map(|x| x.0).collect::<Vec<_>>()
            ));
        }
        self.batches.push(found.iter().map(|e| e.vertex).collect());
    }

    fn near_lists(&mut self, j: &Digraph<K>, table: &NearListTable<K::Value>) {
        self.near_list_checks += 1;
        if self.light {
            return;
        }
        let mut z = self.z_init.clone();
        z.insert(j.source());
        let v = near_list_violations(j, table, &z);
        self.violations.extend(v);
        let p = table.p;
        for x in j.vertices().filter(|_| self.dense) {
            if table.nl.appearances(x) > p * p {
                self.violations.push(format!("{x} appears in more than p^2 near-lists"));
            }
        }
    }

    fn alive(&mut self, g: &Digraph<K>, state: &AliveState) {
        self.alive_checks += 1;
        self.violations.extend(alive_violations(g, state));
        self.z_init = state.z0.clone();
        self.dense = true;
    }

    fn improved(&mut self, g: &Digraph<K>, table: &NearListTable<K::Value>, improved: &NearLists<K::Value>) {
        self.improved_checks += 1;
        if self.light {
            return;
        }
        self.violations.extend(improved_violations(g, table, improved));
    }
}

/// Every reached vertex other than the source names an in-neighbour whose
/// edge is tight; everything else has no parent.
pub fn parent_violations<K: WeightKind + Clone>(g: &Digraph<K>, dist: &[Option<K::Value>], parent: &[Option<usize>]) -> Vec<String> {
    let kind = g.kind();
    let mut out = Vec::new();
    for v in 0..g.n() {
        match (parent[v], &dist[v]) {
            (None, None) => {}
            (None, Some(_)) if v == g.source() => {}
            (Some(u), Some(dv)) => {
                let tight = g.edge(u, v).is_some_and(|e| {
                    let du = dist[u].as_ref().expect("parents are reached");
                    let atom = e.atom.as_ref().expect("input edges carry atoms");
                    kind.eq(&kind.add_edge_batch(du, std::slice::from_ref(atom)), dv)
                });
                if !tight {
                    out.push(format!("parent edge {u}->{v} is not tight"));
                }
            }
            (p, d) => out.push(format!("vertex {v}: parent {p:?} with reached = {}", d.is_some())),
        }
    }
    out
}
