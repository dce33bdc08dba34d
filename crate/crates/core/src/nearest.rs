//! The `t` nearest vertices of every vertex, by hop doubling.
//!
//! Round `i` holds for each `u` the `t + 1` closest vertices by weight of
//! paths with at most `2^i` hops. A round merges the lists of the vertices on
//! `u`'s list and keeps the `t + 1` smallest candidates.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::rt::{ceil_log2, Runtime};
use crate::weights::WeightKind;

/// Compact adjacency the kernel runs on: a vertex subset with each vertex's
/// lightest out-edges (heads restricted to the subset).
#[derive(Debug, Clone)]
pub struct NearGraph<V, A> {
    ids: Vec<usize>,
    local: Vec<usize>,
    adj: Vec<Vec<(usize, V, Option<A>)>>,
}

pub type NearGraphOf<K> = NearGraph<<K as WeightKind>::Value, <K as WeightKind>::Atom>;

const ABSENT: usize = usize::MAX;

impl<V: Clone, A: Clone> NearGraph<V, A> {
    /// All live vertices of `g`, each with its top-`t` out-edges.
    pub fn top_t<K>(g: &Digraph<K>, t: usize) -> Self
    where
        K: WeightKind<Value = V, Atom = A> + Clone,
    {
        let vs: Vec<usize> = g.vertices().collect();
        Self::induced_top_t(g, &vs, t)
    }

    /// `G_t[W]`: the top-`t` out-edges of `g` between vertices of `w`.
    pub fn induced_top_t<K>(g: &Digraph<K>, w: &[usize], t: usize) -> Self
    where
        K: WeightKind<Value = V, Atom = A> + Clone,
    {
        let mut local = vec![ABSENT; g.n()];
        let mut ids = Vec::with_capacity(w.len());
        for &v in w {
            if g.contains(v) && local[v] == ABSENT {
                local[v] = ids.len();
                ids.push(v);
            }
        }
        let adj = ids
            .iter()
            .map(|&v| {
                g.out_by_weight(v)
                    .take(t)
                    .filter(|e| local[e.head] != ABSENT)
                    .map(|e| (local[e.head], e.weight.clone(), e.atom.clone()))
                    .collect()
            })
            .collect();
        NearGraph { ids, local, adj }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn vertices(&self) -> &[usize] {
        &self.ids
    }

    pub fn contains(&self, v: usize) -> bool {
        self.local.get(v).is_some_and(|&l| l != ABSENT)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NearEntry<V, A> {
    pub vertex: usize,
    pub dist: V,
    /// Intermediate vertex of the last merge that produced this entry.
    pub via: Option<usize>,
    /// The path's edge atoms, when none of its edges came from a contraction.
    pub atoms: Option<Vec<A>>,
}

#[derive(Debug, Clone)]
pub struct NearTable<V, A> {
    pub rounds: usize,
    ids: Vec<usize>,
    local: Vec<usize>,
    rows: Vec<Vec<NearEntry<V, A>>>,
}

impl<V, A> NearTable<V, A> {
    /// `u` first, then up to `t` vertices by increasing distance.
    pub fn row(&self, u: usize) -> Option<&[NearEntry<V, A>]> {
        let l = *self.local.get(u)?;
        (l != ABSENT).then(|| self.rows[l].as_slice())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.ids
    }
}

struct Cand<V, A> {
    y: usize,
    d: V,
    via: Option<usize>,
    atoms: Option<Vec<A>>,
}

impl<V: Clone, A: Clone> Clone for Cand<V, A> {
    fn clone(&self) -> Self {
        Cand { y: self.y, d: self.d.clone(), via: self.via, atoms: self.atoms.clone() }
    }
}

/// The `keep` smallest candidates by `(distance, vertex)`, one per vertex;
/// among equal copies of a vertex the earliest wins.
fn keep_smallest<K: WeightKind, T>(kind: &K, cands: Vec<T>, keep: usize, key: impl Fn(&T) -> (usize, &K::Value)) -> Vec<T> {
    let mut slot: HashMap<usize, usize> = HashMap::with_capacity(cands.len());
    let mut best: Vec<T> = Vec::with_capacity(cands.len());
    for c in cands {
        match slot.entry(key(&c).0) {
            Entry::Vacant(e) => {
                e.insert(best.len());
                best.push(c);
            }
            Entry::Occupied(e) => {
                let i = *e.get();
                if kind.less(key(&c).1, key(&best[i]).1) {
                    best[i] = c;
                }
            }
        }
    }
    let order = |a: &T, b: &T| {
        let (ya, da) = key(a);
        let (yb, db) = key(b);
        kind.compare(da, db).then(ya.cmp(&yb))
    };
    if best.len() > keep {
        best.select_nth_unstable_by(keep, order);
        best.truncate(keep);
    }
    best.sort_unstable_by(order);
    best
}

pub fn all_t_nearest<K>(rt: &mut Runtime, kind: &K, g: &NearGraphOf<K>, t: usize) -> Result<NearTable<K::Value, K::Atom>>
where
    K: WeightKind,
{
    doubling(rt, kind, g, t, None)
}

/// As [`all_t_nearest`], handing the table after every round (round 0 is
/// the base case) to `trace`.
pub fn all_t_nearest_traced<K>(
    rt: &mut Runtime,
    kind: &K,
    g: &NearGraphOf<K>,
    t: usize,
    trace: &mut dyn FnMut(&NearTable<K::Value, K::Atom>),
) -> Result<NearTable<K::Value, K::Atom>>
where
    K: WeightKind,
{
    doubling(rt, kind, g, t, Some(trace))
}

fn snapshot<V: Clone, A: Clone>(g: &NearGraph<V, A>, rows: &[Vec<Cand<V, A>>], rounds: usize) -> NearTable<V, A> {
    let rows = rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|c| NearEntry { vertex: g.ids[c.y], dist: c.d.clone(), via: c.via.map(|v| g.ids[v]), atoms: c.atoms.clone() })
                .collect()
        })
        .collect();
    NearTable { rounds, ids: g.ids.clone(), local: g.local.clone(), rows }
}

fn doubling<K>(
    rt: &mut Runtime,
    kind: &K,
    g: &NearGraphOf<K>,
    t: usize,
    mut trace: Option<&mut dyn FnMut(&NearTable<K::Value, K::Atom>)>,
) -> Result<NearTable<K::Value, K::Atom>>
where
    K: WeightKind,
{
    if t < 1 {
        return Err(Error::InvalidParameter(format!("t must be positive, got {t}")));
    }
    let n = g.len();
    let locals: Vec<usize> = (0..n).collect();
    let mut rows: Vec<Vec<Cand<K::Value, K::Atom>>> = rt.par_map(&locals, |c, &u| {
        let mut row = vec![Cand { y: u, d: kind.zero(), via: None, atoms: Some(Vec::new()) }];
        row.extend(g.adj[u].iter().take(t).map(|(h, w, a)| Cand {
            y: *h,
            d: w.clone(),
            via: None,
            atoms: a.as_ref().map(|a| vec![a.clone()]),
        }));
        c.charge(row.len() as u64);
        row
    });
    if let Some(f) = trace.as_deref_mut() {
        f(&snapshot(g, &rows, 0));
    }
    let rounds = ceil_log2(n as u64) as usize;
    for round in 0..rounds {
        let prev = &rows;
        rows = rt.par_map(&locals, |c, &u| {
            // (vertex, distance, position in u's row, position in the second row)
            let mut cands: Vec<(usize, K::Value, usize, Option<usize>)> = Vec::new();
            for (i, first) in prev[u].iter().enumerate() {
                if first.y == u {
                    cands.extend(prev[u].iter().enumerate().map(|(k, e)| (e.y, e.d.clone(), k, None)));
                    continue;
                }
                for (j, second) in prev[first.y].iter().enumerate() {
                    let tail = second.atoms.as_ref().expect("second legs never start at the source");
                    cands.push((second.y, kind.add_edge_batch(&first.d, tail), i, Some(j)));
                }
            }
            let m = cands.len() as u64;
            c.charge(m * ceil_log2(m + 1).max(1));
            let kept = keep_smallest(kind, cands, t + 1, |c| (c.0, &c.1));
            kept.into_iter()
                .map(|(y, d, i, j)| {
                    let first = &prev[u][i];
                    let Some(j) = j else { return prev[u][i].clone() };
                    let tail = prev[first.y][j].atoms.as_ref().expect("second legs never start at the source");
                    let atoms = first.atoms.as_ref().map(|a| a.iter().chain(tail).cloned().collect::<Vec<_>>());
                    if let Some(a) = &atoms {
                        assert!(a.len() <= t, "decomposed distance with {} atoms exceeds t = {t}", a.len());
                    }
                    Cand { y, d, via: Some(first.y), atoms }
                })
                .collect()
        });
        if let Some(f) = trace.as_deref_mut() {
            f(&snapshot(g, &rows, round + 1));
        }
    }
    Ok(snapshot(g, &rows, rounds))
}

/// The `t` closest vertices to `s` (excluding `s`) with their distances.
pub fn t_nearest_from<K>(rt: &mut Runtime, kind: &K, h: &NearGraphOf<K>, s: usize, t: usize) -> Result<Vec<NearEntry<K::Value, K::Atom>>>
where
    K: WeightKind,
{
    if !h.contains(s) {
        return Err(Error::UnknownVertex(s));
    }
    let table = all_t_nearest(rt, kind, h, t)?;
    Ok(table.row(s).expect("s is in the view").iter().filter(|e| e.vertex != s).cloned().collect())
}
