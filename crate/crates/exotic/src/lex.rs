//! Multisets of labels under lexicographic-bottleneck order.
//!
//! A multiset is a full binary tree over `2^b` leaf slots, larger labels to
//! the left, each leaf colored by its label's multiplicity; empty subtrees are
//! pruned. The empty multiset is a lone root of color 0.

use std::cmp::Ordering;
use std::sync::{Arc, RwLock, RwLockReadGuard, RwLockWriteGuard};

use sssp_core::rt::ceil_log2;
use sssp_core::WeightKind;

use crate::error::{ExoticError, Result};
use crate::store::{Comparison, Part, Prefix, TreeId, TreeStore};

#[derive(Debug, Clone)]
pub struct LexKind {
    store: Arc<RwLock<TreeStore>>,
    bits: u32,
    empty: TreeId,
}

impl LexKind {
    /// Labels in `0..2^bits`.
    pub fn new(bits: u32) -> LexKind {
        let mut store = TreeStore::new(bits);
        let empty = store.leaf(0);
        LexKind { store: Arc::new(RwLock::new(store)), bits, empty }
    }

    /// The smallest kind holding every label up to `max_label`.
    pub fn for_labels(max_label: u64) -> LexKind {
        LexKind::new(ceil_log2(max_label.saturating_add(1)) as u32)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn limit(&self) -> u64 {
        1u64.checked_shl(self.bits).unwrap_or(u64::MAX)
    }

    pub fn read(&self) -> RwLockReadGuard<'_, TreeStore> {
        self.store.read().unwrap_or_else(|e| e.into_inner())
    }

    fn write(&self) -> RwLockWriteGuard<'_, TreeStore> {
        self.store.write().unwrap_or_else(|e| e.into_inner())
    }

    pub fn check(&self, label: u64) -> Result<()> {
        if label >= self.limit() {
            return Err(ExoticError::InvalidAtom { atom: label, limit: self.limit() });
        }
        Ok(())
    }

    pub fn empty(&self) -> TreeId {
        self.empty
    }

    /// `base` with every label of `atoms` added once more.
    pub fn add(&self, base: TreeId, atoms: &[u64]) -> Result<TreeId> {
        for &a in atoms {
            self.check(a)?;
        }
        if atoms.is_empty() {
            return Ok(base);
        }
        let mut counts: Vec<(u64, u64)> = Vec::new();
        let mut sorted = atoms.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        for a in sorted {
            match counts.last_mut() {
                Some((v, c)) if *v == a => *c += 1,
                _ => counts.push((a, 1)),
            }
        }
        let mut store = self.write();
        let plus = self.grow(&store, Some(base), 0, &counts);
        store.replace_prefix(base, &plus)
    }

    /// The prefix covering the root-to-leaf paths of `vals` (descending, distinct).
    fn grow(&self, store: &TreeStore, base: Option<TreeId>, depth: u32, vals: &[(u64, u64)]) -> Prefix {
        let node = base.map(|b| store.node(b));
        if depth == self.bits {
            let old = node.map_or(0, |n| n.color);
            return Prefix::leaf(old + vals.iter().map(|v| v.1).sum::<u64>());
        }
        let bit = self.bits - 1 - depth;
        let split = vals.partition_point(|(v, _)| v >> bit & 1 == 1);
        let (hi, lo) = vals.split_at(split);
        let side = |part: &[(u64, u64)], child: Option<TreeId>| {
            if part.is_empty() {
                Part::Keep
            } else {
                Part::Node(Box::new(self.grow(store, child, depth + 1, part)))
            }
        };
        let left = side(hi, node.and_then(|n| n.left));
        let right = side(lo, node.and_then(|n| n.right));
        Prefix { color: 0, left, right }
    }

    /// At the first differing node the larger multiplicity wins. Otherwise
    /// the larger labels (left) decide first: if both sides have a left child
    /// and those differ, the comparison continues there; if only one side has
    /// one, that side is larger. Only then does a lone right child decide.
    pub fn cmp(&self, a: TreeId, b: TreeId) -> Ordering {
        let store = self.read();
        let (mut a, mut b) = (a, b);
        loop {
            let Comparison::Witness(w) = store.compare_trees(a, b) else { return Ordering::Equal };
            let (x, y) = (store.node(w.first), store.node(w.second));
            if x.color != y.color {
                return x.color.cmp(&y.color);
            }
            match (x.left, y.left) {
                (Some(l), Some(r)) if l != r => (a, b) = (l, r),
                _ => {
                    return x.left.is_some().cmp(&y.left.is_some()).then(x.right.is_some().cmp(&y.right.is_some()));
                }
            }
        }
    }

    /// `(label, multiplicity)` pairs, largest label first.
    pub fn multiset(&self, id: TreeId) -> Vec<(u64, u64)> {
        let store = self.read();
        let mut out = Vec::new();
        self.collect(&store, id, 0, 0, &mut out);
        out
    }

    fn collect(&self, store: &TreeStore, id: TreeId, depth: u32, prefix: u64, out: &mut Vec<(u64, u64)>) {
        let n = store.node(id);
        if depth == self.bits {
            if n.color > 0 {
                out.push((prefix, n.color));
            }
            return;
        }
        if let Some(l) = n.left {
            self.collect(store, l, depth + 1, prefix << 1 | 1, out);
        }
        if let Some(r) = n.right {
            self.collect(store, r, depth + 1, prefix << 1, out);
        }
    }

    /// Labels in decreasing order, repeated by multiplicity.
    pub fn labels(&self, id: TreeId) -> Vec<u64> {
        self.multiset(id).into_iter().flat_map(|(v, c)| std::iter::repeat_n(v, c as usize)).collect()
    }

    /// `{5^2,3}` for `{5, 5, 3}`, `{}` for the empty multiset.
    pub fn render(&self, id: TreeId) -> String {
        let parts: Vec<String> = self.multiset(id).into_iter().map(|(v, c)| if c == 1 { v.to_string() } else { format!("{v}^{c}") }).collect();
        format!("{{{}}}", parts.join(","))
    }
}

impl WeightKind for LexKind {
    type Value = TreeId;
    type Atom = u64;

    fn zero(&self) -> TreeId {
        self.empty
    }

    fn add_edge_batch(&self, base: &TreeId, atoms: &[u64]) -> TreeId {
        self.add(*base, atoms).expect("labels are validated when the graph is built")
    }

    fn compare(&self, a: &TreeId, b: &TreeId) -> Ordering {
        self.cmp(*a, *b)
    }
}
