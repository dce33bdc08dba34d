//! Hash-consed binary trees with colored nodes.
//!
//! Every stored node gets an identifier from the dictionary `μ` keyed by
//! `(color, left id, right id)`, so two nodes share an identifier exactly when
//! their subtrees are isomorphic. Trees are never mutated: a new version
//! shares every subtree it does not change with the old one.

use std::collections::HashMap;
use std::fmt;

use crate::error::{ExoticError, Result};

pub type TreeId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NodeRec {
    pub color: u64,
    pub left: Option<TreeId>,
    pub right: Option<TreeId>,
}

impl NodeRec {
    pub fn is_leaf(&self) -> bool {
        self.left.is_none() && self.right.is_none()
    }
}

/// A child slot of a [`Prefix`] node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Part {
    /// Whatever the base tree has at this position, if anything.
    Keep,
    Absent,
    /// An already stored subtree.
    Tree(TreeId),
    Node(Box<Prefix>),
}

/// The part of a new tree that differs from its base, rooted at the root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prefix {
    pub color: u64,
    pub left: Part,
    pub right: Part,
}

impl Prefix {
    pub fn leaf(color: u64) -> Prefix {
        Prefix { color, left: Part::Absent, right: Part::Absent }
    }

    pub fn size(&self) -> usize {
        let part = |p: &Part| match p {
            Part::Node(n) => n.size(),
            _ => 0,
        };
        1 + part(&self.left) + part(&self.right)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    L,
    R,
}

/// The first node, in label order, at which two trees differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub label: Vec<Dir>,
    /// The subtrees of the first and second tree at `label`.
    pub first: TreeId,
    pub second: TreeId,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.label.is_empty() {
            return write!(f, "ε");
        }
        for d in &self.label {
            write!(f, "{}", if *d == Dir::L { 'L' } else { 'R' })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    Witness(Witness),
}

#[derive(Debug, Clone)]
pub struct TreeStore {
    bound: u32,
    nodes: Vec<NodeRec>,
    height: Vec<u32>,
    mu: HashMap<NodeRec, TreeId>,
}

/// A prefix node flattened for level-by-level identifier assignment.
struct Flat {
    color: u64,
    left: Slot,
    right: Slot,
}

#[derive(Clone, Copy)]
enum Slot {
    Id(Option<TreeId>),
    Child(usize),
}

impl TreeStore {
    /// A store for trees of depth at most `bound`.
    pub fn new(bound: u32) -> TreeStore {
        TreeStore { bound, nodes: Vec::new(), height: Vec::new(), mu: HashMap::new() }
    }

    pub fn depth_bound(&self) -> u32 {
        self.bound
    }

    /// Identifiers handed out so far.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, id: TreeId) -> NodeRec {
        self.nodes[id as usize]
    }

    pub fn get(&self, id: TreeId) -> Result<NodeRec> {
        self.nodes.get(id as usize).copied().ok_or(ExoticError::UnknownTree(id))
    }

    pub fn height(&self, id: TreeId) -> u32 {
        self.height[id as usize]
    }

    /// Number of nodes of the tree rooted at `id`, counting shared subtrees once per occurrence.
    pub fn tree_size(&self, id: TreeId) -> u64 {
        let n = self.node(id);
        1 + n.left.map_or(0, |c| self.tree_size(c)) + n.right.map_or(0, |c| self.tree_size(c))
    }

    fn lookup(&self, rec: &NodeRec) -> Option<TreeId> {
        self.mu.get(rec).copied()
    }

    fn height_of(&self, rec: &NodeRec) -> u32 {
        let h = |c: Option<TreeId>| c.map_or(0, |c| 1 + self.height[c as usize]);
        h(rec.left).max(h(rec.right))
    }

    fn allocate(&mut self, rec: NodeRec) -> TreeId {
        let id = TreeId::try_from(self.nodes.len()).expect("identifier space exhausted");
        self.height.push(self.height_of(&rec));
        self.nodes.push(rec);
        self.mu.insert(rec, id);
        id
    }

    pub fn leaf(&mut self, color: u64) -> TreeId {
        self.leaves(&[color])[0]
    }

    /// One-node trees for a batch of colors; equal colors get one identifier.
    pub fn leaves(&mut self, colors: &[u64]) -> Vec<TreeId> {
        let recs: Vec<NodeRec> = colors.iter().map(|&color| NodeRec { color, left: None, right: None }).collect();
        self.assign(&recs)
    }

    /// Looks up or allocates identifiers for one level of nodes whose
    /// children are already stored; new triples get consecutive identifiers
    /// in order of first occurrence.
    fn assign(&mut self, recs: &[NodeRec]) -> Vec<TreeId> {
        recs.iter()
            .map(|rec| match self.lookup(rec) {
                Some(id) => id,
                None => self.allocate(*rec),
            })
            .collect()
    }

    /// The node with the given color and stored children.
    pub fn make(&mut self, color: u64, left: Option<TreeId>, right: Option<TreeId>) -> Result<TreeId> {
        let rec = NodeRec { color, left, right };
        if let Some(id) = self.lookup(&rec) {
            return Ok(id);
        }
        let depth = self.height_of(&rec);
        if depth > self.bound {
            return Err(ExoticError::DepthExceeded { depth, bound: self.bound });
        }
        Ok(self.allocate(rec))
    }

    /// The tree that equals `base` outside `plus` and has `plus` as the
    /// prefix where the two differ.
    pub fn replace_prefix(&mut self, base: TreeId, plus: &Prefix) -> Result<TreeId> {
        let mut flat = Vec::with_capacity(plus.size());
        let mut depth = Vec::new();
        self.flatten(Some(base), plus, 0, &mut flat, &mut depth)?;
        let max_depth = depth.iter().copied().max().unwrap_or(0);
        let mut ids: Vec<Option<TreeId>> = vec![None; flat.len()];
        let resolve = |s: Slot, ids: &[Option<TreeId>]| match s {
            Slot::Id(id) => id,
            Slot::Child(i) => Some(ids[i].expect("deeper levels are assigned first")),
        };
        for level in (0..=max_depth).rev() {
            let at: Vec<usize> = (0..flat.len()).filter(|&i| depth[i] == level).collect();
            let recs: Vec<NodeRec> =
                at.iter().map(|&i| NodeRec { color: flat[i].color, left: resolve(flat[i].left, &ids), right: resolve(flat[i].right, &ids) }).collect();
            for rec in &recs {
                let h = self.height_of(rec) + level;
                if h > self.bound {
                    return Err(ExoticError::DepthExceeded { depth: h, bound: self.bound });
                }
            }
            for (&i, id) in at.iter().zip(self.assign(&recs)) {
                ids[i] = Some(id);
            }
        }
        Ok(ids[0].expect("root assigned"))
    }

    fn flatten(&self, base: Option<TreeId>, p: &Prefix, level: u32, flat: &mut Vec<Flat>, depth: &mut Vec<u32>) -> Result<usize> {
        if level > self.bound {
            return Err(ExoticError::DepthExceeded { depth: level, bound: self.bound });
        }
        let me = flat.len();
        flat.push(Flat { color: p.color, left: Slot::Id(None), right: Slot::Id(None) });
        depth.push(level);
        let b = base.map(|b| self.node(b));
        let slot = |part: &Part, from: Option<TreeId>, flat: &mut Vec<Flat>, depth: &mut Vec<u32>| -> Result<Slot> {
            Ok(match part {
                Part::Keep => Slot::Id(from),
                Part::Absent => Slot::Id(None),
                Part::Tree(id) => {
                    self.get(*id)?;
                    Slot::Id(Some(*id))
                }
                Part::Node(child) => Slot::Child(self.flatten(from, child, level + 1, flat, depth)?),
            })
        };
        let left = slot(&p.left, b.and_then(|b| b.left), flat, depth)?;
        let right = slot(&p.right, b.and_then(|b| b.right), flat, depth)?;
        flat[me].left = left;
        flat[me].right = right;
        Ok(me)
    }

    /// One descent: left when the left children differ, right otherwise.
    pub fn compare_trees(&self, a: TreeId, b: TreeId) -> Comparison {
        if a == b {
            return Comparison::Equal;
        }
        let (mut x, mut y) = (a, b);
        let mut label = Vec::new();
        loop {
            let (nx, ny) = (self.node(x), self.node(y));
            if nx.color != ny.color || nx.left.is_some() != ny.left.is_some() || nx.right.is_some() != ny.right.is_some() {
                return Comparison::Witness(Witness { label, first: x, second: y });
            }
            // equal triples would have equal identifiers, so some child differs
            if nx.left != ny.left {
                label.push(Dir::L);
                (x, y) = (nx.left.expect("both present"), ny.left.expect("both present"));
            } else {
                label.push(Dir::R);
                (x, y) = (nx.right.expect("both present"), ny.right.expect("both present"));
            }
        }
    }
}
