//! Explicit colored binary trees and the orders the tree store must match.

use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    pub color: u64,
    pub left: Option<Box<Tree>>,
    pub right: Option<Box<Tree>>,
}

impl Tree {
    pub fn leaf(color: u64) -> Tree {
        Tree { color, left: None, right: None }
    }

    pub fn node(color: u64, left: Option<Tree>, right: Option<Tree>) -> Tree {
        Tree { color, left: left.map(Box::new), right: right.map(Box::new) }
    }

    pub fn depth(&self) -> u32 {
        let d = |c: &Option<Box<Tree>>| c.as_ref().map_or(0, |c| 1 + c.depth());
        d(&self.left).max(d(&self.right))
    }

    /// Every node keyed by its label, a word over `L` and `R`.
    pub fn labels(&self) -> BTreeMap<String, &Tree> {
        let mut out = BTreeMap::new();
        self.walk(String::new(), &mut out);
        out
    }

    fn walk<'a>(&'a self, label: String, out: &mut BTreeMap<String, &'a Tree>) {
        if let Some(l) = &self.left {
            l.walk(format!("{label}L"), out);
        }
        if let Some(r) = &self.right {
            r.walk(format!("{label}R"), out);
        }
        out.insert(label, self);
    }
}

/// The lexicographically smallest label present in both trees whose nodes
/// differ in color or in which children they have.
pub fn first_mismatch(a: &Tree, b: &Tree) -> Option<String> {
    let (la, lb) = (a.labels(), b.labels());
    la.iter().find_map(|(w, x)| {
        let y = lb.get(w)?;
        let differs = x.color != y.color || x.left.is_some() != y.left.is_some() || x.right.is_some() != y.right.is_some();
        differs.then(|| w.clone())
    })
}

/// `A <= B` by the recursive definition: `A` empty, `max A < max B`, or equal
/// maxima and the rests compare the same way.
pub fn lex_le(a: &[u64], b: &[u64]) -> bool {
    let (ma, mb) = (a.iter().max(), b.iter().max());
    match (ma, mb) {
        (None, _) => true,
        (Some(_), None) => false,
        (Some(x), Some(y)) if x != y => x < y,
        (Some(x), Some(_)) => {
            let drop = |s: &[u64]| {
                let mut v = s.to_vec();
                let i = v.iter().position(|e| e == x).expect("max present");
                v.remove(i);
                v
            };
            lex_le(&drop(a), &drop(b))
        }
    }
}
