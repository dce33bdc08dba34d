//! Non-negative integers as trees over their binary digits.
//!
//! A node covers an aligned block of `2^h` digit positions: a leaf when all
//! its digits are equal (colored by that digit), otherwise a node of color 0
//! whose left child covers the upper half. Sums use carry-lookahead over the
//! two trees, so their cost follows the smaller tree's size.

use std::cmp::Ordering;
use std::sync::{Arc, RwLock, RwLockReadGuard, RwLockWriteGuard};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use sssp_core::rt::ceil_log2;
use sssp_core::WeightKind;

use crate::error::{ExoticError, Result};
use crate::store::{Comparison, TreeId, TreeStore};

#[derive(Debug, Clone)]
pub struct BinKind {
    store: Arc<RwLock<TreeStore>>,
    bits: u32,
    zeros: TreeId,
}

impl BinKind {
    /// Integers below `2^(2^bits)`.
    pub fn new(bits: u32) -> BinKind {
        let mut store = TreeStore::new(bits);
        let zeros = store.leaf(0);
        BinKind { store: Arc::new(RwLock::new(store)), bits, zeros }
    }

    /// Room for sums of `n` paths of up to `m` edges with exponents up to
    /// `max_exp`: the smallest `bits` with `2^bits > max(m^2, max_exp + 1) * max(n, 2)`.
    pub fn for_graph(n: usize, m: usize, max_exp: u64) -> BinKind {
        let m2 = (m as u64).saturating_mul(m as u64);
        let need = m2.max(max_exp.saturating_add(1)).saturating_mul(n.max(2) as u64);
        BinKind::new(ceil_log2(need.saturating_add(1)) as u32)
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Number of digit positions.
    pub fn width(&self) -> u64 {
        1u64.checked_shl(self.bits).unwrap_or(u64::MAX)
    }

    pub fn read(&self) -> RwLockReadGuard<'_, TreeStore> {
        self.store.read().unwrap_or_else(|e| e.into_inner())
    }

    fn write(&self) -> RwLockWriteGuard<'_, TreeStore> {
        self.store.write().unwrap_or_else(|e| e.into_inner())
    }

    pub fn check(&self, exp: u64) -> Result<()> {
        if exp >= self.width() {
            return Err(ExoticError::InvalidAtom { atom: exp, limit: self.width() });
        }
        Ok(())
    }

    pub fn zero_tree(&self) -> TreeId {
        self.zeros
    }

    fn overflow(&self) -> ExoticError {
        ExoticError::DepthExceeded { depth: self.bits + 1, bound: self.bits }
    }

    /// `base + 2^e` over all `e` in `exps`.
    pub fn add(&self, base: TreeId, exps: &[u64]) -> Result<TreeId> {
        for &e in exps {
            self.check(e)?;
        }
        if exps.is_empty() {
            return Ok(base);
        }
        let mut store = self.write();
        let mut level: Vec<TreeId> = exps.iter().map(|&e| power(&mut store, self.bits, e)).collect::<Result<_>>()?;
        // halving divide and conquer: pair up neighbours until one tree is left
        while level.len() > 1 {
            let mut next = Vec::with_capacity(level.len().div_ceil(2));
            for pair in level.chunks(2) {
                next.push(match pair {
                    [a, b] => self.sum_in(&mut store, *a, *b)?,
                    [a] => *a,
                    _ => unreachable!(),
                });
            }
            level = next;
        }
        self.sum_in(&mut store, base, level[0])
    }

    /// `x + y` for two stored integers.
    pub fn sum(&self, x: TreeId, y: TreeId) -> Result<TreeId> {
        let mut store = self.write();
        self.sum_in(&mut store, x, y)
    }

    fn sum_in(&self, store: &mut TreeStore, x: TreeId, y: TreeId) -> Result<TreeId> {
        if carry(store, x, y, 0) == 1 {
            return Err(self.overflow());
        }
        sum(store, x, y, self.bits, 0)
    }

    /// Integer order: the witness node covers the same digits in both trees
    /// and every more significant digit agrees, so a block of ones beats
    /// anything mixed and anything mixed beats a block of zeros.
    pub fn cmp(&self, a: TreeId, b: TreeId) -> Ordering {
        let store = self.read();
        match store.compare_trees(a, b) {
            Comparison::Equal => Ordering::Equal,
            Comparison::Witness(w) => {
                let (x, y) = (store.node(w.first), store.node(w.second));
                let rank = |n: &crate::store::NodeRec| if !n.is_leaf() { 1 } else if n.color == 1 { 2 } else { 0 };
                rank(&x).cmp(&rank(&y))
            }
        }
    }

    pub fn value(&self, id: TreeId) -> BigUint {
        let store = self.read();
        materialize(&store, id, self.bits)
    }

    /// Lower-case hexadecimal with a `0x` prefix.
    pub fn render(&self, id: TreeId) -> String {
        format!("0x{:x}", self.value(id))
    }

    /// The tree of an explicit integer.
    pub fn from_value(&self, v: &BigUint) -> Result<TreeId> {
        if v.bits() > self.width() {
            return Err(self.overflow());
        }
        let mut store = self.write();
        build(&mut store, v, 0, self.bits)
    }
}

fn materialize(store: &TreeStore, id: TreeId, h: u32) -> BigUint {
    let n = store.node(id);
    let len = 1u64 << h;
    if n.is_leaf() {
        return if n.color == 1 { (BigUint::one() << len) - 1u32 } else { BigUint::zero() };
    }
    let half = len / 2;
    (materialize(store, n.left.expect("inner nodes have two children"), h - 1) << half)
        | materialize(store, n.right.expect("inner nodes have two children"), h - 1)
}

fn build(store: &mut TreeStore, v: &BigUint, low: u64, h: u32) -> Result<TreeId> {
    let len = 1u64 << h;
    let ones = (low..low + len).filter(|&i| v.bit(i)).count() as u64;
    if ones == 0 || ones == len {
        return Ok(store.leaf(u64::from(ones == len)));
    }
    let half = len / 2;
    let r = build(store, v, low, h - 1)?;
    let l = build(store, v, low + half, h - 1)?;
    store.make(0, Some(l), Some(r))
}

/// `T(2^e)` over `2^h` positions.
fn power(store: &mut TreeStore, h: u32, e: u64) -> Result<TreeId> {
    if h == 0 {
        return Ok(store.leaf(1));
    }
    let half = 1u64 << (h - 1);
    let zeros = store.leaf(0);
    if e >= half {
        let l = power(store, h - 1, e - half)?;
        store.make(0, Some(l), Some(zeros))
    } else {
        let r = power(store, h - 1, e)?;
        store.make(0, Some(zeros), Some(r))
    }
}

fn children(store: &TreeStore, id: TreeId) -> (TreeId, TreeId) {
    let n = store.node(id);
    (n.left.expect("inner nodes have two children"), n.right.expect("inner nodes have two children"))
}

fn leaf_color(store: &TreeStore, id: TreeId) -> Option<u64> {
    let n = store.node(id);
    n.is_leaf().then_some(n.color)
}

/// Carry out of the block when adding the blocks `x`, `y` and carry `c`.
fn carry(store: &TreeStore, x: TreeId, y: TreeId, c: u64) -> u64 {
    match (leaf_color(store, x), leaf_color(store, y)) {
        (Some(a), Some(b)) if a != b => c,
        (Some(d), _) | (_, Some(d)) => d,
        (None, None) => {
            let ((xl, xr), (yl, yr)) = (children(store, x), children(store, y));
            let mid = carry(store, xr, yr, c);
            carry(store, xl, yl, mid)
        }
    }
}

/// `(x + y + c) mod 2^(2^h)` as a tree.
fn sum(store: &mut TreeStore, x: TreeId, y: TreeId, h: u32, c: u64) -> Result<TreeId> {
    let (cx, cy) = (leaf_color(store, x), leaf_color(store, y));
    if cx == Some(c) {
        return Ok(y);
    }
    if cy == Some(c) {
        return Ok(x);
    }
    // a block of the other digit: all ones with no carry subtracts one, all
    // zeros with a carry adds one
    if cy.is_some() {
        return step(store, x, h, c == 1);
    }
    if cx.is_some() {
        return step(store, y, h, c == 1);
    }
    let ((xl, xr), (yl, yr)) = (children(store, x), children(store, y));
    let mid = carry(store, xr, yr, c);
    let r = sum(store, xr, yr, h - 1, c)?;
    let l = sum(store, xl, yl, h - 1, mid)?;
    join(store, l, r)
}

fn join(store: &mut TreeStore, l: TreeId, r: TreeId) -> Result<TreeId> {
    match (leaf_color(store, l), leaf_color(store, r)) {
        (Some(a), Some(b)) if a == b => Ok(l),
        _ => store.make(0, Some(l), Some(r)),
    }
}

/// `x + 1` (or `x - 1`) modulo `2^(2^h)`.
fn step(store: &mut TreeStore, x: TreeId, h: u32, inc: bool) -> Result<TreeId> {
    let wrap = u64::from(inc);
    match leaf_color(store, x) {
        Some(c) if c == wrap => Ok(store.leaf(1 - wrap)),
        Some(_) if h == 0 => Ok(store.leaf(wrap)),
        Some(_) => {
            let rest = store.leaf(1 - wrap);
            let r = step(store, rest, h - 1, inc)?;
            join(store, rest, r)
        }
        None => {
            let (l, r) = children(store, x);
            if leaf_color(store, r) == Some(wrap) {
                let l = step(store, l, h - 1, inc)?;
                let r = store.leaf(1 - wrap);
                join(store, l, r)
            } else {
                let r = step(store, r, h - 1, inc)?;
                join(store, l, r)
            }
        }
    }
}

impl WeightKind for BinKind {
    type Value = TreeId;
    type Atom = u64;

    fn zero(&self) -> TreeId {
        self.zeros
    }

    fn add_edge_batch(&self, base: &TreeId, atoms: &[u64]) -> TreeId {
        self.add(*base, atoms).expect("exponents are validated when the graph is built and sums fit the digit budget")
    }

    fn compare(&self, a: &TreeId, b: &TreeId) -> Ordering {
        self.cmp(*a, *b)
    }
}
