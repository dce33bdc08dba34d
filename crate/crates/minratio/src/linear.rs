//! Weights `a + bλ` for an unknown `λ`.
//!
//! A comparison is the sign of a degree-one polynomial. The [`Interval`]
//! keeps bounds `lo <= λ < hi` and evaluates every sign just below `hi`. A
//! polynomial whose root falls strictly inside the bounds is unresolved: inside
//! a parallel round its root is queued and the round replayed once the bounds
//! have been narrowed past it; outside a round it is decided on the spot.

use std::cmp::Ordering;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use sssp_core::rt::RoundHook;
use sssp_core::WeightKind;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Linear {
    pub a: BigRational,
    pub b: BigRational,
}

impl Linear {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Linear { a, b }
    }

    pub fn zero() -> Self {
        Linear { a: BigRational::zero(), b: BigRational::zero() }
    }

    pub fn at(&self, x: &BigRational) -> BigRational {
        &self.a + &self.b * x
    }

    pub fn root(&self) -> Option<BigRational> {
        (!self.b.is_zero()).then(|| -&self.a / &self.b)
    }

    pub fn sub(&self, o: &Linear) -> Linear {
        Linear { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl fmt::Display for Linear {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}λ", self.a, self.b)
    }
}

/// Answers `λ <= λ*` for the unknown `λ*`.
pub trait Decide: Send + Sync {
    fn decide(&self, lambda: &BigRational) -> bool;
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub comparisons: usize,
    /// Calls to the decision procedure.
    pub tests: usize,
    /// Distinct roots that had to be located.
    pub roots: usize,
    /// Rounds executed again after their roots were located.
    pub replays: usize,
}

struct Bounds {
    lo: Option<BigRational>,
    hi: BigRational,
    pending: Vec<BigRational>,
    in_round: bool,
    stats: SearchStats,
}

impl Bounds {
    fn inside(&self, r: &BigRational) -> bool {
        self.lo.as_ref().is_none_or(|lo| lo < r) && *r < self.hi
    }

    /// Binary search over sorted roots; afterwards none lies inside the bounds.
    fn locate(&mut self, oracle: &dyn Decide, mut roots: Vec<BigRational>) {
        roots.sort();
        roots.dedup();
        roots.retain(|r| self.inside(r));
        self.stats.roots += roots.len();
        let (mut lo, mut hi) = (0, roots.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            self.stats.tests += 1;
            if oracle.decide(&roots[mid]) {
                self.lo = Some(roots[mid].clone());
                lo = mid + 1;
            } else {
                self.hi = roots[mid].clone();
                hi = mid;
            }
        }
    }
}

pub struct Interval {
    bounds: Mutex<Bounds>,
    oracle: Box<dyn Decide>,
}

impl fmt::Debug for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = self.bounds.lock().expect("bounds lock");
        f.debug_struct("Interval").field("lo", &b.lo).field("hi", &b.hi).finish()
    }
}

impl Interval {
    /// `λ*` is known to lie below `hi`.
    pub fn new(hi: BigRational, oracle: Box<dyn Decide>) -> Arc<Self> {
        Arc::new(Interval {
            bounds: Mutex::new(Bounds { lo: None, hi, pending: Vec::new(), in_round: false, stats: SearchStats::default() }),
            oracle,
        })
    }

    pub fn bounds(&self) -> (Option<BigRational>, BigRational) {
        let b = self.bounds.lock().expect("bounds lock");
        (b.lo.clone(), b.hi.clone())
    }

    pub fn stats(&self) -> SearchStats {
        self.bounds.lock().expect("bounds lock").stats.clone()
    }

    /// Sign of `d` just below `hi`.
    pub fn sign(&self, d: &Linear) -> Ordering {
        let mut b = self.bounds.lock().expect("bounds lock");
        b.stats.comparisons += 1;
        let Some(r) = d.root() else { return d.a.cmp(&BigRational::zero()) };
        if b.inside(&r) {
            if b.in_round {
                b.pending.push(r);
            } else {
                b.locate(self.oracle.as_ref(), vec![r]);
            }
        }
        let v = d.at(&b.hi);
        if v.is_zero() {
            if d.b.is_positive() {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        } else {
            v.cmp(&BigRational::zero())
        }
    }
}

impl RoundHook for Interval {
    fn begin_round(&self) {
        let mut b = self.bounds.lock().expect("bounds lock");
        b.in_round = true;
        b.pending.clear();
    }

    fn end_round(&self) -> bool {
        let mut b = self.bounds.lock().expect("bounds lock");
        b.in_round = false;
        let roots = std::mem::take(&mut b.pending);
        if roots.iter().all(|r| !b.inside(r)) {
            return false;
        }
        b.locate(self.oracle.as_ref(), roots);
        b.stats.replays += 1;
        true
    }
}

/// Linear path weights ordered through a shared [`Interval`].
#[derive(Debug, Clone)]
pub struct LinearKind {
    interval: Arc<Interval>,
}

impl LinearKind {
    pub fn new(interval: Arc<Interval>) -> Self {
        LinearKind { interval }
    }

    pub fn interval(&self) -> &Arc<Interval> {
        &self.interval
    }
}

impl WeightKind for LinearKind {
    type Value = Linear;
    type Atom = Linear;

    fn zero(&self) -> Linear {
        Linear::zero()
    }

    fn add_edge_batch(&self, base: &Linear, atoms: &[Linear]) -> Linear {
        let mut out = base.clone();
        for x in atoms {
            out.a += &x.a;
            out.b += &x.b;
        }
        out
    }

    fn compare(&self, a: &Linear, b: &Linear) -> Ordering {
        self.interval.sign(&a.sub(b))
    }
}
