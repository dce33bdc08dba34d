//! Ordered additive weights.
//!
//! A [`WeightKind`] is the context object through which algorithms add and
//! compare weights; the values themselves are plain data. Kinds that need
//! shared state (tree stores, parametric comparisons) keep it in `self`.

use std::cmp::Ordering;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub trait WeightKind: Send + Sync {
    /// A path weight.
    type Value: Clone + Debug + Send + Sync;
    /// A single edge weight.
    type Atom: Clone + Debug + Send + Sync;

    fn zero(&self) -> Self::Value;
    fn add_edge_batch(&self, base: &Self::Value, atoms: &[Self::Atom]) -> Self::Value;
    fn compare(&self, a: &Self::Value, b: &Self::Value) -> Ordering;

    fn atom_value(&self, atom: &Self::Atom) -> Self::Value {
        self.add_edge_batch(&self.zero(), std::slice::from_ref(atom))
    }

    fn eq(&self, a: &Self::Value, b: &Self::Value) -> bool {
        self.compare(a, b) == Ordering::Equal
    }

    fn less(&self, a: &Self::Value, b: &Self::Value) -> bool {
        self.compare(a, b) == Ordering::Less
    }
}

/// Kinds with a neutral atom, needed for the zero-scalar edges of vertex splitting.
pub trait HasZeroAtom: WeightKind {
    fn zero_atom(&self) -> Self::Atom;
}

/// Plain non-negative rationals.
#[derive(Debug, Clone, Copy, Default)]
pub struct RealKind;

impl WeightKind for RealKind {
    type Value = BigRational;
    type Atom = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn add_edge_batch(&self, base: &BigRational, atoms: &[BigRational]) -> BigRational {
        atoms.iter().filter(|a| !a.is_zero()).fold(base.clone(), |acc, a| acc + a)
    }

    fn compare(&self, a: &BigRational, b: &BigRational) -> Ordering {
        cmp_rational(a, b)
    }

    fn eq(&self, a: &BigRational, b: &BigRational) -> bool {
        a.numer() == b.numer() && a.denom() == b.denom()
    }

    fn atom_value(&self, atom: &BigRational) -> BigRational {
        atom.clone()
    }
}

impl HasZeroAtom for RealKind {
    fn zero_atom(&self) -> BigRational {
        BigRational::zero()
    }
}

/// A path weight extended with its hop count and the telescoping label
/// difference `head - tail`. Ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LiftedValue<V> {
    pub base: V,
    pub hops: u64,
    pub delta: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LiftedAtom<A> {
    pub base: A,
    pub delta: i64,
}

pub type LiftedWeight = LiftedValue<BigRational>;

/// Lifts an inner kind so that every proper subpath is strictly lighter and
/// paths from one origin to distinct endpoints never tie.
#[derive(Debug, Clone, Default)]
pub struct Lifted<K>(pub K);

impl<K: WeightKind> Lifted<K> {
    pub fn inner(&self) -> &K {
        &self.0
    }

    pub fn atom(&self, tail: usize, head: usize, base: K::Atom) -> LiftedAtom<K::Atom> {
        LiftedAtom { base, delta: head as i64 - tail as i64 }
    }
}

impl<K: WeightKind> WeightKind for Lifted<K> {
    type Value = LiftedValue<K::Value>;
    type Atom = LiftedAtom<K::Atom>;

    fn zero(&self) -> Self::Value {
        LiftedValue { base: self.0.zero(), hops: 0, delta: 0 }
    }

    fn add_edge_batch(&self, base: &Self::Value, atoms: &[Self::Atom]) -> Self::Value {
        if atoms.is_empty() {
            return base.clone();
        }
        let sum = match atoms {
            [one] => self.0.add_edge_batch(&base.base, std::slice::from_ref(&one.base)),
            _ => {
                let inner: Vec<K::Atom> = atoms.iter().map(|a| a.base.clone()).collect();
                self.0.add_edge_batch(&base.base, &inner)
            }
        };
        LiftedValue {
            base: sum,
            hops: base.hops + atoms.len() as u64,
            delta: base.delta + atoms.iter().map(|a| a.delta).sum::<i64>(),
        }
    }

    fn compare(&self, a: &Self::Value, b: &Self::Value) -> Ordering {
        self.0
            .compare(&a.base, &b.base)
            .then(a.hops.cmp(&b.hops))
            .then(a.delta.cmp(&b.delta))
    }

    fn eq(&self, a: &Self::Value, b: &Self::Value) -> bool {
        a.hops == b.hops && a.delta == b.delta && self.0.eq(&a.base, &b.base)
    }
}

impl<K: HasZeroAtom> HasZeroAtom for Lifted<K> {
    fn zero_atom(&self) -> Self::Atom {
        LiftedAtom { base: self.0.zero_atom(), delta: 0 }
    }
}

/// `(scalar, 1, head - tail)`.
pub fn lift(tail: usize, head: usize, scalar: &BigRational) -> Result<LiftedWeight> {
    if scalar.is_negative() {
        return Err(Error::InvalidWeight(format!("negative scalar {scalar} on {tail}->{head}")));
    }
    Ok(LiftedValue { base: scalar.clone(), hops: 1, delta: head as i64 - tail as i64 })
}

pub fn compare_lifted(a: &LiftedWeight, b: &LiftedWeight) -> Ordering {
    Lifted(RealKind).compare(a, b)
}

/// Exact order on reduced rationals with positive denominators, without the
/// division `Ratio::cmp` performs.
pub fn cmp_rational(a: &BigRational, b: &BigRational) -> Ordering {
    if a.denom() == b.denom() {
        return a.numer().cmp(b.numer());
    }
    match (a.numer().sign(), b.numer().sign()) {
        (x, y) if x != y => return x.cmp(&y),
        _ => {}
    }
    (a.numer() * b.denom()).cmp(&(b.numer() * a.denom()))
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}
