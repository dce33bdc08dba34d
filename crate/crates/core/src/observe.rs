//! Hooks into the phase and step structure of a run, used by tests to check
//! intermediate state. All methods default to doing nothing.

use crate::alive::AliveState;
use crate::graph::Digraph;
use crate::nearest::NearEntry;
use crate::nearlist::{NearListTable, NearLists};
use crate::weights::WeightKind;

pub trait Observer<K: WeightKind> {
    /// A discovery step on `g` ran on the subgraph induced by `h` and found `found`.
    fn discovery(&mut self, _g: &Digraph<K>, _h: &[usize], _found: &[NearEntry<K::Value, K::Atom>]) {}

    /// Near-lists were computed on `j`.
    fn near_lists(&mut self, _j: &Digraph<K>, _table: &NearListTable<K::Value>) {}

    /// The alive state for `g` was initialized or updated.
    fn alive(&mut self, _g: &Digraph<K>, _state: &AliveState) {}

    /// Improved near-lists for `g` were built from `table`.
    fn improved(&mut self, _g: &Digraph<K>, _table: &NearListTable<K::Value>, _improved: &NearLists<K::Value>) {}
}

/// Observes nothing.
#[derive(Debug, Clone, Copy, Default)]
pub struct Silent;

impl<K: WeightKind> Observer<K> for Silent {}
