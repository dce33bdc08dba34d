//! The dense algorithm over tree-backed weights.

use sssp_core::basic::SsspResult;
use sssp_core::dense::{dense_sssp_scheduled, EXOTIC_ELL_EXPONENT};
use sssp_core::io::{DistValue, EdgeList};
use sssp_core::observe::Observer;
use sssp_core::{Digraph, Lifted, LiftedValue, Runtime, WeightKind};

use crate::bin::BinKind;
use crate::error::Result;
use crate::lex::LexKind;
use crate::store::TreeId;

pub type LexGraph = Digraph<Lifted<LexKind>>;
pub type BinGraph = Digraph<Lifted<BinKind>>;
pub type TreeDistance = LiftedValue<TreeId>;

fn lifted<K: WeightKind<Atom = u64> + Clone>(kind: K, el: &EdgeList<u64>, check: impl Fn(u64) -> Result<()>) -> Result<Digraph<Lifted<K>>> {
    for e in &el.edges {
        check(e.2)?;
    }
    let k = Lifted(kind);
    let atoms: Vec<_> = el.edges.iter().map(|&(u, v, a)| (u, v, k.atom(u, v, a))).collect();
    Ok(Digraph::new(k, el.n, el.source, atoms)?)
}

/// Edge labels become singleton multisets.
pub fn lex_graph(el: &EdgeList<u64>) -> Result<LexGraph> {
    let kind = LexKind::for_labels(el.edges.iter().map(|e| e.2).max().unwrap_or(0));
    lifted(kind.clone(), el, |a| kind.check(a))
}

/// Edge `e` weighs `2^{a_e}`.
pub fn bin_graph(el: &EdgeList<u64>) -> Result<BinGraph> {
    let kind = BinKind::for_graph(el.n, el.edges.len(), el.edges.iter().map(|e| e.2).max().unwrap_or(0));
    lifted(kind.clone(), el, |a| kind.check(a))
}

pub fn lex_bottleneck_sssp<O>(rt: &mut Runtime, g: &LexGraph, t: usize, obs: &mut O) -> Result<SsspResult<TreeDistance>>
where
    O: Observer<Lifted<LexKind>> + ?Sized,
{
    Ok(dense_sssp_scheduled(rt, g, t, EXOTIC_ELL_EXPONENT, obs)?)
}

pub fn binary_sssp<O>(rt: &mut Runtime, g: &BinGraph, t: usize, obs: &mut O) -> Result<SsspResult<TreeDistance>>
where
    O: Observer<Lifted<BinKind>> + ?Sized,
{
    Ok(dense_sssp_scheduled(rt, g, t, EXOTIC_ELL_EXPONENT, obs)?)
}

/// Canonical text for each distance; tree ids depend on allocation order, so
/// dumps spell out the multiset.
pub fn lex_distances(g: &LexGraph, dist: &[Option<TreeDistance>]) -> Vec<DistValue> {
    let k = g.kind().inner();
    dist.iter().map(|d| d.as_ref().map_or(DistValue::Inf, |d| DistValue::Token(k.render(d.base)))).collect()
}

/// Distances as hexadecimal integers.
pub fn bin_distances(g: &BinGraph, dist: &[Option<TreeDistance>]) -> Vec<DistValue> {
    let k = g.kind().inner();
    dist.iter().map(|d| d.as_ref().map_or(DistValue::Inf, |d| DistValue::Token(k.render(d.base)))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use sssp_core::observe::Silent;

    #[test]
    fn single_edge() {
        let el = EdgeList { n: 2, source: 0, edges: vec![(0, 1, 7)] };
        let g = bin_graph(&el).unwrap();
        let r = binary_sssp(&mut Runtime::default(), &g, 1, &mut Silent).unwrap();
        let d = r.dist[1].as_ref().unwrap();
        assert_eq!(g.kind().inner().value(d.base), num_bigint::BigUint::from(128u32));
        assert_eq!(bin_distances(&g, &r.dist)[1], DistValue::Token("0x80".into()));
    }
}
