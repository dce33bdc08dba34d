use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use rand::Rng;
use sssp_core::graph::{batch_touch_bound, split_constant_degree};
use sssp_core::io::{lifted_graph, EdgeList};
use sssp_core::weights::integer;
use sssp_core::{Digraph, Error, Lifted, RealKind, Runtime, WeightKind};
use sssp_testkit::gen;
use sssp_testkit::oracle::{bellman_ford, dijkstra_without, t_closest};

type G = Digraph<Lifted<RealKind>>;

fn none() -> BTreeSet<usize> {
    BTreeSet::new()
}

fn scalar_edges(g: &G) -> Vec<(usize, usize, BigRational)> {
    let mut e: Vec<_> = g.edges().map(|e| (e.tail, e.head, e.weight.base.clone())).collect();
    e.sort();
    e
}

fn int_edges(list: &[(usize, usize, i64)]) -> Vec<(usize, usize, BigRational)> {
    list.iter().map(|&(u, v, w)| (u, v, integer(w))).collect()
}

/// Contracts `xs` using distances from the graph itself.
fn contract(g: &mut G, xs: &[usize]) -> sssp_core::graph::ContractionRecord<sssp_core::LiftedWeight> {
    let d = dijkstra_without(g, g.source(), &none());
    let dists: BTreeMap<_, _> = xs.iter().map(|&x| (x, d[x].clone().unwrap())).collect();
    g.contract_into_source(&mut Runtime::default(), xs, &dists).unwrap()
}

#[test]
fn g_star_contractions() {
    let g = lifted_graph(&gen::g_star()).unwrap();
    let mut one = g.clone();
    contract(&mut one, &[1]);
    assert_eq!(scalar_edges(&one), int_edges(&[(0, 2, 3), (2, 3, 1)]));

    let mut nothing = g.clone();
    let rec = nothing.contract_into_source(&mut Runtime::default(), &[], &BTreeMap::new()).unwrap();
    assert_eq!(rec.edits, 0);
    assert_eq!(scalar_edges(&nothing), scalar_edges(&g));

    let mut two = g.clone();
    contract(&mut two, &[1, 2]);
    assert_eq!(scalar_edges(&two), int_edges(&[(0, 3, 4)]));
    let before = dijkstra_without(&g, 0, &none());
    let after = dijkstra_without(&two, 0, &none());
    assert_eq!(after[3], before[3]);
    assert_eq!(after[3].as_ref().unwrap().base, integer(4));
}

#[test]
fn contraction_errors() {
    let g = lifted_graph(&gen::g_star()).unwrap();
    let rt = &mut Runtime::default();
    let d = dijkstra_without(&g, 0, &none());
    let with_s: BTreeMap<_, _> = [(0, d[0].clone().unwrap())].into();
    assert_eq!(g.clone().contract_into_source(rt, &[0], &with_s).unwrap_err(), Error::InvalidContraction);
    assert_eq!(g.clone().contract_into_source(rt, &[1], &BTreeMap::new()).unwrap_err(), Error::MissingDistance(1));
}

#[test]
fn contracting_nearest_sets_keeps_distances() {
    for seed in 0..60 {
        let el = gen::mixed(seed, 30);
        let t = 1 + seed as usize % 3;
        let orig = lifted_graph(&el).unwrap();
        let kind = orig.kind().clone();
        let mut g = orig.clone();
        let n = g.n();
        let all_pairs: Vec<_> = (0..n).map(|u| bellman_ford(&orig, u)).collect();
        loop {
            let d = dijkstra_without(&g, 0, &none());
            let xs: Vec<usize> = t_closest(&kind, &d, 0, t).into_iter().map(|(v, _)| v).collect();
            if xs.is_empty() {
                break;
            }
            let rec = contract(&mut g, &xs);
            assert!(rec.touched <= batch_touch_bound(rec.edits, n), "seed {seed}: touched {} for {} edits", rec.touched, rec.edits);
            let now = dijkstra_without(&g, 0, &none());
            for v in g.vertices() {
                assert_eq!(now[v], all_pairs[0][v], "seed {seed}: dist(s, {v}) moved");
            }
            for u in g.vertices().filter(|&u| u != 0) {
                let du = dijkstra_without(&g, u, &none());
                for v in g.vertices() {
                    if let Some(dv) = &du[v] {
                        let orig_d = all_pairs[u][v].as_ref().expect("contracted paths exist in the original graph");
                        assert!(!kind.less(dv, orig_d), "seed {seed}: dist({u}, {v}) dropped");
                    }
                }
            }
        }
        assert!(g.rewrite_counts().iter().all(|&c| c <= 1), "seed {seed}: an edge was rewritten twice");
    }
}

#[test]
fn top_t_examples_and_sorting() {
    let g = lifted_graph(&gen::g_star()).unwrap();
    let top: Vec<_> = g.top_t_edges(0, 1).iter().map(|e| (e.head, e.weight.base.clone())).collect();
    assert_eq!(top, vec![(1, integer(1))]);
    assert!(g.top_t_edges(3, 3).is_empty());
    for seed in 0..30 {
        let mut r = gen::rng(seed);
        let el = gen::gnm(&mut r, 20, 120);
        let g = lifted_graph(&el).unwrap();
        let k = g.kind();
        for v in 0..20 {
            let mut all: Vec<_> = g.out_edges(v).collect();
            all.sort_by(|a, b| k.compare(&a.weight, &b.weight));
            all.truncate(5);
            let heads: Vec<usize> = all.iter().map(|e| e.head).collect();
            let got: Vec<usize> = g.top_t_edges(v, 5).iter().map(|e| e.head).collect();
            assert_eq!(got, heads, "seed {seed} vertex {v}");
        }
    }
}

#[test]
fn construction_drops_loops_and_merges() {
    let el = EdgeList { n: 3, source: 0, edges: int_edges(&[(0, 1, 5), (0, 1, 2), (1, 1, 1), (1, 0, 1), (1, 2, 1)]) };
    let g = lifted_graph(&el).unwrap();
    assert_eq!(scalar_edges(&g), int_edges(&[(0, 1, 2), (1, 2, 1)]));
}

fn degrees_ok(g: &G) -> bool {
    g.vertices().filter(|&v| v != g.source()).all(|v| g.indeg(v) <= 2 && g.outdeg(v) <= 2)
}

#[test]
fn split_star() {
    let mut edges = vec![(0, 1, 1)];
    edges.extend((2..6).map(|h| (1, h, 1)));
    let el = EdgeList { n: 6, source: 0, edges: int_edges(&edges) };
    let g = lifted_graph(&el).unwrap();
    let (split, map) = split_constant_degree(&g);
    assert!(degrees_ok(&split));
    assert!(split.vertex_count() > g.vertex_count());
    let before = dijkstra_without(&g, 0, &none());
    let after = dijkstra_without(&split, 0, &none());
    for v in 0..6 {
        assert_eq!(after[map.rep[v]].as_ref().unwrap().base, before[v].as_ref().unwrap().base);
    }
    assert_eq!(after[map.rep[5]].as_ref().unwrap().base, integer(2));
}

#[test]
fn split_leaves_low_degree_graphs_alone() {
    let el = EdgeList { n: 4, source: 0, edges: int_edges(&[(0, 1, 1), (1, 2, 2), (2, 3, 3), (3, 1, 1)]) };
    let g = lifted_graph(&el).unwrap();
    let (split, map) = split_constant_degree(&g);
    assert_eq!(split.vertex_count(), 4);
    assert_eq!(scalar_edges(&split), scalar_edges(&g));
    assert_eq!(map.rep, vec![0, 1, 2, 3]);
}

#[test]
fn split_preserves_all_pairs_distances() {
    for seed in 0..50 {
        let mut r = gen::rng(1000 + seed);
        let n = r.gen_range(2..=40);
        let m = r.gen_range(0..=4 * n);
        let el = gen::gnm(&mut r, n, m);
        let g = lifted_graph(&el).unwrap();
        let (split, map) = split_constant_degree(&g);
        assert!(degrees_ok(&split), "seed {seed}");
        assert!(split.vertex_count() <= n + 4 * g.edge_count(), "seed {seed}: split too large");
        let scalars = |d: Vec<Option<sssp_core::LiftedWeight>>| -> Vec<Option<BigRational>> { d.into_iter().map(|d| d.map(|d| d.base)).collect() };
        for u in 0..n {
            let orig = scalars(dijkstra_without(&g, u, &none()));
            let via = scalars(dijkstra_without(&split, map.rep[u], &none()));
            for v in 0..n {
                assert_eq!(via[map.rep[v]], orig[v], "seed {seed}: dist({u}, {v})");
            }
        }
    }
}
