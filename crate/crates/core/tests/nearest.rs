use std::collections::BTreeSet;

use rand::Rng;
use sssp_core::io::lifted_graph;
use sssp_core::nearest::{all_t_nearest, all_t_nearest_traced, t_nearest_from, NearGraph};
use sssp_core::rt::ceil_log2;
use sssp_core::weights::integer;
use sssp_core::Runtime;
use sssp_testkit::gen;
use sssp_testkit::oracle::{dijkstra_without, hop_bounded, t_closest};

/// Work of one kernel call is at most `WORK_C * n * t^2 * L^2` with
/// `L = max(1, ceil(log2 n))`: `n (t + 2)` for the base case plus, per
/// round, `n` tasks each sorting at most `(t + 1)^2` candidates.
const WORK_C: u64 = 20;

#[test]
fn g_star_from_the_source() {
    let g = lifted_graph(&gen::g_star()).unwrap();
    let h = NearGraph::top_t(&g, 2);
    let got = t_nearest_from(&mut Runtime::default(), g.kind(), &h, 0, 2).unwrap();
    let all: Vec<usize> = g.vertices().collect();
    let dp = hop_bounded(&g, &all, 2, 0, 4);
    let want = t_closest(g.kind(), &dp, 0, 2);
    assert_eq!(got.iter().map(|e| (e.vertex, e.dist.clone())).collect::<Vec<_>>(), want);
    assert_eq!(got.iter().map(|e| e.dist.base.clone()).collect::<Vec<_>>(), vec![integer(1), integer(3)]);
}

#[test]
fn tables_match_the_closest_vertices() {
    for seed in 0..100 {
        let el = gen::mixed(seed, 40);
        let g = lifted_graph(&el).unwrap();
        let t = [1, 3, 8][seed as usize % 3];
        let k = g.kind();
        let table = all_t_nearest(&mut Runtime::default(), k, &NearGraph::top_t(&g, t), t).unwrap();
        for u in g.vertices() {
            let want = t_closest(k, &dijkstra_without(&g, u, &BTreeSet::new()), u, t);
            let row = table.row(u).unwrap();
            assert_eq!(row[0].vertex, u);
            let got: Vec<_> = row[1..].iter().map(|e| (e.vertex, e.dist.clone())).collect();
            assert_eq!(got, want, "seed {seed} t {t} u {u}");
        }
    }
}

#[test]
fn every_round_keeps_the_hop_bounded_closest() {
    for seed in 0..40 {
        let mut r = gen::rng(500 + seed);
        let n = r.gen_range(1..=25);
        let extra = r.gen_range(0..=3 * n);
        let el = gen::reachable(&mut r, n, extra);
        let g = lifted_graph(&el).unwrap();
        let t = 1 + seed as usize % 4;
        let k = g.kind();
        let all: Vec<usize> = g.vertices().collect();
        let mut seen = 0;
        let mut bad = Vec::new();
        all_t_nearest_traced(&mut Runtime::default(), k, &NearGraph::top_t(&g, t), t, &mut |tab| {
            seen += 1;
            for &u in &all {
                let dp = hop_bounded(&g, &all, t, u, 1 << tab.rounds);
                let mut want = t_closest(k, &dp, usize::MAX, t + 1);
                let mut got: Vec<_> = tab.row(u).unwrap().iter().map(|e| (e.vertex, e.dist.clone())).collect();
                want.sort_by_key(|x| x.0);
                got.sort_by_key(|x| x.0);
                if got != want {
                    bad.push(format!("round {} u {u}", tab.rounds));
                }
            }
        })
        .unwrap();
        assert_eq!(seen, 1 + ceil_log2(n as u64) as usize);
        assert!(bad.is_empty(), "seed {seed}: {bad:?}");
    }
}

#[test]
fn work_and_depth_bounds() {
    for seed in 0..30 {
        let el = gen::mixed(seed, 60);
        let g = lifted_graph(&el).unwrap();
        let n = g.vertex_count() as u64;
        let l = ceil_log2(n).max(1);
        let mut depths = BTreeSet::new();
        for t in [1, 2, 4, 7] {
            let mut rt = Runtime::default();
            all_t_nearest(&mut rt, g.kind(), &NearGraph::top_t(&g, t), t).unwrap();
            let c = rt.counters();
            let t = t as u64;
            assert!(c.work <= WORK_C * n * t * t * l * l, "seed {seed}: work {} at t {t}", c.work);
            assert!(c.depth <= 2 * l * l, "seed {seed}: depth {}", c.depth);
            depths.insert(c.depth);
        }
        assert_eq!(depths.len(), 1, "seed {seed}: depth varies with t");
        assert_eq!(depths.pop_first(), Some(1 + ceil_log2(n)));
    }
}
