use std::collections::BTreeSet;

use num_rational::BigRational;
use sssp_core::basic::basic_sssp;
use sssp_core::io::lifted_graph;
use sssp_core::observe::Silent;
use sssp_core::rt::ceil_log2;
use sssp_core::weights::integer;
use sssp_core::{Error, Runtime};
use sssp_testkit::check::{parent_violations, Checker};
use sssp_testkit::gen;
use sssp_testkit::oracle::{dijkstra_without, t_closest};

/// Per discovery step: the kernel (`1 + ceil(log2 n)`) and the contraction
/// (`2 + ceil(log2 k)`), plus one round for the parents.
const DEPTH_C: u64 = 6;

fn scalars(d: &[Option<sssp_core::LiftedWeight>]) -> Vec<Option<BigRational>> {
    d.iter().map(|d| d.as_ref().map(|d| d.base.clone())).collect()
}

#[test]
fn g_star() {
    let g = lifted_graph(&gen::g_star()).unwrap();
    let want = vec![Some(integer(0)), Some(integer(1)), Some(integer(3)), Some(integer(4))];
    let r = basic_sssp(&mut Runtime::default(), &g, 2, &mut Silent).unwrap();
    assert_eq!(scalars(&r.dist), want);
    assert_eq!(r.steps, 2);
    assert_eq!(r.parent, vec![None, Some(0), Some(1), Some(2)]);
    let r = basic_sssp(&mut Runtime::default(), &g, 3, &mut Silent).unwrap();
    assert_eq!(scalars(&r.dist), want);
    assert_eq!(r.steps, 1);
    assert!(matches!(basic_sssp(&mut Runtime::default(), &g, 0, &mut Silent), Err(Error::InvalidParameter(_))));
}

#[test]
fn random_graphs_match_the_oracle() {
    for seed in 0..300 {
        let el = gen::mixed(seed, 60);
        let g = lifted_graph(&el).unwrap();
        let n = el.n;
        let t = [1, 2, 5, n][seed as usize % 4];
        let mut chk = Checker::light(t);
        let r = basic_sssp(&mut Runtime::default(), &g, t, &mut chk).unwrap();
        let want = dijkstra_without(&g, 0, &BTreeSet::new());
        assert_eq!(r.dist, want, "seed {seed}");
        assert!(chk.violations.is_empty(), "seed {seed}: {:?}", chk.violations);
        assert!(parent_violations(&g, &r.dist, &r.parent).is_empty(), "seed {seed}");

        let reached = want.iter().filter(|d| d.is_some()).count();
        let bound = (n - 1).div_ceil(t);
        if reached == n {
            assert_eq!(r.steps, bound, "seed {seed}: n {n} t {t}");
        } else {
            assert!(r.steps <= bound, "seed {seed}");
        }

        let order = t_closest(g.kind(), &want, 0, n);
        let mut so_far = BTreeSet::new();
        for (k, batch) in chk.batches.iter().enumerate() {
            so_far.extend(batch.iter().copied());
            let closest: BTreeSet<usize> = order.iter().take((k + 1) * t).map(|x| x.0).collect();
            assert_eq!(so_far, closest, "seed {seed}: after step {}", k + 1);
        }

        let l = ceil_log2(n as u64).max(1);
        assert!(r.counters.depth <= DEPTH_C * n.div_ceil(t) as u64 * l * l, "seed {seed}: depth {}", r.counters.depth);
    }
}

#[test]
fn unreachable_vertices_stay_infinite() {
    let el = sssp_core::io::parse_graph("5 3 0\n0 1 1 1\n1 2 1 1\n3 4 1 1\n").unwrap();
    let g = lifted_graph(&el).unwrap();
    let r = basic_sssp(&mut Runtime::default(), &g, 1, &mut Silent).unwrap();
    assert_eq!(scalars(&r.dist), vec![Some(integer(0)), Some(integer(1)), Some(integer(2)), None, None]);
    assert_eq!(r.steps, 2);
    assert_eq!(r.parent, vec![None, Some(0), Some(1), None, None]);
}
