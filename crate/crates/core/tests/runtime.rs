use std::collections::BTreeSet;

use rand::Rng;
use sssp_core::basic::{basic_sssp, SsspResult};
use sssp_core::dense::dense_sssp;
use sssp_core::io::lifted_graph;
use sssp_core::observe::Silent;
use sssp_core::sparse::sparse_sssp;
use sssp_core::weights::{integer, rational};
use sssp_core::{Backend, Counters, Lifted, LiftedValue, LiftedWeight, RealKind, Runtime, WeightKind};
use sssp_testkit::gen;

type Run = fn(&mut Runtime, &sssp_core::Digraph<Lifted<RealKind>>, usize) -> SsspResult<LiftedWeight>;

const ALGOS: [(&str, Run); 3] = [
    ("basic", |rt, g, t| basic_sssp(rt, g, t, &mut Silent).unwrap()),
    ("sparse", |rt, g, t| sparse_sssp(rt, g, t, &mut Silent).unwrap()),
    ("dense", |rt, g, t| dense_sssp(rt, g, t, &mut Silent).unwrap()),
];

#[test]
fn runs_are_identical_across_backends_and_reruns() {
    for seed in 0..20 {
        let g = lifted_graph(&gen::mixed(seed, 30)).unwrap();
        let t = 1 + seed as usize % 3;
        for (name, run) in ALGOS {
            let outcomes: Vec<(Counters, Vec<Option<LiftedWeight>>, usize)> = [Backend::Sequential, Backend::Parallel, Backend::Sequential]
                .into_iter()
                .map(|b| {
                    let r = run(&mut Runtime::new(b), &g, t);
                    (r.counters, r.dist, r.steps)
                })
                .collect();
            assert!(outcomes.windows(2).all(|w| w[0] == w[1]), "seed {seed}: {name} differs between runs");
        }
    }
}

fn random_lifted(r: &mut impl Rng) -> LiftedWeight {
    LiftedValue { base: rational(r.gen_range(0..30), r.gen_range(1..4)), hops: r.gen_range(0..10), delta: r.gen_range(-10..10) }
}

#[test]
fn combiners_are_associative_and_commutative() {
    let k = Lifted(RealKind);
    let min = |a: &LiftedWeight, b: &LiftedWeight| if k.less(b, a) { b.clone() } else { a.clone() };
    let mut r = gen::rng(7);
    for _ in 0..1000 {
        let (a, b, c) = (random_lifted(&mut r), random_lifted(&mut r), random_lifted(&mut r));
        assert_eq!(min(&min(&a, &b), &c), min(&a, &min(&b, &c)));
        assert_eq!(min(&a, &b), min(&b, &a));

        let (x, y, z): (u64, u64, u64) = (r.gen_range(0..1 << 40), r.gen_range(0..1 << 40), r.gen_range(0..1 << 40));
        assert_eq!((x + y) + z, x + (y + z));
        assert_eq!(x + y, y + x);

        let set = |r: &mut rand_chacha::ChaCha8Rng| -> BTreeSet<u8> { (0..r.gen_range(0..6)).map(|_| r.gen_range(0..12)).collect() };
        let (p, q, s) = (set(&mut r), set(&mut r), set(&mut r));
        let union = |a: &BTreeSet<u8>, b: &BTreeSet<u8>| -> BTreeSet<u8> { a | b };
        assert_eq!(union(&union(&p, &q), &s), union(&p, &union(&q, &s)));
        assert_eq!(union(&p, &q), union(&q, &p));
    }
}

#[test]
fn reductions_ignore_grouping() {
    let k = Lifted(RealKind);
    let mut r = gen::rng(11);
    for len in 1..40 {
        let items: Vec<LiftedWeight> = (0..len).map(|_| random_lifted(&mut r)).collect();
        let linear = items.iter().min_by(|a, b| k.compare(a, b)).unwrap().clone();
        for b in [Backend::Sequential, Backend::Parallel] {
            let mut rt = Runtime::new(b);
            let got = rt.par_reduce(items.clone(), |a, b| if k.less(&b, &a) { b } else { a }).unwrap();
            assert_eq!(got, linear);
            assert_eq!(rt.counters(), Counters { work: len as u64, depth: sssp_core::rt::ceil_log2(len as u64) });
        }
    }
}

#[test]
fn minimum_g_star_edge() {
    let g = lifted_graph(&gen::g_star()).unwrap();
    let k = g.kind();
    let weights: Vec<LiftedWeight> = g.edges().map(|e| e.weight.clone()).collect();
    let got = Runtime::default().par_reduce(weights.clone(), |a, b| if k.less(&b, &a) { b } else { a }).unwrap();
    let scan = weights.iter().fold(None::<&LiftedWeight>, |m, w| match m {
        Some(m) if !k.less(w, m) => Some(m),
        _ => Some(w),
    });
    assert_eq!(Some(&got), scan);
    assert_eq!(got, LiftedValue { base: integer(1), hops: 1, delta: 1 });
}

#[test]
fn backend_selection() {
    assert_eq!(Backend::parse("par"), Some(Backend::Parallel));
    assert_eq!(Backend::parse("seq"), Some(Backend::Sequential));
    assert_eq!(Backend::parse("gpu"), None);
    assert_eq!(Runtime::new(Backend::Parallel).backend(), Backend::Parallel);
}
