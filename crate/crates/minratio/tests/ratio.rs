use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use proptest::prelude::*;
use rand::Rng;
use sssp_core::Backend;
use sssp_minratio::*;
use sssp_testkit::gen::rng;
use sssp_testkit::oracle::{CycleOracle, Q};

fn r(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn big(q: Q) -> BigRational {
    r(*q.numer(), *q.denom())
}

fn edge(p: usize, q: usize, c: i64, t: i64) -> RatioEdge {
    RatioEdge::new(p, q, r(c, 1), r(t, 1)).unwrap()
}

#[test]
fn attests_single_edge() {
    let e = [edge(0, 1, 1, 1)];
    let phi = vec![r(0, 1); 2];
    assert!(attests(&e, &phi, &r(0, 1)));
    assert!(!attests(&e, &phi, &r(2, 1)));
}

#[test]
fn two_cycle() {
    let opts = SearchOptions::default();
    let mut s = RatioState::new(2);
    let first = s.insert_edge(edge(0, 1, 2, 1), &opts).unwrap();
    assert_eq!(first.lambda_new, None);
    assert!(s.lambda().is_none() && s.cycle().is_none());
    let back = edge(1, 0, 4, 3);
    assert!(s.test_lambda(&back, &r(1, 1)));
    assert!(!s.test_lambda(&back, &r(2, 1)));
    assert!(s.test_lambda(&back, &r(3, 2)));
    assert!(!s.test_lambda(&back, &r(301, 200)));
    for comparator in [Comparator::Basic, Comparator::Dense] {
        let out = s.parametric_search(&back, &SearchOptions { comparator, ..opts }).unwrap();
        assert_eq!(out.lambda, Some(r(3, 2)), "{comparator:?}");
    }
    s.insert_edge(back, &opts).unwrap();
    assert_eq!(s.lambda(), Some(&r(3, 2)));
    let cycle = s.cycle().unwrap();
    assert_eq!(cycle, &[1, 0]);
    assert!(is_cycle(s.edges(), cycle));
    assert!(attests(s.edges(), s.potential().unwrap(), &r(3, 2)));
}

#[test]
fn edges_closing_no_cycle() {
    let opts = SearchOptions::default();
    let mut s = RatioState::new(4);
    for (p, q) in [(0, 1), (1, 2), (0, 2), (2, 3)] {
        let e = edge(p, q, -3, 2);
        for l in [-100, -1, 0, 1, 100] {
            assert!(s.test_lambda(&e, &r(l, 1)));
        }
        assert_eq!(s.parametric_search(&e, &opts).unwrap().lambda, None);
        s.insert_edge(e, &opts).unwrap();
        assert!(s.lambda().is_none());
    }
    // Growing the vertex set on the fly.
    s.insert_edge(edge(3, 7, 1, 1), &opts).unwrap();
    assert_eq!(s.n(), 8);
    s.insert_edge(edge(7, 0, 1, 1), &opts).unwrap();
    // 0 -> 1 -> 2 -> 3 -> 7 -> 0: cost -3 - 3 - 3 + 1 + 1, time 2 + 2 + 2 + 1 + 1.
    assert_eq!(s.lambda(), Some(&r(-7, 8)));
}

#[test]
fn self_loops_and_parallel_edges() {
    let opts = SearchOptions::default();
    let mut s = RatioState::new(2);
    s.insert_edge(edge(0, 1, 5, 1), &opts).unwrap();
    s.insert_edge(edge(1, 0, 5, 1), &opts).unwrap();
    assert_eq!(s.lambda(), Some(&r(5, 1)));
    s.insert_edge(edge(0, 1, 1, 1), &opts).unwrap();
    assert_eq!(s.lambda(), Some(&r(3, 1)));
    s.insert_edge(edge(1, 1, 7, 2), &opts).unwrap();
    assert_eq!(s.lambda(), Some(&r(3, 1)));
    s.insert_edge(edge(1, 1, 5, 2), &opts).unwrap();
    assert_eq!(s.lambda(), Some(&r(5, 2)));
    assert_eq!(s.cycle().unwrap(), &[4]);
    assert!(attests(s.edges(), s.potential().unwrap(), &r(5, 2)));
}

#[test]
fn bad_time() {
    assert!(matches!(RatioEdge::new(0, 1, r(1, 1), r(0, 1)), Err(RatioError::NonPositiveTime(_))));
    assert!(RatioEdge::new(0, 1, r(1, 1), r(-1, 2)).is_err());
}

fn random_edge(g: &mut impl Rng, n: usize, unit_time: bool) -> (usize, usize, Q, Q) {
    let c = Ratio::new(g.gen_range(-12..=12), g.gen_range(1..=3));
    let t = if unit_time { Ratio::from_integer(1) } else { Ratio::new(g.gen_range(1..=6), g.gen_range(1..=3)) };
    (g.gen_range(0..n), g.gen_range(0..n), c, t)
}

fn run_script(seed: u64, inserts: usize, opts: &SearchOptions, unit_time: bool) {
    let mut g = rng(seed);
    let n = g.gen_range(2..=8);
    let mut state = RatioState::new(n);
    let mut oracle = CycleOracle::new(n);
    let mut prev: Option<BigRational> = None;
    for k in 0..inserts {
        let (p, q, c, t) = random_edge(&mut g, n, unit_time);
        let want = oracle.insert(p, q, c, t).map(big);
        state.insert_edge(RatioEdge::new(p, q, big(c), big(t)).unwrap(), opts).unwrap();
        let ctx = format!("seed {seed} insert {k} ({p}->{q} {c}/{t})");
        assert_eq!(state.lambda(), want.as_ref(), "{ctx}");
        if let Some(l) = state.lambda() {
            let cycle = state.cycle().unwrap();
            assert!(is_cycle(state.edges(), cycle), "{ctx}");
            assert_eq!(&ratio(state.edges(), cycle), l, "{ctx}");
            assert!(attests(state.edges(), state.potential().unwrap(), l), "{ctx}");
            if let Some(p) = &prev {
                assert!(l <= p, "{ctx}");
            }
        }
        prev = state.lambda().cloned();
    }
}

#[test]
fn random_scripts_match_the_cycle_oracle() {
    let opts = SearchOptions::default();
    for seed in 0..30 {
        run_script(seed, 200, &opts, false);
    }
}

#[test]
fn dense_comparator_and_parallel_backend() {
    for seed in 100..110 {
        run_script(seed, 120, &SearchOptions { comparator: Comparator::Dense, t: 3, backend: Backend::Sequential }, false);
    }
    for seed in 200..205 {
        run_script(seed, 120, &SearchOptions { backend: Backend::Parallel, ..SearchOptions::default() }, false);
    }
}

#[test]
fn unit_times_give_the_minimum_mean_cycle() {
    for seed in 300..310 {
        run_script(seed, 80, &SearchOptions { t: 1, ..SearchOptions::default() }, true);
    }
}

#[test]
fn search_needs_few_tests() {
    let mut g = rng(7);
    let opts = SearchOptions::default();
    let mut state = RatioState::new(8);
    let mut searched = 0;
    for _ in 0..150 {
        let (p, q, c, t) = random_edge(&mut g, 8, false);
        let rep = state.insert_edge(RatioEdge::new(p, q, big(c), big(t)).unwrap(), &opts).unwrap();
        if rep.searched {
            searched += 1;
            assert!(rep.stats.tests <= 1 + rep.stats.roots.max(1) * 2, "{:?}", rep.stats);
        } else {
            assert!(rep.stats.tests <= 1);
        }
    }
    assert!(searched > 0);
}

#[test]
fn script_format() {
    let text = "# two-cycle\n0 1 2 1 1 1\n\n1 0 4 1 3 1  # back\n";
    let edges = parse_script(text).unwrap();
    assert_eq!(edges, vec![edge(0, 1, 2, 1), edge(1, 0, 4, 3)]);
    assert_eq!(parse_script(&write_script(&edges)).unwrap(), edges);
    let bad = |s: &str| match parse_script(s) {
        Err(RatioError::Parse { line, .. }) => line,
        other => panic!("{other:?}"),
    };
    assert_eq!(bad("0 1 2 1 1\n"), 1);
    assert_eq!(bad("\n0 1 2 0 1 1\n"), 2);
    assert_eq!(bad("0 1 2 1 0 1\n"), 1);
    assert_eq!(bad("0 x 2 1 1 1\n"), 1);
    assert_eq!(bad("0 1 2 1 -1 1\n"), 1);
}

struct At(BigRational);

impl Decide for At {
    fn decide(&self, l: &BigRational) -> bool {
        *l <= self.0
    }
}

proptest! {
    #[test]
    fn resolved_signs_match_the_hidden_value(
        star in (-50i64..50, 1i64..5),
        forms in prop::collection::vec((-50i64..50, -5i64..5), 1..30),
        round in any::<bool>(),
    ) {
        use sssp_core::rt::RoundHook;
        use std::cmp::Ordering;
        let star = r(star.0, star.1);
        let iv = Interval::new(r(1000, 1), Box::new(At(star.clone())));
        let forms: Vec<Linear> = forms.iter().map(|&(a, b)| Linear::new(r(a, 1), r(b, 1))).collect();
        if round {
            iv.begin_round();
            for f in &forms {
                iv.sign(f);
            }
            prop_assert_eq!(iv.end_round(), iv.stats().replays == 1);
            iv.begin_round();
        }
        for f in &forms {
            let want = f.at(&star).cmp(&r(0, 1));
            let got = iv.sign(f);
            if want != Ordering::Equal {
                prop_assert_eq!(got, want);
            }
        }
        if round {
            prop_assert!(!iv.end_round());
        }
        let (lo, hi) = iv.bounds();
        prop_assert!(lo.is_none_or(|lo| lo <= star) && star < hi);
    }
}
