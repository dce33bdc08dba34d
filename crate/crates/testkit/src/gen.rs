//! Seeded random instances.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sssp_core::io::EdgeList;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `num/den` with `num` in `0..=20` and `den` in `1..=4`; zero about one time in ten.
pub fn weight(rng: &mut impl Rng) -> BigRational {
    let num = if rng.gen_ratio(1, 10) { 0 } else { rng.gen_range(1..=20) };
    BigRational::new(BigInt::from(num), BigInt::from(rng.gen_range(1..=4)))
}

/// `m` uniformly random edges (self-loops and repeats included) on `n` vertices, source 0.
pub fn gnm(rng: &mut impl Rng, n: usize, m: usize) -> EdgeList<BigRational> {
    let edges = (0..m).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), weight(rng))).collect();
    EdgeList { n, source: 0, edges }
}

/// A random arborescence from the source plus `extra` random edges, so that
/// every vertex is reachable.
pub fn reachable(rng: &mut impl Rng, n: usize, extra: usize) -> EdgeList<BigRational> {
    let mut order: Vec<usize> = (1..n).collect();
    order.shuffle(rng);
    order.insert(0, 0);
    let mut g = gnm(rng, n, extra);
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        g.edges.push((parent, order[i], weight(rng)));
    }
    g
}

/// Every vertex with in- and out-degree at most two (the source only bounded
/// in out-degree by `n`).
pub fn bounded_degree(rng: &mut impl Rng, n: usize, tries: usize) -> EdgeList<BigRational> {
    let mut outd = vec![0; n];
    let mut ind = vec![0; n];
    let mut edges = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for _ in 0..tries {
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u == v || v == 0 || !seen.insert((u, v)) {
            continue;
        }
        if (u != 0 && outd[u] >= 2) || ind[v] >= 2 {
            continue;
        }
        outd[u] += 1;
        ind[v] += 1;
        edges.push((u, v, weight(rng)));
    }
    EdgeList { n, source: 0, edges }
}

/// The mix used by the large oracle sweeps: sizes up to `max_n`, densities
/// from tree-like to complete.
pub fn mixed(seed: u64, max_n: usize) -> EdgeList<BigRational> {
    let mut r = rng(seed);
    let n = r.gen_range(1..=max_n);
    let full = n * n.saturating_sub(1);
    match seed % 5 {
        0 => reachable(&mut r, n, n / 4),
        1 => reachable(&mut r, n, 2 * n),
        2 => gnm(&mut r, n, 3 * n / 2),
        3 => reachable(&mut r, n, full / 3),
        _ => {
            let edges = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|(u, v)| u != v).collect::<Vec<_>>();
            let edges = edges.into_iter().map(|(u, v)| (u, v, weight(&mut r))).collect();
            EdgeList { n, source: 0, edges }
        }
    }
}

/// `s -> a (1), s -> b (4), a -> b (2), b -> c (1)` with `s, a, b, c = 0, 1, 2, 3`.
pub fn g_star() -> EdgeList<BigRational> {
    let edges = [(0, 1, 1), (0, 2, 4), (1, 2, 2), (2, 3, 1)];
    EdgeList { n: 4, source: 0, edges: edges.iter().map(|&(u, v, w)| (u, v, BigRational::from_integer(BigInt::from(w)))).collect() }
}
