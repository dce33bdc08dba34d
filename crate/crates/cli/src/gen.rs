//! Seeded graph families.
//!
//! Real weights are `num/den` with `num` in `0..=20` and `den` in `1..=4`.
//! Lex atoms are a shuffled `0..m`, so every label is distinct; bin atoms
//! are exponents in `0..=2m`. The source is always vertex 0.

use clap::ValueEnum;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sssp_core::io::EdgeList;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    RandomGnm,
    Grid,
    Layered,
    Star,
    Complete,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Kind {
    #[default]
    Real,
    Lex,
    Bin,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerationError {
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("{0:?} needs an edge count")]
    MissingEdgeCount(Family),
    #[error("grid needs a square vertex count, got {0}")]
    NotSquare(usize),
    #[error("{family:?} on {n} vertices has room for {max} edges, asked for {m}")]
    TooManyEdges { family: Family, n: usize, m: usize, max: usize },
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn layers(n: usize) -> Vec<std::ops::Range<usize>> {
    let w = (n as f64).sqrt().ceil().max(1.0) as usize;
    (0..n).step_by(w).map(|a| a..(a + w).min(n)).collect()
}

/// Edge endpoints for the family, in a fixed order for the given seed.
pub fn structure(family: Family, n: usize, m: Option<usize>, seed: u64) -> Result<Vec<(usize, usize)>, GenerationError> {
    if n == 0 {
        return Err(GenerationError::NoVertices);
    }
    let mut r = rng(seed);
    let need = |m: Option<usize>| m.ok_or(GenerationError::MissingEdgeCount(family));
    let too_many = |m: usize, max: usize| GenerationError::TooManyEdges { family, n, m, max };
    Ok(match family {
        Family::RandomGnm => {
            let m = need(m)?;
            if n < 2 && m > 0 {
                return Err(too_many(m, 0));
            }
            (0..m)
                .map(|_| {
                    let u = r.gen_range(0..n);
                    let v = (u + r.gen_range(1..n)) % n;
                    (u, v)
                })
                .collect()
        }
        Family::Grid => {
            let side = (n as f64).sqrt().round() as usize;
            if side * side != n {
                return Err(GenerationError::NotSquare(n));
            }
            let id = |i: usize, j: usize| i * side + j;
            let mut e = Vec::new();
            for i in 0..side {
                for j in 0..side {
                    if j + 1 < side {
                        e.push((id(i, j), id(i, j + 1)));
                        e.push((id(i, j + 1), id(i, j)));
                    }
                    if i + 1 < side {
                        e.push((id(i, j), id(i + 1, j)));
                        e.push((id(i + 1, j), id(i, j)));
                    }
                }
            }
            e
        }
        Family::Layered => {
            let m = need(m)?;
            let ls = layers(n);
            let slots: Vec<(usize, usize)> =
                ls.windows(2).flat_map(|w| w[0].clone().flat_map(move |u| w[1].clone().map(move |v| (u, v)))).collect();
            if m > slots.len() {
                return Err(too_many(m, slots.len()));
            }
            let mut picked: Vec<(usize, usize)> = slots.choose_multiple(&mut r, m).copied().collect();
            picked.sort_unstable();
            picked
        }
        Family::Star => (1..n).flat_map(|v| [(0, v), (v, 0)]).collect(),
        Family::Complete => (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect(),
    })
}

pub fn generate(family: Family, n: usize, m: Option<usize>, seed: u64) -> Result<EdgeList<BigRational>, GenerationError> {
    let ends = structure(family, n, m, seed)?;
    let mut r = rng(seed ^ 0x5eed);
    let edges = ends
        .into_iter()
        .map(|(u, v)| (u, v, BigRational::new(BigInt::from(r.gen_range(0..=20)), BigInt::from(r.gen_range(1..=4)))))
        .collect();
    Ok(EdgeList { n, source: 0, edges })
}

/// Integer atoms for the lex or bin kind (`Kind::Real` is treated as bin).
pub fn generate_atoms(family: Family, n: usize, m: Option<usize>, seed: u64, kind: Kind) -> Result<EdgeList<u64>, GenerationError> {
    let ends = structure(family, n, m, seed)?;
    let mut r = rng(seed ^ 0xa70b);
    let count = ends.len() as u64;
    let atoms: Vec<u64> = match kind {
        Kind::Lex => {
            let mut labels: Vec<u64> = (0..count).collect();
            labels.shuffle(&mut r);
            labels
        }
        _ => (0..count).map(|_| r.gen_range(0..=2 * count)).collect(),
    };
    let edges = ends.into_iter().zip(atoms).map(|((u, v), a)| (u, v, a)).collect();
    Ok(EdgeList { n, source: 0, edges })
}
