//! Running one algorithm on one graph file and reporting its counters.

use std::time::Instant;

use clap::ValueEnum;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use sssp_core::basic::{basic_sssp, SsspResult};
use sssp_core::dense::dense_sssp;
use sssp_core::dijkstra::dijkstra;
use sssp_core::io::{lifted_graph, parse_atom_graph, parse_graph, real_distances, DistValue, EdgeList};
use sssp_core::observe::Silent;
use sssp_core::sparse::sparse_sssp;
use sssp_core::{Backend, Runtime};
use sssp_exotic::{bin_distances, bin_graph, binary_sssp, lex_bottleneck_sssp, lex_distances, lex_graph};

use crate::error::{CliError, Result};
use crate::gen::Kind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algo {
    Dijkstra,
    Basic,
    Sparse,
    Dense,
    Lex,
    Binary,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Dijkstra => "dijkstra",
            Algo::Basic => "basic",
            Algo::Sparse => "sparse",
            Algo::Dense => "dense",
            Algo::Lex => "lex",
            Algo::Binary => "binary",
        }
    }
}

/// One run's parameters and counters. `m` counts input edges; `ms` is wall time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub algo: Algo,
    pub n: usize,
    pub m: usize,
    pub t: usize,
    pub ell: Option<usize>,
    pub p: Option<usize>,
    pub work: u64,
    pub depth: u64,
    pub steps: usize,
    pub oracle_ok: bool,
    pub ms: f64,
}

impl RunReport {
    /// The report without its wall time, for determinism checks.
    pub fn timeless(&self) -> RunReport {
        RunReport { ms: 0.0, ..self.clone() }
    }
}

pub const CSV_HEADER: &str = "algo,n,m,t,ell,p,work,depth,steps,oracle_ok,ms";

pub fn csv_rows(reports: &[RunReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in reports {
        w.serialize(r)?;
    }
    if reports.is_empty() {
        w.write_record(CSV_HEADER.split(','))?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Input(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[derive(Debug, Clone)]
pub struct RunOutput {
    pub report: RunReport,
    pub distances: Vec<DistValue>,
}

fn report<V>(algo: Algo, n: usize, m: usize, t: usize, res: Option<&SsspResult<V>>, oracle_ok: bool, start: Instant) -> RunReport {
    let (ell, p, work, depth, steps, t) = match res {
        Some(r) => (r.params.ell, r.params.p, r.counters.work, r.counters.depth, r.steps, r.params.t),
        None => (None, None, 0, 0, 0, t),
    };
    RunReport { algo, n, m, t, ell, p, work, depth, steps, oracle_ok, ms: start.elapsed().as_secs_f64() * 1e3 }
}

fn mismatch(algo: Algo, kind: Kind) -> CliError {
    CliError::Input(format!("algorithm {} does not run on {kind:?} graphs", algo.name()))
}

pub fn run_real(algo: Algo, el: &EdgeList<BigRational>, t: usize, backend: Backend) -> Result<RunOutput> {
    let start = Instant::now();
    let g = lifted_graph(el)?;
    let oracle = real_distances(&dijkstra(&g));
    let mut rt = Runtime::new(backend);
    let res = match algo {
        Algo::Dijkstra => None,
        Algo::Basic => Some(basic_sssp(&mut rt, &g, t, &mut Silent)?),
        Algo::Sparse => Some(sparse_sssp(&mut rt, &g, t, &mut Silent)?),
        Algo::Dense => Some(dense_sssp(&mut rt, &g, t, &mut Silent)?),
        Algo::Lex | Algo::Binary => return Err(mismatch(algo, Kind::Real)),
    };
    let distances = res.as_ref().map_or_else(|| oracle.clone(), |r| real_distances(&r.dist));
    let ok = distances == oracle;
    Ok(RunOutput { report: report(algo, el.n, el.edges.len(), t, res.as_ref(), ok, start), distances })
}

pub fn run_atoms(algo: Algo, kind: Kind, el: &EdgeList<u64>, t: usize, backend: Backend) -> Result<RunOutput> {
    let start = Instant::now();
    let mut rt = Runtime::new(backend);
    let (res, distances, oracle) = match (kind, algo) {
        (Kind::Lex, Algo::Dijkstra | Algo::Lex) => {
            let g = lex_graph(el)?;
            let oracle = lex_distances(&g, &dijkstra(&g));
            let res = (algo == Algo::Lex).then(|| lex_bottleneck_sssp(&mut rt, &g, t, &mut Silent)).transpose()?;
            let d = res.as_ref().map_or_else(|| oracle.clone(), |r| lex_distances(&g, &r.dist));
            (res, d, oracle)
        }
        (Kind::Bin, Algo::Dijkstra | Algo::Binary) => {
            let g = bin_graph(el)?;
            let oracle = bin_distances(&g, &dijkstra(&g));
            let res = (algo == Algo::Binary).then(|| binary_sssp(&mut rt, &g, t, &mut Silent)).transpose()?;
            let d = res.as_ref().map_or_else(|| oracle.clone(), |r| bin_distances(&g, &r.dist));
            (res, d, oracle)
        }
        _ => return Err(mismatch(algo, kind)),
    };
    let ok = distances == oracle;
    Ok(RunOutput { report: report(algo, el.n, el.edges.len(), t, res.as_ref(), ok, start), distances })
}

/// Parses `text` in the format `kind` selects and runs `algo` on it.
pub fn run_text(algo: Algo, kind: Kind, text: &str, t: usize, backend: Backend) -> Result<RunOutput> {
    match kind {
        Kind::Real => run_real(algo, &parse_graph(text)?, t, backend),
        _ => run_atoms(algo, kind, &parse_atom_graph(text)?, t, backend),
    }
}
