use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sssp_cli::{csv_rows, generate, generate_atoms, replay, run_real, run_text, Algo, CliError, Family, Kind, RunReport};
use sssp_core::io::{compare_distances, parse_distances, write_atom_graph, write_distances, write_graph, Verdict};
use sssp_core::Backend;
use sssp_minratio::{Comparator, SearchOptions};

#[derive(Parser)]
#[command(name = "sssp", about = "Parallel SSSP toolkit harness")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Seq,
    Par,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Backend {
        match b {
            BackendArg::Seq => Backend::Sequential,
            BackendArg::Par => Backend::Parallel,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ComparatorArg {
    Basic,
    Dense,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a seeded graph.
    Generate {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "real")]
        kind: Kind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an algorithm on a graph file and print its report.
    Run {
        graph: PathBuf,
        #[arg(long)]
        algo: Algo,
        #[arg(long, default_value_t = 2)]
        t: usize,
        #[arg(long, value_enum, default_value = "seq")]
        backend: BackendArg,
        #[arg(long, value_enum, default_value = "real")]
        kind: Kind,
        /// Distances file to write.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Compare two distances files: exit 0 if identical, 1 if a vertex differs, 2 on a count mismatch.
    Verify { a: PathBuf, b: PathBuf },
    /// Replay a min-ratio insertion script.
    RatioReplay {
        script: PathBuf,
        #[arg(long, value_enum, default_value = "basic")]
        comparator: ComparatorArg,
        #[arg(long, default_value_t = 2)]
        t: usize,
        #[arg(long, value_enum, default_value = "seq")]
        backend: BackendArg,
    },
    /// Run one algorithm for each t on a generated graph and emit CSV.
    BenchSweep {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        algo: Algo,
        #[arg(long, value_delimiter = ',', default_value = "1,2,4,8")]
        ts: Vec<usize>,
        #[arg(long, value_enum, default_value = "seq")]
        backend: BackendArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    match dispatch(Cli::parse().cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<ExitCode, CliError> {
    match cmd {
        Cmd::Generate { family, n, m, seed, kind, out } => {
            let text = match kind {
                Kind::Real => write_graph(&generate(family, n, m, seed)?),
                _ => write_atom_graph(&generate_atoms(family, n, m, seed, kind)?),
            };
            emit(out.as_ref(), &text)?;
        }
        Cmd::Run { graph, algo, t, backend, kind, out, format } => {
            let text = std::fs::read_to_string(&graph)?;
            let res = run_text(algo, kind, &text, t, backend.into())?;
            if let Some(path) = out {
                std::fs::write(path, write_distances(&res.distances))?;
            }
            match format {
                Format::Json => println!("{}", serde_json::to_string(&res.report).expect("reports serialize")),
                Format::Csv => print!("{}", csv_rows(&[res.report])?),
            }
        }
        Cmd::Verify { a, b } => {
            let da = parse_distances(&std::fs::read_to_string(&a)?)?;
            let db = parse_distances(&std::fs::read_to_string(&b)?)?;
            return Ok(match compare_distances(&da, &db) {
                Verdict::Identical => ExitCode::SUCCESS,
                Verdict::Differs(v) => {
                    println!("distances differ at v={v}");
                    ExitCode::from(1)
                }
                Verdict::CountMismatch(x, y) => {
                    println!("vertex counts differ: {x} vs {y}");
                    ExitCode::from(2)
                }
            });
        }
        Cmd::RatioReplay { script, comparator, t, backend } => {
            let comparator = match comparator {
                ComparatorArg::Basic => Comparator::Basic,
                ComparatorArg::Dense => Comparator::Dense,
            };
            let opts = SearchOptions { comparator, t, backend: backend.into() };
            for line in replay(&std::fs::read_to_string(&script)?, &opts)? {
                println!("{line}");
            }
        }
        Cmd::BenchSweep { family, n, m, seed, algo, ts, backend, out } => {
            let g = generate(family, n, m, seed)?;
            let reports: Vec<RunReport> = ts.iter().map(|&t| run_real(algo, &g, t, backend.into()).map(|r| r.report)).collect::<Result<_, _>>()?;
            emit(out.as_ref(), &csv_rows(&reports)?)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
