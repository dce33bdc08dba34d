use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use sssp_cli::*;
use sssp_core::graph::split_constant_degree;
use sssp_core::io::{lifted_graph, parse_distances, parse_graph};
use sssp_core::Backend;

fn sssp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sssp")).args(args).output().expect("binary runs")
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name).display().to_string()
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn generate_is_deterministic() {
    let a = sssp(&["generate", "--family", "random-gnm", "--n", "10", "--m", "20", "--seed", "1"]);
    let b = sssp(&["generate", "--family", "random-gnm", "--n", "10", "--m", "20", "--seed", "1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = sssp(&["generate", "--family", "random-gnm", "--n", "10", "--m", "20", "--seed", "2"]);
    assert_ne!(a.stdout, c.stdout);
    assert_eq!(parse_graph(&stdout(&a)).unwrap().edges.len(), 20);
}

#[test]
fn family_shapes() {
    assert_eq!(generate(Family::Complete, 5, None, 0).unwrap().edges.len(), 20);
    assert_eq!(generate(Family::Grid, 9, None, 0).unwrap().edges.len(), 24);
    assert_eq!(generate(Family::Layered, 16, Some(30), 3).unwrap().edges.len(), 30);
    let star = generate(Family::Star, 40, None, 0).unwrap();
    let (split, _) = split_constant_degree(&lifted_graph(&star).unwrap());
    assert!(split.n() >= 40 && split.n() <= 6 * 40, "{}", split.n());
    for kind in [Kind::Lex, Kind::Bin] {
        let g = generate_atoms(Family::RandomGnm, 8, Some(12), 5, kind).unwrap();
        assert_eq!(g.edges.len(), 12);
    }
    let mut labels: Vec<u64> = generate_atoms(Family::Complete, 4, None, 1, Kind::Lex).unwrap().edges.iter().map(|e| e.2).collect();
    labels.sort_unstable();
    assert_eq!(labels, (0..12).collect::<Vec<_>>());
}

#[test]
fn generation_errors() {
    assert_eq!(generate(Family::Grid, 10, None, 0).unwrap_err(), GenerationError::NotSquare(10));
    assert_eq!(generate(Family::Star, 0, None, 0).unwrap_err(), GenerationError::NoVertices);
    assert_eq!(generate(Family::RandomGnm, 5, None, 0).unwrap_err(), GenerationError::MissingEdgeCount(Family::RandomGnm));
    assert!(matches!(generate(Family::Layered, 9, Some(100), 0), Err(GenerationError::TooManyEdges { max: 18, .. })));
    assert!(matches!(generate(Family::RandomGnm, 1, Some(1), 0), Err(GenerationError::TooManyEdges { .. })));
    let o = sssp(&["generate", "--family", "grid", "--n", "10"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("square"));
}

#[test]
fn run_basic_on_g_star() {
    let out = scratch("g_star_basic.dist");
    let o = sssp(&["run", "--algo", "basic", "--t", "2", &fixture("g_star.graph"), "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let report: RunReport = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(report.steps, 2);
    assert!(report.oracle_ok);
    assert_eq!((report.n, report.m, report.t), (4, 4, 2));
    let v = sssp(&["verify", out.to_str().unwrap(), &fixture("g_star.dist")]);
    assert_eq!(v.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&out).unwrap(), std::fs::read_to_string(fixture("g_star.dist")).unwrap());
}

#[test]
fn dense_matches_dijkstra_on_a_complete_graph() {
    let g = generate(Family::Complete, 30, None, 4).unwrap();
    let dense = run_real(Algo::Dense, &g, 2, Backend::Sequential).unwrap();
    let dijk = run_real(Algo::Dijkstra, &g, 2, Backend::Sequential).unwrap();
    assert!(dense.report.oracle_ok);
    assert_eq!(dense.distances, dijk.distances);
    assert!(dense.report.p.is_some());
}

#[test]
fn every_algorithm_on_every_family() {
    let cases = [(Family::RandomGnm, 20, Some(50)), (Family::Grid, 16, None), (Family::Layered, 20, Some(40)), (Family::Star, 12, None), (Family::Complete, 9, None)];
    for (family, n, m) in cases {
        let g = generate(family, n, m, 9).unwrap();
        for algo in [Algo::Dijkstra, Algo::Basic, Algo::Sparse, Algo::Dense] {
            for t in [1, 3] {
                let r = run_real(algo, &g, t, Backend::Sequential).unwrap();
                assert!(r.report.oracle_ok, "{family:?} {algo:?} t={t}");
            }
        }
        for (kind, algo) in [(Kind::Lex, Algo::Lex), (Kind::Bin, Algo::Binary)] {
            let g = generate_atoms(family, n, m, 9, kind).unwrap();
            let r = run_atoms(algo, kind, &g, 2, Backend::Sequential).unwrap();
            assert!(r.report.oracle_ok, "{family:?} {algo:?}");
            assert!(matches!(run_atoms(Algo::Basic, kind, &g, 2, Backend::Sequential), Err(CliError::Input(_))));
        }
    }
}

#[test]
fn dijkstra_on_an_edgeless_graph() {
    let path = scratch("edgeless.graph");
    std::fs::write(&path, "3 0 1\n").unwrap();
    let out = scratch("edgeless.dist");
    let o = sssp(&["run", "--algo", "dijkstra", path.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    let d = parse_distances(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(d.iter().map(ToString::to_string).collect::<Vec<_>>(), ["inf", "0 1", "inf"]);
}

#[test]
fn exotic_runs_through_the_binary() {
    let g = scratch("lex.graph");
    let gen = sssp(&["generate", "--family", "random-gnm", "--n", "12", "--m", "30", "--seed", "3", "--kind", "lex", "--out", g.to_str().unwrap()]);
    assert!(gen.status.success());
    let (a, b) = (scratch("lex_a.dist"), scratch("lex_b.dist"));
    for (algo, out) in [("lex", &a), ("dijkstra", &b)] {
        let o = sssp(&["run", "--algo", algo, "--kind", "lex", g.to_str().unwrap(), "--out", out.to_str().unwrap()]);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    }
    assert_eq!(sssp(&["verify", a.to_str().unwrap(), b.to_str().unwrap()]).status.code(), Some(0));
    let wrong = sssp(&["run", "--algo", "basic", "--kind", "lex", g.to_str().unwrap()]);
    assert_eq!(wrong.status.code(), Some(3));
}

#[test]
fn verify_exit_codes() {
    let a = scratch("va.dist");
    let b = scratch("vb.dist");
    let c = scratch("vc.dist");
    std::fs::write(&a, "5\n0 0 1\n1 1 1\n2 2 1\n3 3 1\n4 inf\n").unwrap();
    std::fs::write(&b, "5\n0 0 1\n1 1 1\n2 2 1\n3 7 2\n4 inf\n").unwrap();
    std::fs::write(&c, "4\n0 0 1\n1 1 1\n2 2 1\n3 3 1\n").unwrap();
    let (a, b, c) = (a.to_str().unwrap(), b.to_str().unwrap(), c.to_str().unwrap());
    assert_eq!(sssp(&["verify", a, a]).status.code(), Some(0));
    let o = sssp(&["verify", a, b]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("v=3"));
    assert_eq!(sssp(&["verify", a, c]).status.code(), Some(2));
}

#[test]
fn csv_reports() {
    let o = sssp(&["run", "--algo", "sparse", "--format", "csv", &fixture("g_star.graph")]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some(CSV_HEADER));
    assert!(lines.next().unwrap().starts_with("sparse,4,4,"));
    let sweep = sssp(&["bench-sweep", "--family", "random-gnm", "--n", "24", "--m", "60", "--seed", "2", "--algo", "basic", "--ts", "1,2,4"]);
    assert!(sweep.status.success());
    let text = stdout(&sweep);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[0], CSV_HEADER);
    assert!(rows[1..].iter().all(|r| r.starts_with("basic,24,60,") && r.contains(",true,")));
    assert_eq!(csv_rows(&[]).unwrap().trim(), CSV_HEADER);
}

#[test]
fn ratio_replay() {
    let o = sssp(&["ratio-replay", &fixture("two_cycle.ratio")]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "0 lambda=inf cycle=- phi_sum=-");
    assert!(lines[1].starts_with("1 lambda=3/2 cycle=1,0 "), "{}", lines[1]);
    let dense = sssp(&["ratio-replay", "--comparator", "dense", &fixture("two_cycle.ratio")]);
    assert_eq!(dense.stdout, o.stdout);
    let bad = scratch("bad.ratio");
    std::fs::write(&bad, "0 1 2 1 0 1\n").unwrap();
    assert_eq!(sssp(&["ratio-replay", bad.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn parallel_backend_reports_match() {
    let g = generate(Family::RandomGnm, 40, Some(160), 11).unwrap();
    for algo in [Algo::Basic, Algo::Sparse, Algo::Dense] {
        let s = run_real(algo, &g, 3, Backend::Sequential).unwrap();
        let p = run_real(algo, &g, 3, Backend::Parallel).unwrap();
        assert_eq!(s.report.timeless(), p.report.timeless());
        assert_eq!(s.distances, p.distances);
    }
}
