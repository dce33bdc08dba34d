//! Text formats for graphs and distance tables.
//!
//! Graphs: a header `n m s`, then one edge per line. Real weights are written
//! `tail head numerator denominator`, integer atoms `tail head atom`.
//! Distances: a line holding `n`, then `v numerator denominator`, `v inf`, or
//! `v token` for weights with a canonical textual form.
//! Blank lines and lines starting with `#` are skipped everywhere.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::weights::{Lifted, LiftedWeight, RealKind};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeList<W> {
    pub n: usize,
    pub source: usize,
    pub edges: Vec<(usize, usize, W)>,
}

fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(i, l)| (i, l.split_whitespace().collect()))
}

fn field<T: FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse().map_err(|_| Error::Parse { line, msg: format!("bad {what} `{tok}`") })
}

fn arity(line: usize, toks: &[&str], want: usize) -> Result<()> {
    if toks.len() != want {
        return Err(Error::Parse { line, msg: format!("expected {want} fields, found {}", toks.len()) });
    }
    Ok(())
}

fn parse_edges<W>(text: &str, width: usize, mut weight: impl FnMut(usize, &[&str]) -> Result<W>) -> Result<EdgeList<W>> {
    let mut it = lines(text);
    let (hl, header) = it.next().ok_or(Error::Parse { line: 0, msg: "missing header".into() })?;
    arity(hl, &header, 3)?;
    let n: usize = field(hl, header[0], "vertex count")?;
    let m: usize = field(hl, header[1], "edge count")?;
    let source: usize = field(hl, header[2], "source")?;
    if source >= n {
        return Err(Error::Parse { line: hl, msg: format!("source {source} out of range for n = {n}") });
    }
    let mut edges = Vec::with_capacity(m.min(1 << 20));
    let mut last = hl;
    for (line, toks) in it {
        last = line;
        arity(line, &toks, 2 + width)?;
        let u: usize = field(line, toks[0], "tail")?;
        let v: usize = field(line, toks[1], "head")?;
        if u >= n || v >= n {
            return Err(Error::Parse { line, msg: format!("edge {u}->{v} out of range for n = {n}") });
        }
        edges.push((u, v, weight(line, &toks[2..])?));
        if edges.len() > m {
            return Err(Error::Parse { line, msg: format!("more than the declared {m} edges") });
        }
    }
    if edges.len() != m {
        return Err(Error::Parse { line: last, msg: format!("declared {m} edges, found {}", edges.len()) });
    }
    Ok(EdgeList { n, source, edges })
}

fn rational_fields(line: usize, toks: &[&str]) -> Result<BigRational> {
    let num: BigInt = field(line, toks[0], "numerator")?;
    let den: BigInt = field(line, toks[1], "denominator")?;
    if den.is_zero() {
        return Err(Error::Parse { line, msg: "zero denominator".into() });
    }
    Ok(BigRational::new(num, den))
}

pub fn parse_graph(text: &str) -> Result<EdgeList<BigRational>> {
    parse_edges(text, 2, |line, toks| {
        let w = rational_fields(line, toks)?;
        if w.is_negative() {
            return Err(Error::Parse { line, msg: format!("negative weight {w}") });
        }
        Ok(w)
    })
}

pub fn parse_atom_graph(text: &str) -> Result<EdgeList<u64>> {
    parse_edges(text, 1, |line, toks| field(line, toks[0], "atom"))
}

pub fn write_graph(g: &EdgeList<BigRational>) -> String {
    let mut out = format!("{} {} {}\n", g.n, g.edges.len(), g.source);
    for (u, v, w) in &g.edges {
        let _ = writeln!(out, "{u} {v} {} {}", w.numer(), w.denom());
    }
    out
}

pub fn write_atom_graph(g: &EdgeList<u64>) -> String {
    let mut out = format!("{} {} {}\n", g.n, g.edges.len(), g.source);
    for (u, v, a) in &g.edges {
        let _ = writeln!(out, "{u} {v} {a}");
    }
    out
}

/// The lifted graph the algorithms run on.
pub fn lifted_graph(g: &EdgeList<BigRational>) -> Result<Digraph<Lifted<RealKind>>> {
    let k = Lifted(RealKind);
    let atoms: Vec<_> = g.edges.iter().map(|(u, v, w)| (*u, *v, k.atom(*u, *v, w.clone()))).collect();
    Digraph::new(k, g.n, g.source, atoms)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DistValue {
    Inf,
    Rational(BigRational),
    Token(String),
}

impl std::fmt::Display for DistValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DistValue::Inf => write!(f, "inf"),
            DistValue::Rational(r) => write!(f, "{} {}", r.numer(), r.denom()),
            DistValue::Token(s) => write!(f, "{s}"),
        }
    }
}

pub fn real_distances(dist: &[Option<LiftedWeight>]) -> Vec<DistValue> {
    dist.iter().map(|d| d.as_ref().map_or(DistValue::Inf, |d| DistValue::Rational(d.base.clone()))).collect()
}

pub fn write_distances(d: &[DistValue]) -> String {
    let mut out = format!("{}\n", d.len());
    for (v, x) in d.iter().enumerate() {
        let _ = writeln!(out, "{v} {x}");
    }
    out
}

pub fn parse_distances(text: &str) -> Result<Vec<DistValue>> {
    let mut it = lines(text);
    let (hl, header) = it.next().ok_or(Error::Parse { line: 0, msg: "missing vertex count".into() })?;
    arity(hl, &header, 1)?;
    let n: usize = field(hl, header[0], "vertex count")?;
    let mut out = Vec::with_capacity(n.min(1 << 20));
    let mut last = hl;
    for (line, toks) in it {
        last = line;
        let v: usize = field(line, toks[0], "vertex")?;
        if v != out.len() {
            return Err(Error::Parse { line, msg: format!("expected vertex {}, found {v}", out.len()) });
        }
        if out.len() == n {
            return Err(Error::Parse { line, msg: format!("more than the declared {n} vertices") });
        }
        let value = match toks.len() {
            2 if toks[1] == "inf" => DistValue::Inf,
            2 => DistValue::Token(toks[1].to_string()),
            3 => DistValue::Rational(rational_fields(line, &toks[1..])?),
            k => return Err(Error::Parse { line, msg: format!("expected 2 or 3 fields, found {k}") }),
        };
        out.push(value);
    }
    if out.len() != n {
        return Err(Error::Parse { line: last, msg: format!("declared {n} vertices, found {}", out.len()) });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Identical,
    /// First vertex whose distances differ.
    Differs(usize),
    CountMismatch(usize, usize),
}

pub fn compare_distances(a: &[DistValue], b: &[DistValue]) -> Verdict {
    if a.len() != b.len() {
        return Verdict::CountMismatch(a.len(), b.len());
    }
    match a.iter().zip(b).position(|(x, y)| x != y) {
        Some(v) => Verdict::Differs(v),
        None => Verdict::Identical,
    }
}
