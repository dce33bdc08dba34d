//! Insertion scripts: one `p q c_num c_den t_num t_den` line per edge.
//! Blank lines and `#` comments are ignored.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{RatioError, Result};
use crate::state::RatioEdge;

pub fn parse_script(text: &str) -> Result<Vec<RatioEdge>> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let err = |msg: String| RatioError::Parse { line, msg };
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 6 {
            return Err(err(format!("expected 6 fields, found {}", fields.len())));
        }
        let vertex = |s: &str| s.parse::<usize>().map_err(|_| err(format!("bad vertex {s:?}")));
        let int = |s: &str| s.parse::<BigInt>().map_err(|_| err(format!("bad integer {s:?}")));
        let frac = |num: &str, den: &str| -> Result<BigRational> {
            let den = int(den)?;
            if den.is_zero() {
                return Err(err("zero denominator".into()));
            }
            Ok(BigRational::new(int(num)?, den))
        };
        let (p, q) = (vertex(fields[0])?, vertex(fields[1])?);
        let edge = RatioEdge::new(p, q, frac(fields[2], fields[3])?, frac(fields[4], fields[5])?).map_err(|e| err(e.to_string()))?;
        out.push(edge);
    }
    Ok(out)
}

pub fn write_script(edges: &[RatioEdge]) -> String {
    edges
        .iter()
        .map(|e| format!("{} {} {} {} {} {}\n", e.tail, e.head, e.cost.numer(), e.cost.denom(), e.time.numer(), e.time.denom()))
        .collect()
}
