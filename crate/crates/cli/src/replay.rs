//! Replaying an insertion script.

use sssp_minratio::{parse_script, RatioState, SearchOptions};

use crate::error::Result;

/// One line per insertion: `k lambda=<λ|inf> cycle=<edge ids|-> phi_sum=<Σφ|->`.
pub fn replay(text: &str, opts: &SearchOptions) -> Result<Vec<String>> {
    let edges = parse_script(text)?;
    let mut state = RatioState::new(0);
    let mut out = Vec::with_capacity(edges.len());
    for (k, e) in edges.into_iter().enumerate() {
        state.insert_edge(e, opts)?;
        let line = match (state.lambda(), state.cycle(), state.potential_checksum()) {
            (Some(l), Some(c), Some(s)) => {
                let ids: Vec<String> = c.iter().map(usize::to_string).collect();
                format!("{k} lambda={l} cycle={} phi_sum={s}", ids.join(","))
            }
            _ => format!("{k} lambda=inf cycle=- phi_sum=-"),
        };
        out.push(line);
    }
    Ok(out)
}
