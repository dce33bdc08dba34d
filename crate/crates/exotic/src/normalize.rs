//! Shrinking power-of-two exponents without changing shortest paths.
//!
//! If every exponent is either at most `L` or at least `L + δ` with `δ ≥ m`,
//! the large ones can drop by `δ - (m - 1)`: `m` edges of weight at most
//! `2^L` never outweigh one edge of weight `2^{L+m-1}`. Scaling every weight
//! by the same power of two changes nothing either.

/// Exponents shifted so the smallest is 0 with every gap of `m` or more
/// between consecutive distinct exponents cut to `m - 1`. All results are
/// below `m^2`.
pub fn normalize_exponents(edges: &[(usize, usize, u64)]) -> Vec<(usize, usize, u64)> {
    let m = edges.len() as u64;
    let mut distinct: Vec<u64> = edges.iter().map(|e| e.2).collect();
    distinct.sort_unstable();
    distinct.dedup();
    let mut mapped = Vec::with_capacity(distinct.len());
    for (i, &w) in distinct.iter().enumerate() {
        let v = match i {
            0 => 0,
            _ => {
                let gap = w - distinct[i - 1];
                mapped[i - 1] + if gap >= m { m - 1 } else { gap }
            }
        };
        mapped.push(v);
    }
    let at = |w: u64| mapped[distinct.binary_search(&w).expect("every exponent is listed")];
    edges.iter().map(|&(u, v, w)| (u, v, at(w))).collect()
}
