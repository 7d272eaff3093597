//! Turán's edge bound for `K_{k+1}`-free graphs and the balanced complete
//! multipartite graphs that attain it.

use crate::error::{Error, Result};
use crate::graph::{complete_multipartite, SimpleGraph};

/// `n = h*k + r` with `0 <= r < k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TuranParams {
    pub n: u64,
    pub k: u64,
    pub h: u64,
    pub r: u64,
}

impl TuranParams {
    pub fn new(n: u64, k: u64) -> Result<Self> {
        if k < 1 || k > n {
            return Err(Error::InvalidParameter(format!(
                "Turán parameters need 1 <= k <= n, got n={n}, k={k}"
            )));
        }
        Ok(TuranParams {
            n,
            k,
            h: n / k,
            r: n % k,
        })
    }

    /// Part sizes of the extremal graph, larger parts first.
    pub fn part_sizes(&self) -> Vec<usize> {
        let (h, r, k) = (self.h as usize, self.r as usize, self.k as usize);
        let mut parts = vec![h + 1; r];
        parts.resize(k, h);
        parts
    }
}

/// `(n^2 - r^2)(k-1)/(2k) + r(r-1)/2`, evaluated exactly.
pub fn turan_max_edges(n: u64, k: u64) -> Result<u64> {
    let TuranParams { n, k, r, .. } = TuranParams::new(n, k)?;
    let overflow = || Error::InvalidParameter(format!("n={n} too large for exact evaluation"));
    let numerator = (n * n - r * r).checked_mul(k - 1).ok_or_else(overflow)?;
    let denominator = 2 * k;
    assert_eq!(
        numerator % denominator,
        0,
        "Turán bound must be integral for n={n}, k={k}"
    );
    Ok(numerator / denominator + r * r.saturating_sub(1) / 2)
}

/// The complete `k`-partite graph on `n` vertices with parts as equal as possible.
pub fn turan_extremal_graph(n: u64, k: u64) -> Result<SimpleGraph> {
    let params = TuranParams::new(n, k)?;
    complete_multipartite(&params.part_sizes())
}
