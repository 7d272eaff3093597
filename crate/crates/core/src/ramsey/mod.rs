//! Ramsey numbers: bound calculators, colouring verification, the pruned
//! exhaustive search, and the extremal constructions.

mod bounds;
mod constructions;
mod search;
mod table;

pub use bounds::{
    binomial, collect_bounds, diagonal_lower_bound, erdos_szekeres_bound,
    erdos_triangle_multicolor_bound, multicolor_multinomial_bound, recurrence_upper_bound,
    BoundSource, RamseyBound,
};
pub use constructions::{andrasfai_graph, k17_mod3_coloring, pentagon_coloring, K17_PALETTE};
pub use search::{
    exhaustive_ramsey_check, verify_coloring, ColoringVerdict, RamseyCheck, SEARCH_EDGE_LIMIT,
};
pub use table::{known_value, known_values, KnownValue};

use crate::error::{Error, Result};

/// Target clique sizes `k_1..k_c`, one per colour.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MulticolorSpec(Vec<usize>);

impl MulticolorSpec {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() {
            return Err(Error::InvalidParameter(
                "spec needs at least one colour".into(),
            ));
        }
        if sizes.contains(&0) {
            return Err(Error::InvalidParameter(
                "clique sizes must be positive".into(),
            ));
        }
        Ok(MulticolorSpec(sizes))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn color_count(&self) -> usize {
        self.0.len()
    }
}

impl std::str::FromStr for MulticolorSpec {
    type Err = Error;

    /// Comma-separated sizes, e.g. `3,3,3`.
    fn from_str(s: &str) -> Result<Self> {
        let sizes = s
            .split(',')
            .map(|t| {
                t.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidParameter(format!("bad clique size {t:?} in spec {s:?}"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        MulticolorSpec::new(sizes)
    }
}
