use fixedbitset::FixedBitSet;

use super::{enumerate_hamiltonian_cycles, ArcSet, DBParams, DeBruijnWord};
use crate::error::{Error, Result};
use crate::graph::{max_clique, SimpleGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DisjointVerdict {
    Disjoint,
    /// The first pair `(first, second)` (indices into the input, `first < second`)
    /// that shares arcs, with every shared arc.
    Conflict {
        first: usize,
        second: usize,
        shared: ArcSet,
    },
}

impl DisjointVerdict {
    pub fn is_disjoint(&self) -> bool {
        matches!(self, DisjointVerdict::Disjoint)
    }
}

pub fn pairwise_arc_disjoint(words: &[DeBruijnWord]) -> Result<DisjointVerdict> {
    let Some(first) = words.first() else {
        return Ok(DisjointVerdict::Disjoint);
    };
    if words.iter().any(|w| w.params() != first.params()) {
        return Err(Error::MixedParameters);
    }
    let arcs: Vec<ArcSet> = words.iter().map(DeBruijnWord::arcs).collect();
    for i in 0..arcs.len() {
        for j in i + 1..arcs.len() {
            let shared = arcs[i].intersection(&arcs[j]);
            if !shared.is_empty() {
                return Ok(DisjointVerdict::Conflict {
                    first: i,
                    second: j,
                    shared,
                });
            }
        }
    }
    Ok(DisjointVerdict::Disjoint)
}

/// At most `n - 1` Hamiltonian cycles can be pairwise arc-disjoint: `0^m` has
/// `n` out-arcs and one of them is a loop.
pub fn max_disjoint_upper_bound(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("alphabet size {n} < 2")));
    }
    Ok(n - 1)
}

/// Largest number of enumerated cycles [`max_disjoint_exact`] will pair up.
pub const MAX_DISJOINT_CYCLE_LIMIT: usize = 25_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaxDisjoint {
    pub size: usize,
    pub witness: Vec<DeBruijnWord>,
}

/// Largest pairwise arc-disjoint set of Hamiltonian cycles of `B(n, m)`, as a
/// maximum clique of the "shares no arc" graph over all cycles.
pub fn max_disjoint_exact(params: DBParams) -> Result<MaxDisjoint> {
    let cycles = enumerate_hamiltonian_cycles(params)?;
    if cycles.len() > MAX_DISJOINT_CYCLE_LIMIT {
        return Err(Error::EnumerationLimit(format!(
            "{params} has {} cycles, max_disjoint_exact handles at most {MAX_DISJOINT_CYCLE_LIMIT}",
            cycles.len()
        )));
    }
    let arc_sets: Vec<FixedBitSet> = cycles
        .iter()
        .map(|w| {
            let mut set = FixedBitSet::with_capacity(params.arc_count());
            set.extend(w.arcs().codes());
            set
        })
        .collect();
    let compatible =
        SimpleGraph::from_fn(cycles.len(), |i, j| arc_sets[i].is_disjoint(&arc_sets[j]));
    let best = max_clique(&compatible, Some(max_disjoint_upper_bound(params.n())?));
    Ok(MaxDisjoint {
        size: best.len(),
        witness: best.into_iter().map(|i| cycles[i].clone()).collect(),
    })
}
