//! Constructive results from extremal and structural graph theory, each with
//! a brute-force cross-check at small scale:
//!
//! * [`redei`]: a directed Hamiltonian path in every tournament.
//! * [`ramsey`]: Ramsey bounds, colouring verification, the pruned exhaustive
//!   search, Andrásfai graphs and the mod-3 colouring of `K_17`.
//! * [`turan`]: the Turán edge bound and its extremal multipartite graphs.
//! * [`debruijn`]: De Bruijn graphs, Martin's greedy word, Hamiltonian cycle
//!   enumeration and counting, and arc-disjoint rotation families.

pub mod debruijn;
pub mod error;
pub mod format;
pub mod graph;
pub mod ramsey;
pub mod redei;
pub mod turan;

pub use error::{Error, Result};
