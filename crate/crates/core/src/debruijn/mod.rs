//! De Bruijn graphs `B(n, m)`: vertices are the `n^m` words of length `m`
//! over `0..n`, with an arc `a_1..a_m -> b_1..b_m` whenever
//! `a_2..a_m = b_1..b_{m-1}`.
//!
//! A vertex is stored as its base-`n` value, so the successor of `v` by
//! symbol `s` is `(v mod n^(m-1)) * n + s`. An arc is stored as the base-`n`
//! value of its `m + 1` letter window.

mod cache;
mod enumerate;
mod family;
mod graph;
mod seed_search;
mod word;

pub use cache::{append_cache_record, read_cache, CacheRecord};
pub use enumerate::{
    count_hamiltonian_cycles, enumerate_hamiltonian_cycles, martin, ENUMERATION_MAX_CYCLES,
    ENUMERATION_MAX_VERTICES,
};
pub use family::{
    max_disjoint_exact, max_disjoint_upper_bound, pairwise_arc_disjoint, DisjointVerdict,
    MaxDisjoint, MAX_DISJOINT_CYCLE_LIMIT,
};
pub use graph::{de_bruijn_graph, export_flower, flower_graph};
pub use seed_search::{
    rotation_seed_search, SearchOutcome, SeedFamily, SeedSearchOptions, SeedSearchReport,
};
pub use word::{rotation_family, sigma, ArcSet, DeBruijnWord};

use std::fmt;

use crate::error::{Error, Result};

/// Alphabet used when words are written as text; `n <= 36`.
const SYMBOLS: &[u8; 36] = b"0123456789abcdefghijklmnopqrstuvwxyz";

pub(crate) fn symbol_char(s: u8) -> char {
    SYMBOLS[s as usize] as char
}

pub(crate) fn char_symbol(c: char) -> Option<u8> {
    let c = c.to_ascii_lowercase();
    SYMBOLS
        .iter()
        .position(|&b| b as char == c)
        .map(|p| p as u8)
}

/// Alphabet size `n` and word length `m` of `B(n, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DBParams {
    n: usize,
    m: usize,
}

impl DBParams {
    /// Codes for `m + 1` letter windows must fit in a `u32`.
    pub fn new(n: usize, m: usize) -> Result<Self> {
        if n < 2 || m < 1 {
            return Err(Error::InvalidParameter(format!(
                "B(n,m) needs n >= 2 and m >= 1, got ({n},{m})"
            )));
        }
        if n > SYMBOLS.len() {
            return Err(Error::InvalidParameter(format!(
                "alphabet size {n} exceeds {}",
                SYMBOLS.len()
            )));
        }
        let fits = (n as u64)
            .checked_pow(m as u32 + 1)
            .is_some_and(|a| a <= u32::MAX as u64);
        if !fits {
            return Err(Error::InvalidParameter(format!(
                "B({n},{m}) is too large to index"
            )));
        }
        Ok(DBParams { n, m })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `n^m`, also the length of a cyclic De Bruijn word.
    pub fn vertex_count(&self) -> usize {
        self.n.pow(self.m as u32)
    }

    /// `n^(m+1)`: the number of arcs, loops included.
    pub fn arc_count(&self) -> usize {
        self.n.pow(self.m as u32 + 1)
    }

    /// Length of the linear text form, `n^m + m - 1`.
    pub fn linear_len(&self) -> usize {
        self.vertex_count() + self.m - 1
    }

    pub fn successor(&self, v: usize, symbol: usize) -> usize {
        (v % self.n.pow(self.m as u32 - 1)) * self.n + symbol
    }

    /// Letters of a base-`n` code with `len` digits, most significant first.
    pub fn digits(&self, mut code: usize, len: usize) -> Vec<u8> {
        let mut out = vec![0u8; len];
        for slot in out.iter_mut().rev() {
            *slot = (code % self.n) as u8;
            code /= self.n;
        }
        out
    }

    pub fn vertex_label(&self, v: usize) -> String {
        self.digits(v, self.m)
            .into_iter()
            .map(symbol_char)
            .collect()
    }

    /// `from->to`, e.g. `12->22` for the window `122`.
    pub fn arc_label(&self, arc: usize) -> String {
        let from = arc / self.n;
        let to = arc % self.vertex_count();
        format!("{}->{}", self.vertex_label(from), self.vertex_label(to))
    }

    /// The rotation `0 -> 0`, `i -> i + 1` for `1 <= i <= n - 2`, `n - 1 -> 1`.
    pub fn sigma_symbol(&self, s: u8) -> u8 {
        match s as usize {
            0 => 0,
            x if x == self.n - 1 => 1,
            x => x as u8 + 1,
        }
    }

    /// `sigma` applied letterwise to a base-`n` code of `len` digits.
    pub fn sigma_code(&self, code: usize, len: usize) -> usize {
        self.digits(code, len)
            .into_iter()
            .fold(0, |acc, d| acc * self.n + self.sigma_symbol(d) as usize)
    }
}

impl fmt::Display for DBParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B({},{})", self.n, self.m)
    }
}
