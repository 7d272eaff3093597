use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::{DBParams, DeBruijnWord};
use crate::error::{Error, Result};

/// Greedy De Bruijn word: start from `0^m`, always append the largest symbol
/// whose new window has not appeared yet, stop when none is left.
pub fn martin(params: DBParams) -> DeBruijnWord {
    let (n, m) = (params.n(), params.m());
    let vertices = params.vertex_count();
    let prefix_mod = vertices / n;
    let mut seen = vec![false; vertices];
    seen[0] = true;
    let mut linear = vec![0u8; m];
    let mut window = 0usize;
    'extend: loop {
        for s in (0..n).rev() {
            let next = (window % prefix_mod) * n + s;
            if !seen[next] {
                seen[next] = true;
                window = next;
                linear.push(s as u8);
                continue 'extend;
            }
        }
        break;
    }
    debug_assert_eq!(linear.len(), params.linear_len());
    linear.truncate(vertices);
    DeBruijnWord::from_cyclic(params, linear).expect("greedy construction yields a De Bruijn word")
}

/// `(n!)^(n^(m-1)) / n^m`, exactly.
pub fn count_hamiltonian_cycles(params: DBParams) -> BigUint {
    let (n, m) = (params.n(), params.m());
    let exponent = (n as u64).pow(m as u32 - 1);
    let exponent = u32::try_from(exponent).expect("DBParams keeps n^(m+1) within u32");
    let factorial: BigUint = (1..=n as u64).product();
    let numerator = factorial.pow(exponent);
    let denominator = BigUint::from(n).pow(m as u32);
    debug_assert!((&numerator % &denominator) == BigUint::ZERO);
    numerator / denominator
}

/// Largest `n^m` accepted by [`enumerate_hamiltonian_cycles`].
pub const ENUMERATION_MAX_VERTICES: usize = 27;
/// Largest cycle count accepted by [`enumerate_hamiltonian_cycles`].
pub const ENUMERATION_MAX_CYCLES: u64 = 1_000_000;

/// Every directed Hamiltonian cycle of `B(n, m)`, canonical and sorted.
pub fn enumerate_hamiltonian_cycles(params: DBParams) -> Result<Vec<DeBruijnWord>> {
    let vertices = params.vertex_count();
    if vertices > ENUMERATION_MAX_VERTICES {
        return Err(Error::EnumerationLimit(format!(
            "{params} has {vertices} vertices, limit is {ENUMERATION_MAX_VERTICES}"
        )));
    }
    let expected = count_hamiltonian_cycles(params);
    if expected > BigUint::from(ENUMERATION_MAX_CYCLES) {
        return Err(Error::EnumerationLimit(format!(
            "{params} has {expected} Hamiltonian cycles, limit is {ENUMERATION_MAX_CYCLES}"
        )));
    }
    let mut walker = CycleWalker::new(params);
    let mut out = Vec::with_capacity(expected.to_usize().unwrap_or(0));
    walker.walk(0, 1, &mut |letters| {
        out.push(
            DeBruijnWord::from_cyclic(params, letters.to_vec())
                .expect("walker only closes Hamiltonian cycles"),
        )
    });
    // Ascending symbols at every step already produce lexicographic order.
    debug_assert!(out.windows(2).all(|w| w[0] < w[1]));
    Ok(out)
}

/// Depth-first walk over simple paths from `0^m`, reporting closed Hamiltonian cycles.
struct CycleWalker {
    n: usize,
    vertices: usize,
    prefix_mod: usize,
    visited: Vec<bool>,
    letters: Vec<u8>,
    /// Per vertex, in-neighbours (loops excluded) that have not been left yet.
    free_in: Vec<u8>,
}

impl CycleWalker {
    fn new(params: DBParams) -> Self {
        let (n, m) = (params.n(), params.m());
        let vertices = params.vertex_count();
        let mut visited = vec![false; vertices];
        visited[0] = true;
        let mut free_in = vec![n as u8; vertices];
        for s in 0..n {
            let loop_vertex = (0..m).fold(0, |acc, _| acc * n + s);
            free_in[loop_vertex] -= 1;
        }
        let mut letters = Vec::with_capacity(vertices + m);
        letters.resize(m, 0);
        CycleWalker {
            n,
            vertices,
            prefix_mod: vertices / n,
            visited,
            letters,
            free_in,
        }
    }

    fn walk(&mut self, v: usize, depth: usize, emit: &mut dyn FnMut(&[u8])) {
        let base = (v % self.prefix_mod) * self.n;
        if depth == self.vertices {
            // The closing arc to 0^m appends a 0, which is already the first letter.
            if base == 0 {
                emit(&self.letters[..self.vertices]);
            }
            return;
        }
        // Leaving v closes it off as a way into its other successors.
        for w in base..base + self.n {
            if w != v {
                self.free_in[w] -= 1;
            }
        }
        // 0^m must stay enterable, and an unvisited successor with no way in
        // left has to be taken now.
        let mut forced = None;
        let mut dead = 0;
        for w in base..base + self.n {
            if w != v && !self.visited[w] && self.free_in[w] == 0 {
                dead += 1;
                forced = Some(w);
            }
        }
        if self.free_in[0] > 0 && dead <= 1 {
            for w in base..base + self.n {
                if w == v || self.visited[w] || forced.is_some_and(|f| f != w) {
                    continue;
                }
                self.visited[w] = true;
                self.letters.push((w - base) as u8);
                self.walk(w, depth + 1, emit);
                self.letters.pop();
                self.visited[w] = false;
            }
        }
        for w in base..base + self.n {
            if w != v {
                self.free_in[w] += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, m: usize) -> DBParams {
        DBParams::new(n, m).unwrap()
    }

    #[test]
    fn martin_examples() {
        assert_eq!(martin(p(3, 2)).encode(), "0022120110");
        assert_eq!(martin(p(4, 2)).encode(), "00332313022120110");
        assert_eq!(martin(p(2, 3)).encode(), "0001110100");
        assert_eq!(martin(p(2, 1)).encode(), "01");
    }

    #[test]
    fn closed_form_counts() {
        assert_eq!(count_hamiltonian_cycles(p(2, 3)), BigUint::from(2u32));
        assert_eq!(count_hamiltonian_cycles(p(3, 2)), BigUint::from(24u32));
        assert_eq!(count_hamiltonian_cycles(p(3, 3)), BigUint::from(373248u32));
        assert_eq!(count_hamiltonian_cycles(p(2, 1)), BigUint::from(1u32));
        // 6^27 / 81 = 2^27 * 3^23
        let b34 = BigUint::from(2u32).pow(27) * BigUint::from(3u32).pow(23);
        assert_eq!(count_hamiltonian_cycles(p(3, 4)), b34);
    }

    #[test]
    fn enumerates_b23() {
        let words: Vec<String> = enumerate_hamiltonian_cycles(p(2, 3))
            .unwrap()
            .iter()
            .map(|w| w.encode())
            .collect();
        assert_eq!(words, ["0001011100", "0001110100"]);
    }

    #[test]
    fn enumeration_guard() {
        assert!(matches!(
            enumerate_hamiltonian_cycles(p(2, 5)),
            Err(Error::EnumerationLimit(_))
        ));
        assert!(matches!(
            enumerate_hamiltonian_cycles(p(5, 2)),
            Err(Error::EnumerationLimit(_))
        ));
    }
}
