//! Directed Hamiltonian paths in tournaments.
//!
//! The path is grown by insertion. Given a path `a, ..., b` and a new vertex
//! `r`: if `r -> a` it is prepended, otherwise `a -> r`, and if `b -> r` it is
//! appended, otherwise `r -> b`. In the remaining case some consecutive pair
//! `p, q` satisfies `p -> r -> q` (the first arc into `r` is followed by an
//! arc out of `r`), and `r` goes between them.

use crate::error::{Error, Result};
use crate::graph::{Digraph, Tournament};

/// A sequence of distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedPath(Vec<usize>);

impl DirectedPath {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.windows(2).map(|w| (w[0], w[1]))
    }

    /// True iff vertices are distinct and every consecutive pair is an arc of `host`.
    pub fn is_path_in(&self, host: &Digraph) -> bool {
        let mut seen = vec![false; host.vertex_count()];
        for &v in &self.0 {
            if v >= seen.len() || std::mem::replace(&mut seen[v], true) {
                return false;
            }
        }
        self.arcs().all(|(u, v)| host.has_arc(u, v))
    }

    /// A path that also visits every vertex of `host`.
    pub fn is_hamiltonian_in(&self, host: &Digraph) -> bool {
        self.len() == host.vertex_count() && self.is_path_in(host)
    }
}

/// Hamiltonian path of `t`, inserting vertices in ascending label order.
pub fn redei_hamiltonian_path(t: &Tournament) -> DirectedPath {
    redei_hamiltonian_path_counted(t).0
}

/// As [`redei_hamiltonian_path`], also returning the number of arc queries made.
pub fn redei_hamiltonian_path_counted(t: &Tournament) -> (DirectedPath, usize) {
    let mut queries = 0usize;
    let mut beats = |u: usize, v: usize| {
        queries += 1;
        t.beats(u, v)
    };
    let n = t.vertex_count();
    let mut path: Vec<usize> = Vec::with_capacity(n);
    for r in 0..n {
        let Some(&head) = path.first() else {
            path.push(r);
            continue;
        };
        if beats(r, head) {
            path.insert(0, r);
            continue;
        }
        let tail = *path.last().expect("non-empty");
        if beats(tail, r) {
            path.push(r);
            continue;
        }
        // head -> r and r -> tail, so the arcs along the path must switch
        // direction somewhere.
        let slot = (1..path.len())
            .find(|&i| beats(r, path[i]))
            .expect("r beats the tail");
        path.insert(slot, r);
    }
    (DirectedPath(path), queries)
}

/// Largest tournament accepted by [`count_hamiltonian_paths_oracle`].
pub const ORACLE_MAX_VERTICES: usize = 8;

/// Number of directed Hamiltonian paths, by checking every vertex permutation.
pub fn count_hamiltonian_paths_oracle(t: &Tournament) -> Result<u64> {
    let n = t.vertex_count();
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::OracleLimit {
            what: "count_hamiltonian_paths_oracle vertex count",
            limit: ORACLE_MAX_VERTICES,
            got: n,
        });
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0;
    loop {
        if perm.windows(2).all(|w| t.beats(w[0], w[1])) {
            count += 1;
        }
        if !next_permutation(&mut perm) {
            return Ok(count);
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = p.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = p.iter().rposition(|&x| x > p[i]).expect("p[i + 1] > p[i]");
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_cycle() -> Tournament {
        Tournament::new(Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap()).unwrap()
    }

    #[test]
    fn two_vertices() {
        let t = Tournament::new(Digraph::from_arcs(2, [(1, 0)]).unwrap()).unwrap();
        assert_eq!(redei_hamiltonian_path(&t).vertices(), &[1, 0]);
    }

    #[test]
    fn three_cycle_path_is_valid() {
        let t = three_cycle();
        let p = redei_hamiltonian_path(&t);
        assert!(p.is_hamiltonian_in(t.digraph()));
        assert_eq!(p.vertices(), &[2, 0, 1]);
    }

    #[test]
    fn transitive_tournament_gives_sorted_path() {
        let t = Tournament::transitive(4);
        assert_eq!(redei_hamiltonian_path(&t).vertices(), &[0, 1, 2, 3]);
    }

    #[test]
    fn degenerate_sizes() {
        assert!(redei_hamiltonian_path(&Tournament::transitive(0)).is_empty());
        assert_eq!(
            redei_hamiltonian_path(&Tournament::transitive(1)).vertices(),
            &[0]
        );
    }

    #[test]
    fn inserts_between_p_and_q() {
        // 0 -> 1, 0 -> 2, 2 -> 1: vertex 2 lands between 0 and 1.
        let t = Tournament::new(Digraph::from_arcs(3, [(0, 1), (0, 2), (2, 1)]).unwrap()).unwrap();
        assert_eq!(redei_hamiltonian_path(&t).vertices(), &[0, 2, 1]);
    }

    #[test]
    fn oracle_counts() {
        assert_eq!(count_hamiltonian_paths_oracle(&three_cycle()), Ok(3));
        for n in 0..=8 {
            assert_eq!(
                count_hamiltonian_paths_oracle(&Tournament::transitive(n)),
                Ok(1)
            );
        }
        assert!(count_hamiltonian_paths_oracle(&Tournament::transitive(9)).is_err());
    }

    #[test]
    fn path_checks_reject_bad_paths() {
        let t = three_cycle();
        assert!(!DirectedPath(vec![0, 2, 1]).is_path_in(t.digraph()));
        assert!(!DirectedPath(vec![0, 1, 0]).is_path_in(t.digraph()));
        assert!(!DirectedPath(vec![0, 1]).is_hamiltonian_in(t.digraph()));
    }
}
