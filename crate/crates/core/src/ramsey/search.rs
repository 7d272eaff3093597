use super::MulticolorSpec;
use crate::error::{Error, Result};
use crate::graph::{has_clique, pairs, EdgeColoring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringVerdict {
    /// No colour `i` contains a monochromatic `K_{k_i}`.
    Good,
    /// The first monochromatic clique: lowest colour, then lexicographically
    /// smallest vertex set (0-based).
    Monochromatic { color: usize, vertices: Vec<usize> },
}

pub fn verify_coloring(coloring: &EdgeColoring, spec: &MulticolorSpec) -> Result<ColoringVerdict> {
    if coloring.color_count() != spec.color_count() {
        return Err(Error::ArityMismatch {
            colors: coloring.color_count(),
            spec: spec.color_count(),
        });
    }
    for (color, &size) in spec.sizes().iter().enumerate() {
        if let Some(vertices) = has_clique(&coloring.color_class(color), size) {
            return Ok(ColoringVerdict::Monochromatic { color, vertices });
        }
    }
    Ok(ColoringVerdict::Good)
}

/// Largest `C(n,2)` the exhaustive search accepts.
pub const SEARCH_EDGE_LIMIT: usize = 36;

/// Outcome of [`exhaustive_ramsey_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamseyCheck {
    /// True iff every red/blue colouring of `K_n` has a red `K_m` or a blue `K_k`.
    pub holds: bool,
    /// A colouring avoiding both (colour 0 red, colour 1 blue) when `holds` is false.
    pub counterexample: Option<EdgeColoring>,
    /// Partial colourings visited.
    pub nodes: u64,
}

/// Decides whether every 2-colouring of `K_n` contains a red `K_m` or a blue
/// `K_k`. Edges are coloured in lexicographic order, red first; a branch is
/// cut as soon as the edge just coloured completes a forbidden clique.
pub fn exhaustive_ramsey_check(m: usize, k: usize, n: usize) -> Result<RamseyCheck> {
    if m == 0 || k == 0 {
        return Err(Error::InvalidParameter(format!(
            "clique sizes must be positive, got ({m},{k})"
        )));
    }
    let edge_total = pairs(n);
    if edge_total > SEARCH_EDGE_LIMIT {
        return Err(Error::SearchLimit {
            n,
            edges: edge_total,
            limit: SEARCH_EDGE_LIMIT,
        });
    }
    // A single vertex is a K_1 of every colour.
    if n >= 1 && (m == 1 || k == 1) {
        return Ok(RamseyCheck {
            holds: true,
            counterexample: None,
            nodes: 0,
        });
    }
    let mut search = EdgeSearch {
        forbidden: [m, k],
        edges: (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect(),
        adj: [[0; 16]; 2],
        colors: Vec::with_capacity(edge_total),
        nodes: 0,
    };
    let found = search.run();
    let counterexample = found.then(|| {
        let entries = search
            .edges
            .iter()
            .zip(&search.colors)
            .map(|(&(u, v), &c)| (u, v, c as usize));
        EdgeColoring::from_entries(n, 2, entries).expect("search colours every edge")
    });
    Ok(RamseyCheck {
        holds: !found,
        counterexample,
        nodes: search.nodes,
    })
}

struct EdgeSearch {
    forbidden: [usize; 2],
    edges: Vec<(usize, usize)>,
    /// Per colour, neighbour masks over the edges coloured so far.
    adj: [[u16; 16]; 2],
    colors: Vec<u8>,
    nodes: u64,
}

impl EdgeSearch {
    /// True when a full colouring avoiding both cliques exists; it is left in `colors`.
    fn run(&mut self) -> bool {
        let depth = self.colors.len();
        let Some(&(u, v)) = self.edges.get(depth) else {
            return true;
        };
        for color in 0..2 {
            self.nodes += 1;
            if self.completes_clique(color, u, v) {
                continue;
            }
            self.adj[color][u] |= 1 << v;
            self.adj[color][v] |= 1 << u;
            self.colors.push(color as u8);
            if self.run() {
                return true;
            }
            self.colors.pop();
            self.adj[color][u] &= !(1 << v);
            self.adj[color][v] &= !(1 << u);
        }
        false
    }

    /// Would colouring `{u, v}` with `color` create a monochromatic forbidden clique?
    fn completes_clique(&self, color: usize, u: usize, v: usize) -> bool {
        let size = self.forbidden[color];
        let common = self.adj[color][u] & self.adj[color][v];
        mask_has_clique(&self.adj[color], common, size - 2)
    }
}

fn mask_has_clique(adj: &[u16], candidates: u16, size: usize) -> bool {
    if size == 0 {
        return true;
    }
    if (candidates.count_ones() as usize) < size {
        return false;
    }
    let mut rest = candidates;
    while rest != 0 {
        let w = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if mask_has_clique(adj, adj[w] & rest, size - 1) {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ramsey::pentagon_coloring;

    fn spec(s: &[usize]) -> MulticolorSpec {
        MulticolorSpec::new(s.to_vec()).unwrap()
    }

    #[test]
    fn pentagon_is_good_for_3_3() {
        assert_eq!(
            verify_coloring(&pentagon_coloring(), &spec(&[3, 3])),
            Ok(ColoringVerdict::Good)
        );
    }

    #[test]
    fn all_red_k4_has_red_triangle() {
        let red = EdgeColoring::from_fn(4, 2, |_, _| 0).unwrap();
        assert_eq!(
            verify_coloring(&red, &spec(&[3, 3])),
            Ok(ColoringVerdict::Monochromatic {
                color: 0,
                vertices: vec![0, 1, 2]
            })
        );
    }

    #[test]
    fn arity_mismatch() {
        assert_eq!(
            verify_coloring(&pentagon_coloring(), &spec(&[3, 3, 3])),
            Err(Error::ArityMismatch { colors: 2, spec: 3 })
        );
    }

    #[test]
    fn small_ramsey_values() {
        let five = exhaustive_ramsey_check(3, 3, 5).unwrap();
        assert!(!five.holds);
        let witness = five.counterexample.unwrap();
        assert_eq!(
            verify_coloring(&witness, &spec(&[3, 3])),
            Ok(ColoringVerdict::Good)
        );
        assert!(exhaustive_ramsey_check(3, 3, 6).unwrap().holds);
        for k in 1..6 {
            assert!(exhaustive_ramsey_check(1, k, 1).unwrap().holds);
            assert!(exhaustive_ramsey_check(k, 1, 1).unwrap().holds);
        }
        // R(2,k) = k.
        assert!(!exhaustive_ramsey_check(2, 4, 3).unwrap().holds);
        assert!(exhaustive_ramsey_check(2, 4, 4).unwrap().holds);
        assert!(!exhaustive_ramsey_check(3, 1, 0).unwrap().holds);
    }

    #[test]
    fn search_limit() {
        assert!(matches!(
            exhaustive_ramsey_check(3, 3, 10),
            Err(Error::SearchLimit { edges: 45, .. })
        ));
    }
}
