use crate::error::{Error, Result};
use crate::graph::{EdgeColoring, SimpleGraph};

/// Colour names for [`k17_mod3_coloring`], indexed by colour.
pub const K17_PALETTE: [&str; 3] = ["blue", "red", "green"];

/// The Andrásfai graph `H_{3k-1}`: vertices on a circle, `a_i ~ a_j` iff
/// `(j - i) mod (3k-1)` lies in `k..=2k-1`.
pub fn andrasfai_graph(k: usize) -> Result<SimpleGraph> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "Andrásfai index k must be at least 1".into(),
        ));
    }
    let n = 3 * k - 1;
    Ok(SimpleGraph::from_fn(n, |i, j| {
        let d = (j - i) % n;
        (k..2 * k).contains(&d)
    }))
}

/// `K_17` with vertices labelled `1..=17` (stored 0-based) and edge `{i, j}`
/// coloured `(i + j) mod 3`: 0 blue, 1 red, 2 green.
pub fn k17_mod3_coloring() -> EdgeColoring {
    EdgeColoring::from_fn(17, 3, |u, v| (u + 1 + v + 1) % 3).expect("three colours")
}

/// `K_5` with the pentagon `0-1-2-3-4-0` in colour 0 and the pentagram in colour 1.
pub fn pentagon_coloring() -> EdgeColoring {
    EdgeColoring::from_fn(5, 2, |u, v| {
        let d = (v + 5 - u) % 5;
        usize::from(d != 1 && d != 4)
    })
    .expect("two colours")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, has_clique, has_independent_set};

    #[test]
    fn small_andrasfai_graphs() {
        assert_eq!(andrasfai_graph(1).unwrap(), complete_graph(2));
        let h5 = andrasfai_graph(2).unwrap();
        assert_eq!(h5.edge_count(), 5);
        assert!((0..5).all(|v| h5.degree(v) == 2));
        assert!(has_clique(&h5, 3).is_none());
        let h8 = andrasfai_graph(3).unwrap();
        assert_eq!(h8.vertex_count(), 8);
        assert_eq!(h8.edge_count(), 12);
        // a_1 is joined to a_{k+1}, ..., a_{2k}.
        assert_eq!(h8.neighbors(0).ones().collect::<Vec<_>>(), vec![3, 4, 5]);
        assert!(has_clique(&h8, 3).is_none());
        assert_eq!(has_independent_set(&h8, 3), Some(vec![0, 1, 2]));
        assert!(has_independent_set(&h8, 4).is_none());
        assert!(andrasfai_graph(0).is_err());
    }

    #[test]
    fn k17_named_triangles() {
        let c = k17_mod3_coloring();
        let color_of = |a: usize, b: usize| c.color(a - 1, b - 1);
        for (tri, color) in [([3, 9, 15], 0), ([5, 11, 17], 1), ([4, 10, 16], 2)] {
            assert_eq!(color_of(tri[0], tri[1]), color);
            assert_eq!(color_of(tri[1], tri[2]), color);
            assert_eq!(color_of(tri[0], tri[2]), color);
        }
    }

    #[test]
    fn pentagon_classes_are_five_cycles() {
        let c = pentagon_coloring();
        for color in 0..2 {
            let g = c.color_class(color);
            assert_eq!(g.edge_count(), 5);
            assert!((0..5).all(|v| g.degree(v) == 2));
        }
    }
}
