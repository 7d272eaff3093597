use super::DBParams;
use crate::format::{graph_to_dot, DotStyle};
use crate::graph::{Digraph, SimpleGraph};

/// `B(n, m)` with vertices indexed by their base-`n` value.
pub fn de_bruijn_graph(params: DBParams) -> Digraph {
    let n = params.n();
    let arcs =
        (0..params.vertex_count()).flat_map(|v| (0..n).map(move |s| (v, params.successor(v, s))));
    Digraph::from_arcs(params.vertex_count(), arcs).expect("successors stay in range")
}

/// Underlying simple graph of `B(n, m)`: loops dropped, orientation forgotten.
pub fn flower_graph(params: DBParams) -> SimpleGraph {
    let d = de_bruijn_graph(params);
    SimpleGraph::from_edges(params.vertex_count(), d.arcs().filter(|(u, v)| u != v))
        .expect("loops filtered out")
}

/// [`flower_graph`] as DOT with word labels.
pub fn export_flower(params: DBParams) -> String {
    let label = |v: usize| params.vertex_label(v);
    let name = format!("B({},{})", params.n(), params.m());
    graph_to_dot(
        &flower_graph(params),
        &DotStyle {
            name: &name,
            labels: Some(&label),
            ..Default::default()
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, m: usize) -> DBParams {
        DBParams::new(n, m).unwrap()
    }

    #[test]
    fn graph_census() {
        for (n, m, vertices, arcs) in [(2, 3, 8, 16), (3, 2, 9, 27), (4, 1, 4, 16)] {
            let g = de_bruijn_graph(p(n, m));
            assert_eq!(g.vertex_count(), vertices);
            assert_eq!(g.arc_count(), arcs);
            assert_eq!(g.loop_count(), n);
            for v in 0..vertices {
                assert_eq!(g.out_degree(v), n);
                assert_eq!(g.in_degree(v), n);
            }
        }
    }

    #[test]
    fn flower_drops_loops_and_orientation() {
        let f = flower_graph(p(3, 2));
        assert_eq!(f.vertex_count(), 9);
        // 24 non-loop arcs; 01<->10, 02<->20, 12<->21 pair up.
        assert_eq!(f.edge_count(), 21);
        let single = flower_graph(p(2, 1));
        assert_eq!(single.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let b23 = flower_graph(p(2, 3));
        assert_eq!(b23.vertex_count(), 8);
        assert_eq!(b23.edge_count(), 13);
    }

    #[test]
    fn flower_dot_uses_word_labels() {
        let dot = export_flower(p(2, 1));
        assert!(dot.contains("\"0\" -- \"1\";"));
        assert!(dot.starts_with("graph \"B(2,1)\""));
    }
}
