//! Graph and digraph data model shared by every other module.
//!
//! Vertices are `0..n`. Adjacency is kept as one bitset per vertex so that
//! clique and independent-set queries reduce to neighbourhood intersections.

use fixedbitset::FixedBitSet;
use rand::Rng;

use crate::error::{Error, Result};

/// Number of unordered pairs of `n` items.
pub const fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn check_vertex(vertex: usize, vertex_count: usize) -> Result<()> {
    if vertex < vertex_count {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange {
            vertex,
            vertex_count,
        })
    }
}

/// Undirected graph without loops or parallel edges.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<FixedBitSet>,
    edge_count: usize,
}

impl SimpleGraph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            adj: vec![FixedBitSet::with_capacity(n); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = SimpleGraph::empty(n);
        for (u, v) in edges {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            g.insert(u, v);
        }
        Ok(g)
    }

    /// Builds a graph where `{u, v}` is an edge iff `f(u, v)` for `u < v`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = SimpleGraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if f(u, v) {
                    g.insert(u, v);
                }
            }
        }
        g
    }

    fn insert(&mut self, u: usize, v: usize) {
        if !self.adj[u].contains(v) {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
            self.edge_count += 1;
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> SimpleGraph {
        complement(self)
    }
}

impl std::fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("vertex_count", &self.vertex_count())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// `K_n`.
pub fn complete_graph(n: usize) -> SimpleGraph {
    SimpleGraph::from_fn(n, |_, _| true)
}

pub fn complement(g: &SimpleGraph) -> SimpleGraph {
    SimpleGraph::from_fn(g.vertex_count(), |u, v| !g.has_edge(u, v))
}

/// `K_{n_1, ..., n_k}`: consecutive vertex blocks of the given sizes, joined
/// across blocks and independent within them.
pub fn complete_multipartite(part_sizes: &[usize]) -> Result<SimpleGraph> {
    if part_sizes.is_empty() {
        return Err(Error::NoParts);
    }
    if let Some(i) = part_sizes.iter().position(|&s| s == 0) {
        return Err(Error::EmptyPart(i));
    }
    let part_of: Vec<usize> = part_sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect();
    Ok(SimpleGraph::from_fn(part_of.len(), |u, v| {
        part_of[u] != part_of[v]
    }))
}

/// Lexicographically smallest clique of the given size, if any.
pub fn has_clique(g: &SimpleGraph, size: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut candidates = FixedBitSet::with_capacity(n);
    candidates.insert_range(..);
    let mut clique = Vec::with_capacity(size);
    if extend_clique(g, size, &mut clique, &candidates) {
        Some(clique)
    } else {
        None
    }
}

fn extend_clique(
    g: &SimpleGraph,
    size: usize,
    clique: &mut Vec<usize>,
    candidates: &FixedBitSet,
) -> bool {
    if clique.len() == size {
        return true;
    }
    if clique.len() + candidates.count_ones(..) < size {
        return false;
    }
    for v in candidates.ones() {
        let mut next = candidates.clone();
        next.intersect_with(g.neighbors(v));
        next.set_range(..v + 1, false);
        clique.push(v);
        if extend_clique(g, size, clique, &next) {
            return true;
        }
        clique.pop();
    }
    false
}

/// Lexicographically smallest independent set of the given size, if any.
pub fn has_independent_set(g: &SimpleGraph, size: usize) -> Option<Vec<usize>> {
    has_clique(&complement(g), size)
}

/// Maximum clique by branch and bound. The search stops early once a clique
/// of size `stop_at` is found (pass an a-priori upper bound when one is known).
pub fn max_clique(g: &SimpleGraph, stop_at: Option<usize>) -> Vec<usize> {
    struct Search<'a> {
        g: &'a SimpleGraph,
        best: Vec<usize>,
        stop_at: usize,
    }

    impl Search<'_> {
        fn expand(&mut self, clique: &mut Vec<usize>, candidates: FixedBitSet) -> bool {
            if clique.len() > self.best.len() {
                self.best = clique.clone();
                if self.best.len() >= self.stop_at {
                    return true;
                }
            }
            let mut remaining = candidates.count_ones(..);
            for v in candidates.ones() {
                if clique.len() + remaining <= self.best.len() {
                    break;
                }
                remaining -= 1;
                let mut next = candidates.clone();
                next.intersect_with(self.g.neighbors(v));
                next.set_range(..v + 1, false);
                clique.push(v);
                let done = self.expand(clique, next);
                clique.pop();
                if done {
                    return true;
                }
            }
            false
        }
    }

    let n = g.vertex_count();
    let mut search = Search {
        g,
        best: Vec::new(),
        stop_at: stop_at.unwrap_or(usize::MAX),
    };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    search.expand(&mut Vec::new(), all);
    search.best
}

/// Largest vertex count accepted by [`max_edges_without_clique_oracle`].
pub const ORACLE_MAX_VERTICES: usize = 7;

/// Maximum edge count over all labelled graphs on `n` vertices that contain
/// no `K_{k+1}`, by enumerating every edge subset.
pub fn max_edges_without_clique_oracle(n: usize, k: usize) -> Result<usize> {
    if n > ORACLE_MAX_VERTICES {
        return Err(Error::OracleLimit {
            what: "max_edges_without_clique_oracle vertex count",
            limit: ORACLE_MAX_VERTICES,
            got: n,
        });
    }
    if k == 0 {
        return Err(Error::InvalidParameter(
            "clique bound k must be at least 1".into(),
        ));
    }
    let forbidden = k + 1;
    let edge_list: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let total = edge_list.len();
    let mut best = 0;
    for mask in 0u32..(1u32 << total) {
        let edges = mask.count_ones() as usize;
        if edges <= best && mask != 0 {
            continue;
        }
        let mut adj = [0u8; ORACLE_MAX_VERTICES];
        for (i, &(u, v)) in edge_list.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        let all = if n == 0 { 0 } else { (1u8 << n) - 1 };
        if !small_clique_exists(&adj, all, forbidden) {
            best = best.max(edges);
        }
    }
    Ok(best)
}

fn small_clique_exists(adj: &[u8], candidates: u8, size: usize) -> bool {
    if size == 0 {
        return true;
    }
    if (candidates.count_ones() as usize) < size {
        return false;
    }
    let mut rest = candidates;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if small_clique_exists(adj, adj[v] & rest, size - 1) {
            return true;
        }
    }
    false
}

/// Directed graph; loops are allowed, parallel arcs are not.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<FixedBitSet>,
    arc_count: usize,
}

impl Digraph {
    pub fn empty(n: usize) -> Self {
        Digraph {
            out: vec![FixedBitSet::with_capacity(n); n],
            arc_count: 0,
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Digraph::empty(n);
        for (u, v) in arcs {
            check_vertex(u, n)?;
            check_vertex(v, n)?;
            d.insert(u, v);
        }
        Ok(d)
    }

    fn insert(&mut self, u: usize, v: usize) {
        if !self.out[u].contains(v) {
            self.out[u].insert(v);
            self.arc_count += 1;
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.out.len() && self.out[u].contains(v)
    }

    pub fn successors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[v].ones()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].count_ones(..)
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.out.iter().filter(|s| s.contains(v)).count()
    }

    pub fn loop_count(&self) -> usize {
        (0..self.out.len())
            .filter(|&v| self.out[v].contains(v))
            .count()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.ones().map(move |v| (u, v)))
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Digraph")
            .field("vertex_count", &self.vertex_count())
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

/// An orientation of a complete graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tournament(Digraph);

impl Tournament {
    /// Validates that `d` has no loops and exactly one arc per vertex pair.
    pub fn new(d: Digraph) -> Result<Self> {
        let n = d.vertex_count();
        for u in 0..n {
            if d.has_arc(u, u) {
                return Err(Error::NotTournament(format!("loop at vertex {u}")));
            }
            for v in u + 1..n {
                match (d.has_arc(u, v), d.has_arc(v, u)) {
                    (true, false) | (false, true) => {}
                    (true, true) => {
                        return Err(Error::NotTournament(format!(
                            "both arcs present between {u} and {v}"
                        )))
                    }
                    (false, false) => {
                        return Err(Error::NotTournament(format!("no arc between {u} and {v}")))
                    }
                }
            }
        }
        Ok(Tournament(d))
    }

    /// For each pair `u < v`, orients `u -> v` iff `forward(u, v)`.
    pub fn from_fn(n: usize, mut forward: impl FnMut(usize, usize) -> bool) -> Self {
        let mut d = Digraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if forward(u, v) {
                    d.insert(u, v);
                } else {
                    d.insert(v, u);
                }
            }
        }
        Tournament(d)
    }

    /// `i -> j` iff `i < j`.
    pub fn transitive(n: usize) -> Self {
        Tournament::from_fn(n, |_, _| true)
    }

    /// Each pair oriented by a fair coin.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        Tournament::from_fn(n, |_, _| rng.gen_bool(0.5))
    }

    /// The `index`-th of the `2^C(n,2)` orientations, bit `i` orienting the
    /// `i`-th pair in lexicographic order.
    pub fn from_index(n: usize, index: u64) -> Self {
        let mut bit = 0;
        Tournament::from_fn(n, |_, _| {
            let forward = index >> bit & 1 == 0;
            bit += 1;
            forward
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.0.vertex_count()
    }

    /// True iff the arc between `u` and `v` points from `u` to `v`.
    pub fn beats(&self, u: usize, v: usize) -> bool {
        self.0.has_arc(u, v)
    }

    pub fn digraph(&self) -> &Digraph {
        &self.0
    }

    pub fn into_digraph(self) -> Digraph {
        self.0
    }
}

/// A colouring of every edge of `K_n` with colours `0..color_count`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeColoring {
    vertex_count: usize,
    color_count: usize,
    colors: Vec<u8>,
}

impl EdgeColoring {
    fn index(u: usize, v: usize) -> usize {
        let (lo, hi) = if u < v { (u, v) } else { (v, u) };
        pairs(hi) + lo
    }

    pub fn from_fn(
        vertex_count: usize,
        color_count: usize,
        mut f: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self> {
        if color_count == 0 || color_count > u8::MAX as usize + 1 {
            return Err(Error::InvalidParameter(format!(
                "color count {color_count} must lie in 1..=256"
            )));
        }
        let mut colors = vec![0u8; pairs(vertex_count)];
        for hi in 0..vertex_count {
            for lo in 0..hi {
                let color = f(lo, hi);
                if color >= color_count {
                    return Err(Error::ColorOutOfRange { color, color_count });
                }
                colors[Self::index(lo, hi)] = color as u8;
            }
        }
        Ok(EdgeColoring {
            vertex_count,
            color_count,
            colors,
        })
    }

    /// Builds a colouring from `(u, v, color)` triples, which must cover
    /// every pair exactly once.
    pub fn from_entries<I>(vertex_count: usize, color_count: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, usize)>,
    {
        let mut slots: Vec<Option<usize>> = vec![None; pairs(vertex_count)];
        for (u, v, c) in entries {
            check_vertex(u, vertex_count)?;
            check_vertex(v, vertex_count)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            let slot = &mut slots[Self::index(u, v)];
            if slot.is_some() {
                return Err(Error::InvalidParameter(format!(
                    "pair {{{u},{v}}} colored twice"
                )));
            }
            *slot = Some(c);
        }
        EdgeColoring::from_fn(vertex_count, color_count, |u, v| {
            slots[Self::index(u, v)].unwrap_or(usize::MAX)
        })
        .map_err(|err| match err {
            Error::ColorOutOfRange {
                color: usize::MAX, ..
            } => Error::InvalidParameter("coloring is not total".into()),
            other => other,
        })
    }

    /// Two-colouring of `K_n` from a graph: colour 0 on edges of `g`, colour 1
    /// on edges of its complement.
    pub fn from_graph(g: &SimpleGraph) -> Self {
        EdgeColoring::from_fn(g.vertex_count(), 2, |u, v| usize::from(!g.has_edge(u, v)))
            .expect("two colours are always valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn color_count(&self) -> usize {
        self.color_count
    }

    pub fn color(&self, u: usize, v: usize) -> usize {
        debug_assert!(u != v);
        self.colors[Self::index(u, v)] as usize
    }

    /// The graph formed by the edges of one colour.
    pub fn color_class(&self, color: usize) -> SimpleGraph {
        SimpleGraph::from_fn(self.vertex_count, |u, v| self.color(u, v) == color)
    }

    /// `(u, v, color)` with `u < v` in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.vertex_count;
        (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v, self.color(u, v))))
    }
}
