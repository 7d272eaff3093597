//! Backtracking search for seeds `H_1` whose rotation family
//! `H_1, sigma(H_1), ..., sigma^(n-2)(H_1)` is pairwise arc-disjoint.
//!
//! The seed is grown as a path from `0^m`. Because `sigma` is an automorphism,
//! the whole family is determined by the seed, and taking arc `a` into the
//! seed puts `sigma^j(a)` into the `j`-th member. An extension is therefore
//! only kept while every orbit arc it adds is still unused by the family.

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use super::{rotation_family, DBParams, DeBruijnWord};

#[derive(Clone, Debug, Default)]
pub struct SeedSearchOptions {
    /// Keep going after the first family.
    pub find_all: bool,
    /// Stop after this many arc extensions.
    pub node_budget: Option<u64>,
    pub time_budget: Option<Duration>,
    /// Only consider seeds lexicographically after this one.
    pub resume_after: Option<DeBruijnWord>,
}

/// A pairwise arc-disjoint rotation family, listed from its lexicographically
/// smallest member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedFamily {
    members: Vec<DeBruijnWord>,
}

impl SeedFamily {
    pub fn seed(&self) -> &DeBruijnWord {
        &self.members[0]
    }

    pub fn members(&self) -> &[DeBruijnWord] {
        &self.members
    }

    pub fn contains(&self, word: &DeBruijnWord) -> bool {
        self.members.contains(word)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// The whole search space was explored.
    Exhausted,
    /// Stopped after the first family, as requested, or by the callback.
    Stopped,
    /// The node or time budget ran out; results are partial.
    BudgetExhausted,
}

#[derive(Clone, Debug)]
pub struct SeedSearchReport {
    pub params: DBParams,
    /// In lexicographic order of seeds.
    pub families: Vec<SeedFamily>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub outcome: SearchOutcome,
}

impl SeedSearchReport {
    /// True if `word` belongs to any family found, as seed or rotated member.
    pub fn contains(&self, word: &DeBruijnWord) -> bool {
        self.families.iter().any(|f| f.contains(word))
    }
}

/// Runs the seed search. `on_found` sees every new family together with the
/// node count at the time it was found, and can end the search early.
pub fn rotation_seed_search(
    params: DBParams,
    options: &SeedSearchOptions,
    on_found: &mut dyn FnMut(&SeedFamily, u64) -> ControlFlow<()>,
) -> SeedSearchReport {
    let start = Instant::now();
    let mut search = SeedSearch::new(params, options, start, on_found);
    search.extend(0, 1, options.resume_after.is_some());
    let outcome = if search.aborted {
        SearchOutcome::BudgetExhausted
    } else if search.stopped {
        SearchOutcome::Stopped
    } else {
        SearchOutcome::Exhausted
    };
    SeedSearchReport {
        params,
        families: search.families,
        nodes_explored: search.nodes,
        elapsed: start.elapsed(),
        outcome,
    }
}

const CLOCK_CHECK_INTERVAL: u64 = 1 << 12;

struct SeedSearch<'a> {
    params: DBParams,
    n: usize,
    vertices: usize,
    prefix_mod: usize,
    /// `orbit[a * (n - 1) + j]` is `sigma^j(a)`.
    orbit: Vec<u32>,
    /// Smallest arc of each arc's orbit. Orbits of distinct arcs are disjoint
    /// or equal, so one flag per orbit tracks the whole family.
    orbit_id: Vec<u32>,
    orbit_used: Vec<bool>,
    visited: Vec<bool>,
    /// Vertices the path has already moved on from.
    left: Vec<bool>,
    /// Per vertex, in-arcs (loops excluded) that could still enter it: the
    /// tail has not been left and the orbit is unused.
    free_in: Vec<u8>,
    letters: Vec<u8>,
    /// Linear letters of the resume seed.
    resume: Option<Vec<u8>>,
    find_all: bool,
    node_budget: u64,
    deadline: Option<Instant>,
    nodes: u64,
    aborted: bool,
    stopped: bool,
    families: Vec<SeedFamily>,
    on_found: &'a mut dyn FnMut(&SeedFamily, u64) -> ControlFlow<()>,
}

impl<'a> SeedSearch<'a> {
    fn new(
        params: DBParams,
        options: &SeedSearchOptions,
        start: Instant,
        on_found: &'a mut dyn FnMut(&SeedFamily, u64) -> ControlFlow<()>,
    ) -> Self {
        let n = params.n();
        let vertices = params.vertex_count();
        let arcs = params.arc_count();
        let width = n - 1;
        let mut orbit = vec![0u32; arcs * width];
        let mut orbit_id = vec![0u32; arcs];
        for a in 0..arcs {
            let mut image = a;
            for j in 0..width {
                orbit[a * width + j] = image as u32;
                image = params.sigma_code(image, params.m() + 1);
            }
            orbit_id[a] = *orbit[a * width..(a + 1) * width]
                .iter()
                .min()
                .expect("n >= 2");
        }
        let mut visited = vec![false; vertices];
        visited[0] = true;
        let mut free_in = vec![n as u8; vertices];
        for s in 0..n {
            let loop_vertex = (0..params.m()).fold(0, |acc, _| acc * n + s);
            free_in[loop_vertex] -= 1;
        }
        let mut letters = Vec::with_capacity(vertices + params.m());
        letters.resize(params.m(), 0);
        SeedSearch {
            params,
            n,
            vertices,
            prefix_mod: vertices / n,
            orbit,
            orbit_id,
            orbit_used: vec![false; arcs],
            visited,
            left: vec![false; vertices],
            free_in,
            letters,
            resume: options.resume_after.as_ref().map(|w| {
                let wrap = &w.letters()[..params.m() - 1];
                [w.letters(), wrap].concat()
            }),
            find_all: options.find_all,
            node_budget: options.node_budget.unwrap_or(u64::MAX),
            deadline: options.time_budget.map(|b| start + b),
            nodes: 0,
            aborted: false,
            stopped: false,
            families: Vec::new(),
            on_found,
        }
    }

    fn orbit_free(&self, arc: usize) -> bool {
        !self.orbit_used[self.orbit_id[arc] as usize]
    }

    /// `sigma^j(arc)` as `(tail, head)`.
    fn image(&self, arc: usize, j: usize) -> (usize, usize) {
        let b = self.orbit[arc * (self.n - 1) + j] as usize;
        (b / self.n, b % self.vertices)
    }

    /// Moves along `v -> w`. Returns false when some vertex, `0^m` included,
    /// can no longer be entered.
    fn take(&mut self, v: usize, base: usize, w: usize) -> bool {
        let arc = v * self.n + (w - base);
        self.left[v] = true;
        for x in base..base + self.n {
            if x != v && self.orbit_free(v * self.n + (x - base)) {
                self.free_in[x] -= 1;
            }
        }
        for j in 1..self.n - 1 {
            let (tail, head) = self.image(arc, j);
            if !self.left[tail] {
                self.free_in[head] -= 1;
            }
        }
        self.orbit_used[self.orbit_id[arc] as usize] = true;
        self.visited[w] = true;
        let stuck = |x: usize| !self.visited[x] && self.free_in[x] == 0;
        self.free_in[0] > 0
            && !(base..base + self.n).any(stuck)
            && !(1..self.n - 1).any(|j| stuck(self.image(arc, j).1))
    }

    fn untake(&mut self, v: usize, base: usize, w: usize) {
        let arc = v * self.n + (w - base);
        self.visited[w] = false;
        self.orbit_used[self.orbit_id[arc] as usize] = false;
        for j in 1..self.n - 1 {
            let (tail, head) = self.image(arc, j);
            if !self.left[tail] {
                self.free_in[head] += 1;
            }
        }
        for x in base..base + self.n {
            if x != v && self.orbit_free(v * self.n + (x - base)) {
                self.free_in[x] += 1;
            }
        }
        self.left[v] = false;
    }

    fn out_of_budget(&mut self) -> bool {
        if self.nodes >= self.node_budget {
            self.aborted = true;
        } else if self.nodes.is_multiple_of(CLOCK_CHECK_INTERVAL) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.aborted = true;
                }
            }
        }
        self.aborted
    }

    /// `tied` means the letters so far equal the resume seed's prefix.
    fn extend(&mut self, v: usize, depth: usize, tied: bool) {
        let base = (v % self.prefix_mod) * self.n;
        if depth == self.vertices {
            // Close with the arc back to 0^m, which appends letter 0.
            if base == 0 && !tied && self.orbit_free(v * self.n) {
                self.report();
            }
            return;
        }
        let position = self.letters.len();
        let first = match (&self.resume, tied) {
            (Some(r), true) => r[position] as usize,
            _ => 0,
        };
        for s in first..self.n {
            let w = base + s;
            if w == v || self.visited[w] || !self.orbit_free(v * self.n + s) {
                continue;
            }
            self.nodes += 1;
            if self.out_of_budget() {
                return;
            }
            if self.take(v, base, w) {
                self.letters.push(s as u8);
                self.extend(w, depth + 1, tied && s == first);
                self.letters.pop();
            }
            self.untake(v, base, w);
            if self.aborted || self.stopped {
                return;
            }
        }
    }

    fn report(&mut self) {
        let seed = DeBruijnWord::from_cyclic(self.params, self.letters[..self.vertices].to_vec())
            .expect("search only closes Hamiltonian cycles");
        let members = rotation_family(&seed);
        // Every member generates the same family; the smallest one is found first.
        if members.iter().any(|w| w < &seed) {
            return;
        }
        let family = SeedFamily { members };
        let flow = (self.on_found)(&family, self.nodes);
        self.families.push(family);
        if flow.is_break() || !self.find_all {
            self.stopped = true;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::debruijn::{enumerate_hamiltonian_cycles, pairwise_arc_disjoint};

    fn p(n: usize, m: usize) -> DBParams {
        DBParams::new(n, m).unwrap()
    }

    fn all(params: DBParams) -> SeedSearchReport {
        let options = SeedSearchOptions {
            find_all: true,
            ..Default::default()
        };
        rotation_seed_search(params, &options, &mut |_, _| ControlFlow::Continue(()))
    }

    #[test]
    fn b32_matches_brute_force() {
        let params = p(3, 2);
        let report = all(params);
        assert_eq!(report.outcome, SearchOutcome::Exhausted);
        // Brute force: every enumerated cycle whose family is disjoint, one per family.
        let mut expected: Vec<DeBruijnWord> = enumerate_hamiltonian_cycles(params)
            .unwrap()
            .into_iter()
            .filter(|w| {
                pairwise_arc_disjoint(&rotation_family(w))
                    .unwrap()
                    .is_disjoint()
            })
            .filter(|w| rotation_family(w).iter().all(|x| x >= w))
            .collect();
        expected.sort();
        let found: Vec<DeBruijnWord> = report.families.iter().map(|f| f.seed().clone()).collect();
        assert_eq!(found, expected);
        for text in ["0011220210", "0021011220"] {
            assert!(report.contains(&DeBruijnWord::parse(text).unwrap()));
        }
    }

    #[test]
    fn first_found_is_smallest_seed() {
        let params = p(3, 2);
        let report = rotation_seed_search(params, &SeedSearchOptions::default(), &mut |_, _| {
            ControlFlow::Continue(())
        });
        assert_eq!(report.outcome, SearchOutcome::Stopped);
        assert_eq!(report.families.len(), 1);
        assert_eq!(report.families[0].seed(), all(params).families[0].seed());
    }

    #[test]
    fn binary_alphabet_accepts_every_cycle() {
        // n = 2 gives one-member families, so every Hamiltonian cycle is a seed.
        let params = p(2, 3);
        assert_eq!(all(params).families.len(), 2);
    }

    #[test]
    fn callback_can_stop() {
        let options = SeedSearchOptions {
            find_all: true,
            ..Default::default()
        };
        let mut seen = 0;
        let report = rotation_seed_search(p(4, 2), &options, &mut |_, _| {
            seen += 1;
            if seen == 3 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        assert_eq!(report.outcome, SearchOutcome::Stopped);
        assert_eq!(report.families.len(), 3);
    }

    #[test]
    fn node_budget_stops_early() {
        let options = SeedSearchOptions {
            find_all: true,
            node_budget: Some(3),
            ..Default::default()
        };
        let report = rotation_seed_search(p(4, 2), &options, &mut |_, _| ControlFlow::Continue(()));
        assert_eq!(report.outcome, SearchOutcome::BudgetExhausted);
        assert_eq!(report.nodes_explored, 3);
    }

    #[test]
    fn resume_continues_after_last_seed() {
        let params = p(4, 2);
        let full = all(params);
        assert!(full.families.len() >= 2);
        let options = SeedSearchOptions {
            find_all: true,
            resume_after: Some(full.families[0].seed().clone()),
            ..Default::default()
        };
        let rest = rotation_seed_search(params, &options, &mut |_, _| ControlFlow::Continue(()));
        assert_eq!(rest.families, full.families[1..]);
        assert!(rest.nodes_explored < full.nodes_explored);
    }
}
