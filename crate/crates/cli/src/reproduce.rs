//! Regenerates every checkable datum as a report of expected versus computed
//! values.

use std::fmt::Write as _;
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use ordo_core::debruijn::{
    count_hamiltonian_cycles, de_bruijn_graph, enumerate_hamiltonian_cycles, martin,
    max_disjoint_exact, max_disjoint_upper_bound, pairwise_arc_disjoint, rotation_family,
    rotation_seed_search, DBParams, DeBruijnWord, DisjointVerdict, SearchOutcome,
    SeedSearchOptions,
};
use ordo_core::graph::{
    has_clique, has_independent_set, max_edges_without_clique_oracle, pairs, Tournament,
};
use ordo_core::ramsey::{
    andrasfai_graph, erdos_szekeres_bound, erdos_triangle_multicolor_bound,
    exhaustive_ramsey_check, k17_mod3_coloring, multicolor_multinomial_bound,
    recurrence_upper_bound, verify_coloring, ColoringVerdict, MulticolorSpec, K17_PALETTE,
};
use ordo_core::redei::{count_hamiltonian_paths_oracle, redei_hamiltonian_path};
use ordo_core::turan::{turan_extremal_graph, turan_max_edges, TuranParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    /// The published value disagrees with its own formula; both are shown.
    FlaggedDiscrepancy,
    /// The budget ran out before the value could be computed.
    Skipped,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::FlaggedDiscrepancy => "flagged-discrepancy",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportEntry {
    pub claim: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub runtime_ms: f64,
}

#[derive(Clone, Debug)]
pub struct ReproduceOptions {
    /// Leave out the (3,3) enumeration and seed searches beyond (4,2).
    pub quick: bool,
    /// Time allowed for each search entry.
    pub budget: Duration,
    pub parallel: bool,
    /// Seed for the random tournaments.
    pub seed: u64,
}

impl Default for ReproduceOptions {
    fn default() -> Self {
        ReproduceOptions {
            quick: false,
            budget: Duration::from_secs(60),
            parallel: false,
            seed: 0,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Tier {
    Fast,
    Slow,
}

enum Outcome {
    Compare { expected: String, computed: String },
    Flagged { expected: String, computed: String },
    OutOfBudget { expected: String, computed: String },
}

fn compare(expected: impl ToString, computed: impl ToString) -> Outcome {
    Outcome::Compare {
        expected: expected.to_string(),
        computed: computed.to_string(),
    }
}

struct Ctx {
    budget: Duration,
    seed: u64,
}

struct Claim {
    id: String,
    tier: Tier,
    run: Box<dyn Fn(&Ctx) -> Outcome + Send + Sync>,
}

fn claim(
    id: impl Into<String>,
    tier: Tier,
    run: impl Fn(&Ctx) -> Outcome + Send + Sync + 'static,
) -> Claim {
    Claim {
        id: id.into(),
        tier,
        run: Box::new(run),
    }
}

/// Runs every selected claim. Entries come back in a fixed order whether or
/// not they ran in parallel.
pub fn reproduce_all(options: &ReproduceOptions) -> Vec<ReportEntry> {
    let ctx = Ctx {
        budget: options.budget,
        seed: options.seed,
    };
    let selected: Vec<Claim> = claims()
        .into_iter()
        .filter(|c| c.tier == Tier::Fast || !options.quick)
        .collect();
    let run = |c: &Claim| run_claim(c, &ctx);
    if options.parallel {
        selected.par_iter().map(run).collect()
    } else {
        selected.iter().map(run).collect()
    }
}

fn run_claim(c: &Claim, ctx: &Ctx) -> ReportEntry {
    let start = Instant::now();
    let outcome = (c.run)(ctx);
    let runtime_ms = start.elapsed().as_secs_f64() * 1e3;
    let (expected, computed, status) = match outcome {
        Outcome::Compare { expected, computed } => {
            let status = if expected == computed {
                Status::Match
            } else {
                Status::Mismatch
            };
            (expected, computed, status)
        }
        Outcome::Flagged { expected, computed } => (expected, computed, Status::FlaggedDiscrepancy),
        Outcome::OutOfBudget { expected, computed } => (expected, computed, Status::Skipped),
    };
    ReportEntry {
        claim: c.id.clone(),
        expected,
        computed,
        status,
        runtime_ms,
    }
}

/// 0 when everything matches, 1 on any mismatch, 3 when only budget skips remain.
pub fn exit_code(entries: &[ReportEntry]) -> i32 {
    if entries.iter().any(|e| e.status == Status::Mismatch) {
        1
    } else if entries.iter().any(|e| e.status == Status::Skipped) {
        3
    } else {
        0
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    schema: &'static str,
    entries: &'a [ReportEntry],
}

pub fn to_json(entries: &[ReportEntry]) -> String {
    serde_json::to_string_pretty(&JsonReport {
        schema: "ordo-report/1",
        entries,
    })
    .expect("report serializes")
}

fn clip(s: &str, width: usize) -> String {
    if s.chars().count() <= width {
        s.to_string()
    } else {
        let head: String = s.chars().take(width - 3).collect();
        format!("{head}...")
    }
}

pub fn render_table(entries: &[ReportEntry]) -> String {
    let id_width = entries
        .iter()
        .map(|e| e.claim.len())
        .max()
        .unwrap_or(5)
        .max(5);
    let mut out = format!(
        "{:<id_width$}  {:<19}  {:>10}  {:<40}  {}\n",
        "claim", "status", "ms", "expected", "computed"
    );
    for e in entries {
        let _ = writeln!(
            out,
            "{:<id_width$}  {:<19}  {:>10.1}  {:<40}  {}",
            e.claim,
            e.status.as_str(),
            e.runtime_ms,
            clip(&e.expected, 40),
            clip(&e.computed, 60)
        );
    }
    let count = |s: Status| entries.iter().filter(|e| e.status == s).count();
    let _ = writeln!(
        out,
        "{} entries: {} match, {} mismatch, {} flagged-discrepancy, {} skipped",
        entries.len(),
        count(Status::Match),
        count(Status::Mismatch),
        count(Status::FlaggedDiscrepancy),
        count(Status::Skipped)
    );
    out
}

/// The cycles of `B(3,2)` as printed, row by row.
pub const B32_CYCLES: [&str; 24] = [
    "0010211220",
    "0020122110",
    "0010221120",
    "0020112210",
    "0011021220",
    "0022012110",
    "0011022120",
    "0022011210",
    "0011202210",
    "0022101120",
    "0011210220",
    "0022120110",
    "0011220210",
    "0022110120",
    "0011221020",
    "0022112010",
    "0012022110",
    "0021011220",
    "0012110220",
    "0021220110",
    "0012202110",
    "0021101220",
    "0012211020",
    "0021122010",
];

/// The four arc-disjoint cycles of `B(5,2)`.
pub const B52_BLOCK: [&str; 4] = [
    "00102112041422430332313440",
    "00203223012133140443424110",
    "00304334023244210114131220",
    "00401441034311320221242330",
];

/// Seeds `H_1` from the results table: `(n, m, seed)`.
pub const SEED_TABLE: [(usize, usize, &str); 10] = [
    (3, 2, "0011220210"),
    (3, 2, "0021011220"),
    (3, 3, "00010021011022202012111221200"),
    (4, 2, "00102113230331220"),
    (4, 2, "00102313033211220"),
    (
        4,
        3,
        "000100210110201202310301311121130221232031323003332133122330322200",
    ),
    (
        4,
        3,
        "000100210110201202310301311121130223323003132123203330322213312200",
    ),
    (5, 2, "00102112041422430332313440"),
    (6, 2, "0010211204131403325235505154534422430"),
    (7, 2, "00102112041306140315055162252353436442463326545660"),
];

/// `13824 * 10077696^3` as printed for the number of cycles in `B(3,4)`.
pub fn b34_table_value() -> BigUint {
    BigUint::from(13824u32) * BigUint::from(10077696u32).pow(3)
}

/// Looks for the family containing `seed`, stopping as soon as it appears.
pub fn find_seed(
    params: DBParams,
    seed: &DeBruijnWord,
    budget: Duration,
) -> (bool, SearchOutcome, u64) {
    let options = SeedSearchOptions {
        find_all: true,
        time_budget: Some(budget),
        ..Default::default()
    };
    let mut found = false;
    let report = rotation_seed_search(params, &options, &mut |family, _| {
        if family.contains(seed) {
            found = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    (found, report.outcome, report.nodes_explored)
}

fn p(n: usize, m: usize) -> DBParams {
    DBParams::new(n, m).expect("valid parameters")
}

fn spec(sizes: &[usize]) -> MulticolorSpec {
    MulticolorSpec::new(sizes.to_vec()).expect("valid spec")
}

fn joined(words: impl IntoIterator<Item = String>) -> String {
    words.into_iter().collect::<Vec<_>>().join(" ")
}

fn claims() -> Vec<Claim> {
    let mut out = vec![
        claim("debruijn.martin.3-2", Tier::Fast, |_| {
            compare("0022112010", martin(p(3, 2)).encode())
        }),
        claim("debruijn.enumerate.3-2", Tier::Fast, |_| {
            let mut listed: Vec<String> = B32_CYCLES.iter().map(|s| s.to_string()).collect();
            listed.sort();
            let found = enumerate_hamiltonian_cycles(p(3, 2))
                .map(|ws| joined(ws.iter().map(DeBruijnWord::encode)))
                .unwrap_or_else(|e| e.to_string());
            compare(joined(listed), found)
        }),
    ];
    for (n, m, value) in [(2, 3, "2"), (3, 2, "24"), (3, 3, "373248")] {
        out.push(claim(
            format!("debruijn.count.{n}-{m}"),
            Tier::Fast,
            move |_| compare(value, count_hamiltonian_cycles(p(n, m))),
        ));
    }
    out.push(claim("debruijn.enumerate-count.3-3", Tier::Slow, |_| {
        let count = enumerate_hamiltonian_cycles(p(3, 3))
            .map(|ws| ws.len().to_string())
            .unwrap_or_else(|e| e.to_string());
        compare("373248", count)
    }));
    out.push(claim("debruijn.count.3-4", Tier::Fast, |_| {
        Outcome::Flagged {
            expected: format!("13824*10077696^3 = {}", b34_table_value()),
            computed: format!("(3!)^27/3^4 = {}", count_hamiltonian_cycles(p(3, 4))),
        }
    }));
    for (n, m, shape) in [
        (2, 3, "8 vertices, 16 arcs, 2 loops"),
        (3, 2, "9 vertices, 27 arcs, 3 loops"),
    ] {
        out.push(claim(
            format!("debruijn.graph.{n}-{m}"),
            Tier::Fast,
            move |_| {
                let g = de_bruijn_graph(p(n, m));
                compare(
                    shape,
                    format!(
                        "{} vertices, {} arcs, {} loops",
                        g.vertex_count(),
                        g.arc_count(),
                        g.loop_count()
                    ),
                )
            },
        ));
    }
    out.push(claim("debruijn.shared-arcs.3-2", Tier::Fast, |_| {
        let words =
            ["0010211220", "0020122110"].map(|s| DeBruijnWord::parse(s).expect("listed word"));
        let computed = match pairwise_arc_disjoint(&words) {
            Ok(DisjointVerdict::Conflict { shared, .. }) => shared.labels().join(", "),
            Ok(DisjointVerdict::Disjoint) => "disjoint".into(),
            Err(e) => e.to_string(),
        };
        compare("12->22, 21->11", computed)
    }));
    out.push(claim("debruijn.family.3-2", Tier::Fast, |_| {
        let seed = DeBruijnWord::parse("0011220210").expect("listed word");
        let family = rotation_family(&seed);
        let verdict = pairwise_arc_disjoint(&family).map(|v| v.is_disjoint());
        compare(
            "0011220210 0022110120 disjoint",
            format!(
                "{} {}",
                joined(family.iter().map(DeBruijnWord::encode)),
                if verdict == Ok(true) {
                    "disjoint"
                } else {
                    "not disjoint"
                }
            ),
        )
    }));
    out.push(claim("debruijn.family.5-2", Tier::Fast, |_| {
        let seed = DeBruijnWord::parse(B52_BLOCK[0]).expect("listed word");
        let family = rotation_family(&seed);
        let verdict = pairwise_arc_disjoint(&family).map(|v| v.is_disjoint());
        compare(
            format!("{} disjoint", B52_BLOCK.join(" ")),
            format!(
                "{} {}",
                joined(family.iter().map(DeBruijnWord::encode)),
                if verdict == Ok(true) {
                    "disjoint"
                } else {
                    "not disjoint"
                }
            ),
        )
    }));
    out.push(claim("debruijn.max-disjoint-bound.3", Tier::Fast, |_| {
        compare(2, max_disjoint_upper_bound(3).expect("n >= 2"))
    }));
    for (n, m, value) in [(3, 2, 2), (2, 3, 1)] {
        out.push(claim(
            format!("debruijn.max-disjoint.{n}-{m}"),
            Tier::Fast,
            move |_| {
                let computed = max_disjoint_exact(p(n, m))
                    .map(|r| r.size.to_string())
                    .unwrap_or_else(|e| e.to_string());
                compare(value, computed)
            },
        ));
    }
    for (row, &(n, m, seed)) in SEED_TABLE.iter().enumerate() {
        let tier = if m == 2 && n <= 4 {
            Tier::Fast
        } else {
            Tier::Slow
        };
        let index = SEED_TABLE[..=row]
            .iter()
            .filter(|r| (r.0, r.1) == (n, m))
            .count();
        out.push(claim(
            format!("debruijn.seed.{n}-{m}.{index}"),
            tier,
            move |ctx| {
                let params = p(n, m);
                let word = match DeBruijnWord::decode(seed, params) {
                    Ok(w) => w,
                    Err(e) => return compare("found", e),
                };
                let (found, outcome, nodes) = find_seed(params, &word, ctx.budget);
                if found {
                    compare("found", "found")
                } else if outcome == SearchOutcome::BudgetExhausted {
                    Outcome::OutOfBudget {
                        expected: "found".into(),
                        computed: format!("not found within {:?} ({nodes} nodes)", ctx.budget),
                    }
                } else {
                    compare("found", format!("search exhausted after {nodes} nodes"))
                }
            },
        ));
    }
    out.extend(ramsey_claims());
    out.extend(turan_claims());
    out.extend(redei_claims());
    out
}

fn ramsey_value(m: usize, k: usize, value: usize) -> String {
    let below = exhaustive_ramsey_check(m, k, value - 1);
    let at = exhaustive_ramsey_check(m, k, value);
    match (below, at) {
        (Ok(below), Ok(at)) => {
            let witness_ok = below
                .counterexample
                .as_ref()
                .is_some_and(|c| verify_coloring(c, &spec(&[m, k])) == Ok(ColoringVerdict::Good));
            if at.holds && !below.holds && witness_ok {
                value.to_string()
            } else {
                format!(
                    "K_{} holds: {}, K_{} holds: {}",
                    value - 1,
                    below.holds,
                    value,
                    at.holds
                )
            }
        }
        (Err(e), _) | (_, Err(e)) => e.to_string(),
    }
}

fn ramsey_claims() -> Vec<Claim> {
    let mut out = vec![
        claim("ramsey.exact.3-3", Tier::Fast, |_| {
            compare(6, ramsey_value(3, 3, 6))
        }),
        claim("ramsey.exact.3-4", Tier::Fast, |_| {
            compare(9, ramsey_value(3, 4, 9))
        }),
        claim("ramsey.recurrence.3-4", Tier::Fast, |_| {
            compare(9, recurrence_upper_bound(3, 4).expect("positive sizes"))
        }),
        claim("ramsey.erdos-szekeres.3-4", Tier::Fast, |_| {
            compare(10, erdos_szekeres_bound(3, 4).expect("positive sizes"))
        }),
        claim("ramsey.multinomial.3-3", Tier::Fast, |_| {
            compare(6, multicolor_multinomial_bound(&spec(&[3, 3])))
        }),
    ];
    for (r, value) in [(2, 6), (3, 17)] {
        out.push(claim(
            format!("ramsey.triangle-bound.{r}"),
            Tier::Fast,
            move |_| compare(value, erdos_triangle_multicolor_bound(r).expect("r >= 1")),
        ));
    }
    out.push(claim("ramsey.andrasfai.8", Tier::Fast, |_| {
        let g = andrasfai_graph(3).expect("k >= 1");
        compare(
            "triangle-free: true, independent 4-set: false",
            format!(
                "triangle-free: {}, independent 4-set: {}",
                has_clique(&g, 3).is_none(),
                has_independent_set(&g, 4).is_some()
            ),
        )
    }));
    out.push(claim("ramsey.k17.named-triangles", Tier::Fast, |_| {
        let c = k17_mod3_coloring();
        let describe = |tri: [usize; 3]| {
            let colors = [(0, 1), (1, 2), (0, 2)].map(|(i, j)| c.color(tri[i] - 1, tri[j] - 1));
            let name = if colors.iter().all(|&x| x == colors[0]) {
                K17_PALETTE[colors[0]]
            } else {
                "mixed"
            };
            format!("{}-{}-{} {name}", tri[0], tri[1], tri[2])
        };
        compare(
            "3-9-15 blue, 5-11-17 red, 4-10-16 green",
            [[3, 9, 15], [5, 11, 17], [4, 10, 16]]
                .map(describe)
                .join(", "),
        )
    }));
    out.push(claim("ramsey.k17.every-colour", Tier::Fast, |_| {
        let c = k17_mod3_coloring();
        let first = match verify_coloring(&c, &spec(&[3, 3, 3])) {
            Ok(ColoringVerdict::Monochromatic { .. }) => "monochromatic triangle",
            Ok(ColoringVerdict::Good) => "good",
            Err(_) => "error",
        };
        let per_colour: Vec<&str> = (0..3)
            .map(|color| {
                if has_clique(&c.color_class(color), 3).is_some() {
                    K17_PALETTE[color]
                } else {
                    "-"
                }
            })
            .collect();
        compare(
            "monochromatic triangle; blue red green",
            format!("{first}; {}", per_colour.join(" ")),
        )
    }));
    out
}

fn turan_claims() -> Vec<Claim> {
    let mut out = Vec::new();
    for (n, k, value) in [(5, 2, 6), (7, 3, 16), (13, 4, 63)] {
        out.push(claim(
            format!("turan.bound.{n}-{k}"),
            Tier::Fast,
            move |_| compare(value, turan_max_edges(n, k).expect("1 <= k <= n")),
        ));
    }
    for (n, k, shape) in [
        (7, 3, "K_{3,2,2}, 16 edges, no K_4"),
        (13, 4, "K_{4,3,3,3}, 63 edges, no K_5"),
    ] {
        out.push(claim(
            format!("turan.graph.{n}-{k}"),
            Tier::Fast,
            move |_| {
                let parts = TuranParams::new(n, k).expect("1 <= k <= n").part_sizes();
                let g = turan_extremal_graph(n, k).expect("1 <= k <= n");
                let parts: Vec<String> = parts.iter().map(usize::to_string).collect();
                let clique = if has_clique(&g, k as usize + 1).is_some() {
                    "has"
                } else {
                    "no"
                };
                compare(
                    shape,
                    format!(
                        "K_{{{}}}, {} edges, {clique} K_{}",
                        parts.join(","),
                        g.edge_count(),
                        k + 1
                    ),
                )
            },
        ));
    }
    out.push(claim("turan.oracle.7", Tier::Fast, |_| {
        let mismatches: Vec<String> = (1..=7u64)
            .flat_map(|n| (1..=n).map(move |k| (n, k)))
            .filter(|&(n, k)| {
                let oracle = max_edges_without_clique_oracle(n as usize, k as usize);
                oracle.ok().map(|o| o as u64) != turan_max_edges(n, k).ok()
            })
            .map(|(n, k)| format!("({n},{k})"))
            .collect();
        compare(
            "formula = oracle for all k <= n <= 7",
            if mismatches.is_empty() {
                "formula = oracle for all k <= n <= 7".to_string()
            } else {
                format!("differs at {}", mismatches.join(" "))
            },
        )
    }));
    out
}

fn redei_claims() -> Vec<Claim> {
    vec![
        claim("redei.random-1000", Tier::Fast, |ctx| {
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            let valid = (0..1000)
                .filter(|_| {
                    let n = rng.gen_range(2..=100);
                    let t = Tournament::random(n, &mut rng);
                    redei_hamiltonian_path(&t).is_hamiltonian_in(t.digraph())
                })
                .count();
            compare("1000/1000 Hamiltonian", format!("{valid}/1000 Hamiltonian"))
        }),
        claim("redei.exhaustive-5", Tier::Fast, |_| {
            let (mut total, mut ok) = (0u64, 0u64);
            for n in 1..=5 {
                for index in 0..1u64 << pairs(n) {
                    let t = Tournament::from_index(n, index);
                    total += 1;
                    if count_hamiltonian_paths_oracle(&t).is_ok_and(|c| c >= 1)
                        && redei_hamiltonian_path(&t).is_hamiltonian_in(t.digraph())
                    {
                        ok += 1;
                    }
                }
            }
            compare(
                format!("{total}/{total} with a path"),
                format!("{ok}/{total} with a path"),
            )
        }),
        claim("redei.odd-counts-7", Tier::Fast, |ctx| {
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            let odd = (0..500)
                .filter(|_| {
                    let n = rng.gen_range(1..=7);
                    let t = Tournament::random(n, &mut rng);
                    count_hamiltonian_paths_oracle(&t).is_ok_and(|c| c % 2 == 1)
                })
                .count();
            compare("500/500 odd", format!("{odd}/500 odd"))
        }),
    ]
}
