use std::fs;
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use ordo_cli::reproduce::{exit_code, render_table, reproduce_all, to_json, ReproduceOptions};
use ordo_core::debruijn::{
    append_cache_record, count_hamiltonian_cycles, de_bruijn_graph, enumerate_hamiltonian_cycles,
    export_flower, martin, pairwise_arc_disjoint, read_cache, rotation_family,
    rotation_seed_search, sigma, CacheRecord, DBParams, DeBruijnWord, DisjointVerdict,
    SearchOutcome, SeedSearchOptions,
};
use ordo_core::format::{
    coloring_to_dot, digraph_to_dot, graph_to_dot, parse_coloring, parse_digraph, write_coloring,
    write_digraph, write_graph, DotStyle,
};
use ordo_core::graph::{
    has_clique, max_edges_without_clique_oracle, Tournament, ORACLE_MAX_VERTICES,
};
use ordo_core::ramsey::{
    andrasfai_graph, collect_bounds, exhaustive_ramsey_check, k17_mod3_coloring, verify_coloring,
    ColoringVerdict, MulticolorSpec, K17_PALETTE,
};
use ordo_core::redei::redei_hamiltonian_path;
use ordo_core::turan::{turan_extremal_graph, turan_max_edges, TuranParams};
use ordo_core::{Error, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Directory for seed-search caches when `--cache` is not given.
const CACHE_DIR_VAR: &str = "ORDO_CACHE_DIR";

#[derive(Parser)]
#[command(
    name = "ordo",
    version,
    about = "Tournaments, Ramsey and Turán bounds, De Bruijn graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hamiltonian path of a tournament by insertion.
    Redei(RedeiArgs),
    #[command(subcommand)]
    Ramsey(RamseyCommand),
    #[command(subcommand)]
    Turan(TuranCommand),
    #[command(subcommand)]
    Debruijn(DebruijnCommand),
    /// Recompute every checkable value and compare.
    Reproduce(ReproduceArgs),
}

#[derive(Args)]
struct RedeiArgs {
    /// Tournament in digraph text format.
    #[arg(required_unless_present = "random", conflicts_with = "random")]
    file: Option<PathBuf>,
    /// Use a random tournament on this many vertices instead.
    #[arg(long, value_name = "N")]
    random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print DOT with the path arcs in red.
    #[arg(long)]
    dot: bool,
}

#[derive(Subcommand)]
enum RamseyCommand {
    /// Look for monochromatic cliques in an edge colouring file.
    Verify {
        file: PathBuf,
        /// Clique size per colour, e.g. 3,3,3.
        #[arg(long)]
        spec: MulticolorSpec,
    },
    /// Does every red/blue colouring of K_n contain a red K_m or a blue K_k?
    Search {
        m: usize,
        k: usize,
        n: usize,
        #[arg(long)]
        dot: bool,
    },
    /// Known bounds on R(m,k).
    Bounds { m: usize, k: usize },
    /// The Andrásfai graph on 3k-1 vertices.
    Andrasfai {
        k: usize,
        #[arg(long)]
        dot: bool,
    },
    /// K_17 coloured by (i + j) mod 3.
    K17 {
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Subcommand)]
enum TuranCommand {
    /// Maximum edges of a K_{k+1}-free graph on n vertices.
    Bound { n: u64, k: u64 },
    /// The extremal complete k-partite graph.
    Graph {
        n: u64,
        k: u64,
        #[arg(long)]
        dot: bool,
    },
    /// Compare the bound with the extremal graph and, for n <= 7, exhaustive search.
    Verify { n: u64, k: u64 },
}

#[derive(Subcommand)]
enum DebruijnCommand {
    /// B(n,m) as a digraph.
    Graph {
        n: usize,
        m: usize,
        #[arg(long, conflicts_with = "flower")]
        dot: bool,
        /// Undirected, loop-free view as DOT.
        #[arg(long)]
        flower: bool,
    },
    /// Greedy prefer-largest De Bruijn word.
    Martin { n: usize, m: usize },
    /// Every Hamiltonian cycle, one word per line.
    Enumerate { n: usize, m: usize },
    /// Number of Hamiltonian cycles from the closed form.
    Count { n: usize, m: usize },
    /// Apply the symbol rotation to a word.
    Sigma { word: String },
    /// The rotation family of a seed and whether it is arc-disjoint.
    Family { seed: String },
    /// Check a list of words for shared arcs.
    Disjoint {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Search for seeds whose rotation family is arc-disjoint.
    SeedSearch(SeedSearchArgs),
}

#[derive(Args)]
struct SeedSearchArgs {
    n: usize,
    m: usize,
    /// Report every family instead of stopping at the first.
    #[arg(long)]
    all: bool,
    /// Time budget in seconds.
    #[arg(long, value_name = "SECS")]
    budget: Option<u64>,
    /// Node budget.
    #[arg(long, value_name = "N")]
    nodes: Option<u64>,
    /// Continue after the last seed recorded in this cache, appending to it.
    #[arg(long, value_name = "CACHE", conflicts_with = "cache")]
    resume: Option<PathBuf>,
    /// Append found seeds here (default: $ORDO_CACHE_DIR/seeds-n-m.jsonl when set).
    #[arg(long, value_name = "PATH")]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct ReproduceArgs {
    /// Skip the (3,3) enumeration and seed searches beyond (4,2).
    #[arg(long)]
    quick: bool,
    /// Seconds allowed per search entry.
    #[arg(long, default_value_t = 60, value_name = "SECS")]
    budget: u64,
    /// Run entries concurrently.
    #[arg(long)]
    parallel: bool,
    /// Seed for random tournaments.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Where to write the JSON report.
    #[arg(long, default_value = "ordo-report.json")]
    json: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Redei(args) => redei(args),
        Command::Ramsey(cmd) => ramsey(cmd),
        Command::Turan(cmd) => turan(cmd),
        Command::Debruijn(cmd) => debruijn(cmd),
        Command::Reproduce(args) => reproduce(args),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn redei(args: RedeiArgs) -> Result<u8> {
    let t = match (&args.file, args.random) {
        (Some(path), _) => Tournament::new(parse_digraph(&read(path)?)?)?,
        (None, Some(n)) => Tournament::random(n, &mut ChaCha8Rng::seed_from_u64(args.seed)),
        (None, None) => unreachable!("clap requires a file or --random"),
    };
    let path = redei_hamiltonian_path(&t);
    if args.dot {
        let arcs: Vec<(usize, usize)> = path.arcs().collect();
        let highlight = |u: usize, v: usize| arcs.contains(&(u, v)).then(|| "red".to_string());
        let style = DotStyle {
            name: "tournament",
            edge_color: Some(&highlight),
            ..Default::default()
        };
        print!("{}", digraph_to_dot(t.digraph(), &style));
    } else {
        let labels: Vec<String> = path
            .vertices()
            .iter()
            .map(|v| (v + 1).to_string())
            .collect();
        println!("{}", labels.join(" "));
    }
    Ok(0)
}

fn ramsey(cmd: RamseyCommand) -> Result<u8> {
    match cmd {
        RamseyCommand::Verify { file, spec } => {
            let coloring = parse_coloring(&read(&file)?)?;
            match verify_coloring(&coloring, &spec)? {
                ColoringVerdict::Good => println!("good"),
                ColoringVerdict::Monochromatic { color, vertices } => {
                    let labels: Vec<String> =
                        vertices.iter().map(|v| (v + 1).to_string()).collect();
                    println!(
                        "monochromatic K_{} in colour {color}: {}",
                        vertices.len(),
                        labels.join(" ")
                    );
                }
            }
        }
        RamseyCommand::Search { m, k, n, dot } => {
            let check = exhaustive_ramsey_check(m, k, n)?;
            match check.counterexample {
                None => println!(
                    "every 2-colouring of K_{n} has a red K_{m} or a blue K_{k} ({} nodes)",
                    check.nodes
                ),
                Some(c) if dot => print!("{}", coloring_to_dot(&c, &["red", "blue"])),
                Some(c) => {
                    println!(
                        "# K_{n} with no red K_{m} and no blue K_{k} ({} nodes)",
                        check.nodes
                    );
                    print!("{}", write_coloring(&c));
                }
            }
        }
        RamseyCommand::Bounds { m, k } => {
            for b in collect_bounds(m, k)? {
                let show =
                    |x: &Option<BigUint>| x.as_ref().map_or("?".to_string(), BigUint::to_string);
                let source = format!("{:?}", b.source);
                println!(
                    "{source:<14} {} <= R({m},{k}) <= {}  {}",
                    show(&b.lower),
                    show(&b.upper),
                    b.note
                );
            }
        }
        RamseyCommand::Andrasfai { k, dot } => {
            let g = andrasfai_graph(k)?;
            if dot {
                let name = format!("H_{}", 3 * k - 1);
                print!(
                    "{}",
                    graph_to_dot(
                        &g,
                        &DotStyle {
                            name: &name,
                            ..Default::default()
                        }
                    )
                );
            } else {
                print!("{}", write_graph(&g));
            }
        }
        RamseyCommand::K17 { dot } => {
            let c = k17_mod3_coloring();
            if dot {
                print!("{}", coloring_to_dot(&c, &K17_PALETTE));
            } else {
                println!(
                    "# colours: 0 {}, 1 {}, 2 {}",
                    K17_PALETTE[0], K17_PALETTE[1], K17_PALETTE[2]
                );
                print!("{}", write_coloring(&c));
            }
        }
    }
    Ok(0)
}

fn turan(cmd: TuranCommand) -> Result<u8> {
    match cmd {
        TuranCommand::Bound { n, k } => println!("{}", turan_max_edges(n, k)?),
        TuranCommand::Graph { n, k, dot } => {
            let g = turan_extremal_graph(n, k)?;
            if dot {
                let parts: Vec<String> = TuranParams::new(n, k)?
                    .part_sizes()
                    .iter()
                    .map(usize::to_string)
                    .collect();
                let name = format!("K_{{{}}}", parts.join(","));
                print!(
                    "{}",
                    graph_to_dot(
                        &g,
                        &DotStyle {
                            name: &name,
                            ..Default::default()
                        }
                    )
                );
            } else {
                print!("{}", write_graph(&g));
            }
        }
        TuranCommand::Verify { n, k } => {
            let bound = turan_max_edges(n, k)?;
            let g = turan_extremal_graph(n, k)?;
            let clique_free = has_clique(&g, k as usize + 1).is_none();
            println!(
                "bound {bound}, extremal graph {} edges, K_{}-free: {clique_free}",
                g.edge_count(),
                k + 1
            );
            let mut ok = clique_free && g.edge_count() as u64 == bound;
            if n as usize <= ORACLE_MAX_VERTICES {
                let oracle = max_edges_without_clique_oracle(n as usize, k as usize)?;
                println!("exhaustive maximum {oracle}");
                ok &= oracle as u64 == bound;
            } else {
                println!("exhaustive search skipped (n > {ORACLE_MAX_VERTICES})");
            }
            return Ok(if ok { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn word(text: &str) -> Result<DeBruijnWord> {
    DeBruijnWord::parse(text)
}

fn debruijn(cmd: DebruijnCommand) -> Result<u8> {
    match cmd {
        DebruijnCommand::Graph { n, m, dot, flower } => {
            let params = DBParams::new(n, m)?;
            if flower {
                print!("{}", export_flower(params));
            } else if dot {
                let label = |v: usize| params.vertex_label(v);
                let name = params.to_string();
                let style = DotStyle {
                    name: &name,
                    labels: Some(&label),
                    ..Default::default()
                };
                print!("{}", digraph_to_dot(&de_bruijn_graph(params), &style));
            } else {
                print!("{}", write_digraph(&de_bruijn_graph(params)));
            }
        }
        DebruijnCommand::Martin { n, m } => println!("{}", martin(DBParams::new(n, m)?).encode()),
        DebruijnCommand::Enumerate { n, m } => {
            for w in enumerate_hamiltonian_cycles(DBParams::new(n, m)?)? {
                println!("{}", w.encode());
            }
        }
        DebruijnCommand::Count { n, m } => {
            println!("{}", count_hamiltonian_cycles(DBParams::new(n, m)?))
        }
        DebruijnCommand::Sigma { word: text } => println!("{}", sigma(&word(&text)?).encode()),
        DebruijnCommand::Family { seed } => {
            let family = rotation_family(&word(&seed)?);
            for w in &family {
                println!("{}", w.encode());
            }
            return print_verdict(&pairwise_arc_disjoint(&family)?);
        }
        DebruijnCommand::Disjoint { words } => {
            let words = words.iter().map(|t| word(t)).collect::<Result<Vec<_>>>()?;
            return print_verdict(&pairwise_arc_disjoint(&words)?);
        }
        DebruijnCommand::SeedSearch(args) => return seed_search(args),
    }
    Ok(0)
}

fn print_verdict(verdict: &DisjointVerdict) -> Result<u8> {
    match verdict {
        DisjointVerdict::Disjoint => {
            println!("pairwise arc-disjoint");
            Ok(0)
        }
        DisjointVerdict::Conflict {
            first,
            second,
            shared,
        } => {
            println!(
                "words {} and {} share {}",
                first + 1,
                second + 1,
                shared.labels().join(", ")
            );
            Ok(1)
        }
    }
}

fn seed_search(args: SeedSearchArgs) -> Result<u8> {
    let params = DBParams::new(args.n, args.m)?;
    let cache = args.resume.clone().or(args.cache.clone()).or_else(|| {
        std::env::var_os(CACHE_DIR_VAR)
            .map(|dir| PathBuf::from(dir).join(format!("seeds-{}-{}.jsonl", args.n, args.m)))
    });
    let resume_after = match &args.resume {
        Some(path) => read_cache(path)?
            .iter()
            .rfind(|r| (r.n, r.m) == (args.n, args.m))
            .map(|r| DeBruijnWord::decode(&r.seed, params))
            .transpose()?,
        None => None,
    };
    if let Some(w) = &resume_after {
        eprintln!("resuming after {}", w.encode());
    }
    let options = SeedSearchOptions {
        find_all: args.all,
        node_budget: args.nodes,
        time_budget: args.budget.map(Duration::from_secs),
        resume_after,
    };
    let mut cache_error = None;
    let report = rotation_seed_search(params, &options, &mut |family, nodes| {
        println!("{}", family.seed().encode());
        if let Some(path) = &cache {
            let record = CacheRecord {
                n: args.n,
                m: args.m,
                seed: family.seed().encode(),
                timestamp: SystemTime::now()
                    .duration_since(UNIX_EPOCH)
                    .map_or(0, |d| d.as_secs()),
                nodes_explored: nodes,
            };
            if let Err(e) = append_cache_record(path, &record) {
                cache_error = Some(e);
                return ControlFlow::Break(());
            }
        }
        ControlFlow::Continue(())
    });
    if let Some(e) = cache_error {
        return Err(e);
    }
    eprintln!(
        "{:?}: {} families, {} nodes, {:.3} s",
        report.outcome,
        report.families.len(),
        report.nodes_explored,
        report.elapsed.as_secs_f64()
    );
    Ok(if report.outcome == SearchOutcome::BudgetExhausted {
        3
    } else {
        0
    })
}

fn reproduce(args: ReproduceArgs) -> Result<u8> {
    let options = ReproduceOptions {
        quick: args.quick,
        budget: Duration::from_secs(args.budget),
        parallel: args.parallel,
        seed: args.seed,
    };
    let entries = reproduce_all(&options);
    print!("{}", render_table(&entries));
    fs::write(&args.json, to_json(&entries))
        .map_err(|e| Error::Io(format!("{}: {e}", args.json.display())))?;
    eprintln!("report written to {}", args.json.display());
    Ok(exit_code(&entries) as u8)
}
