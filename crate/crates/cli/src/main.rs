//! `hypermatch`: matching polynomials, largest matching roots, shifting and
//! verification suites for uniform hypergraphs.
//!
//! Exit codes: 0 on success, 1 on a domain error (a JSON object with an
//! `error` tag on stdout), 2 on a usage error.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use hypermatch::constructions::{complete_k_graph, complete_plus_star, extremal_h, extremal_l, k_cycle, k_star, power_hypergraph};
use hypermatch::harness::census::enumerate_census;
use hypermatch::harness::random::{random_connected, resolve_seed};
use hypermatch::harness::verify::{self, VerificationReport};
use hypermatch::hgraph::text;
use hypermatch::rootfind::{check_preceq, default_eps};
use hypermatch::spectral::{spectral_radius, DEFAULT_MAX_ITER, DEFAULT_TOL};
use hypermatch::transform::{edge_move, shift_hypergraph, star_join, ShiftSpec, StarJoinSpec};
use hypermatch::walktree::{build_walk_tree, VertexOrder, DEFAULT_WALK_CAP};
use hypermatch::{compare_lambda, largest_matching_root, matching_counts, Error, Hypergraph};

#[derive(Parser, Debug)]
#[command(name = "hypermatch", version, about = "Matching polynomials and largest matching roots of uniform hypergraphs")]
struct Cli {
    /// Relative precision for largest matching roots [default: 2^-40].
    #[arg(long, global = true)]
    eps: Option<f64>,
    /// Worker threads for `census` and `verify`.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomized suites; falls back to HYPERMATCH_SEED.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Matching counts and matching polynomial.
    Poly { input: String },
    /// Isolating interval for the largest matching root.
    Lambda { input: String },
    /// Compares the largest matching roots of two hypergraphs and decides
    /// whether the first is below the second in the matching ordering.
    Compare { a: String, b: String },
    /// The (u, v)-shift.
    Shift {
        input: String,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
    },
    /// Moves edges onto `u`; each `--edge I:V` moves edge I off vertex V.
    Move {
        input: String,
        #[arg(long)]
        u: usize,
        #[arg(long = "edge", required = true)]
        edges: Vec<String>,
    },
    /// Star join; each `--part FILE:ROOT@U` glues ROOT of FILE onto host vertex U.
    Join {
        host: String,
        #[arg(long = "part", required = true)]
        parts: Vec<String>,
    },
    /// Builds a named family.
    Make {
        family: Family,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        /// Cycle length.
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        /// Base graph for `power`.
        #[arg(long)]
        graph: Option<String>,
    },
    /// Walk tree rooted at `--root`.
    Walktree {
        input: String,
        #[arg(long, default_value_t = 0)]
        root: usize,
        /// Comma-separated vertex sequence, smallest first [default: 0, 1, ...].
        #[arg(long)]
        order: Option<String>,
        #[arg(long, default_value_t = DEFAULT_WALK_CAP)]
        cap: usize,
        /// Print only the tree in the text format.
        #[arg(long)]
        tree_only: bool,
    },
    /// Spectral radius of the adjacency tensor by power iteration.
    Rho {
        input: String,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
        max_iter: usize,
    },
    /// Lists every cactus in the census, one JSON line each.
    Census {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        linear: bool,
    },
    /// Runs a verification suite, one JSON report per line.
    Verify {
        #[arg(long)]
        theorem: Theorem,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 6)]
        max_m: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Star,
    Cycle,
    /// `t` two-cycles and pendant edges through one apex.
    CactusH,
    /// `t` linear triangles and pendant edges through one apex.
    CactusL,
    Complete,
    CompletePlusStar,
    Power,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Theorem {
    MainCactus,
    MainLinearCactus,
    ShiftMonotonicity,
    /// All four ordering suites.
    Ordering,
    SpanningSubgraph,
    SpanningSubgraphDisconnected,
    ShiftEdgeRemoval,
    ShiftOrdering,
    PendantEdges,
    WalkTree,
    StarJoin,
    DegreeOneRelocation,
    PendantTree,
    TreeStar,
}

enum Failure {
    Domain(Error),
    Io(String, std::io::Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

type Outcome = Result<String, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn read_source(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Io(path.into(), e))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Io(path.into(), e))
}

fn load(path: &str) -> Result<Hypergraph, Failure> {
    Ok(text::parse(&read_source(path)?)?)
}

fn line(v: Value) -> String {
    format!("{v}\n")
}

fn need(value: Option<usize>, flag: &str, what: &str) -> Result<usize, Failure> {
    value.ok_or_else(|| usage(format!("{what} needs --{flag}")))
}

/// Splits `A<sep>B` at the last `sep` and parses `B`.
fn split_last<'a>(s: &'a str, sep: char, spec: &str) -> Result<(&'a str, usize), Failure> {
    let (a, b) = s.rsplit_once(sep).ok_or_else(|| usage(format!("expected {spec}, got {s:?}")))?;
    let b = b.parse().map_err(|_| usage(format!("expected {spec}, got {s:?}")))?;
    Ok((a, b))
}

fn eps_of(cli: &Cli) -> Result<BigRational, Failure> {
    match cli.eps {
        None => Ok(default_eps()),
        Some(e) if e > 0.0 && e < 1.0 => Ok(BigRational::from_float(e).expect("finite")),
        Some(e) => Err(usage(format!("--eps must lie in (0, 1), got {e}"))),
    }
}

#[allow(clippy::too_many_arguments)]
fn make(family: Family, k: Option<usize>, m: Option<usize>, t: Option<usize>, l: Option<usize>, n: Option<usize>, p: Option<usize>, graph: Option<&str>) -> Outcome {
    let name = family.to_possible_value().expect("no skipped variants").get_name().to_owned();
    let k = need(k, "k", &name)?;
    let h = match family {
        Family::Star => k_star(k, need(m, "m", &name)?)?,
        Family::Cycle => k_cycle(k, need(l, "l", &name)?)?,
        Family::CactusH => extremal_h(k, need(m, "m", &name)?, need(t, "t", &name)?)?,
        Family::CactusL => extremal_l(k, need(m, "m", &name)?, need(t, "t", &name)?)?,
        Family::Complete => complete_k_graph(need(n, "n", &name)?, k)?,
        Family::CompletePlusStar => complete_plus_star(need(n, "n", &name)?, need(p, "p", &name)?, k)?,
        Family::Power => {
            let path = graph.ok_or_else(|| usage("power needs --graph"))?;
            power_hypergraph(&load(path)?, k)?
        }
    };
    Ok(text::to_text(&h))
}

fn walktree(input: &str, root: usize, order: Option<&str>, cap: usize, tree_only: bool) -> Outcome {
    let h = load(input)?;
    let order = match order {
        None => VertexOrder::natural(h.n()),
        Some(s) => {
            let seq = s
                .split(',')
                .map(|x| x.trim().parse())
                .collect::<Result<Vec<usize>, _>>()
                .map_err(|_| usage(format!("--order must be a comma-separated vertex list, got {s:?}")))?;
            VertexOrder::from_sequence(&seq)?
        }
    };
    let t = build_walk_tree(&h, &order, root, cap)?;
    if tree_only {
        return Ok(text::to_text(&t.tree));
    }
    let walks: Vec<Value> = t
        .walks
        .iter()
        .enumerate()
        .map(|(id, w)| json!({ "id": id, "vertices": w.vertices, "edges": w.edges }))
        .collect();
    Ok(line(json!({ "tree": text::to_text(&t.tree), "walks": walks })))
}

fn rho(input: &str, tol: f64, max_iter: usize) -> Outcome {
    if tol.is_nan() || tol <= 0.0 {
        return Err(usage(format!("--tol must be positive, got {tol}")));
    }
    let r = spectral_radius(&load(input)?, tol, max_iter)?;
    Ok(line(json!({
        "rho_approx": r.value,
        "lower_approx": r.lower,
        "upper_approx": r.upper,
        "residual_approx": r.residual,
        "iterations": r.iterations,
        "vector_approx": r.vector,
    })))
}

#[allow(clippy::too_many_arguments)]
fn run_verify(theorem: Theorem, k: usize, m: Option<usize>, t: Option<usize>, n: Option<usize>, p: Option<usize>, samples: usize, max_m: usize, seed: u64) -> Result<Vec<VerificationReport>, Failure> {
    let id = theorem.to_possible_value().expect("no skipped variants").get_name().to_owned();
    Ok(match theorem {
        Theorem::MainCactus | Theorem::MainLinearCactus => {
            let linear = theorem == Theorem::MainLinearCactus;
            vec![verify::verify_cactus_theorem(k, need(m, "m", &id)?, need(t, "t", &id)?, linear)?]
        }
        Theorem::ShiftMonotonicity => vec![verify::verify_shift_monotonicity(k, samples, max_m, seed)],
        Theorem::Ordering => verify::verify_ordering_lemmas(k, samples, max_m, seed),
        Theorem::SpanningSubgraph | Theorem::SpanningSubgraphDisconnected | Theorem::ShiftEdgeRemoval | Theorem::ShiftOrdering => {
            let name = match theorem {
                Theorem::SpanningSubgraph => "spanning-subgraph",
                Theorem::SpanningSubgraphDisconnected => "spanning-subgraph-disconnected",
                Theorem::ShiftEdgeRemoval => "shift-edge-removal",
                _ => "shift-ordering",
            };
            verify::verify_ordering_lemmas(k, samples, max_m, seed)
                .into_iter()
                .filter(|r| r.theorem == name)
                .collect()
        }
        Theorem::PendantEdges => vec![verify::verify_pendant_theorem(k, need(n, "n", &id)?, need(p, "p", &id)?)?],
        Theorem::WalkTree => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let graphs: Vec<Hypergraph> = (0..samples)
                .map(|_| {
                    let size = rng.gen_range(1..=max_m.max(1));
                    random_connected(&mut rng, k, size)
                })
                .collect();
            vec![verify::verify_walk_tree(&graphs, 3, seed)]
        }
        Theorem::StarJoin => vec![verify::verify_star_join(k, samples, seed)],
        Theorem::DegreeOneRelocation => vec![verify::verify_degree_one_relocation(k, samples, seed)],
        Theorem::PendantTree => vec![verify::verify_pendant_tree(k, samples, seed)],
        Theorem::TreeStar => vec![verify::verify_tree_star(k, max_m)?],
    })
}

fn execute(cli: &Cli) -> Outcome {
    let eps = eps_of(cli)?;
    match &cli.command {
        Command::Poly { input } => Ok(line(matching_counts(&load(input)?).to_json())),
        Command::Lambda { input } => Ok(line(largest_matching_root(&load(input)?, &eps)?.to_json())),
        Command::Compare { a, b } => {
            let (g, h) = (load(a)?, load(b)?);
            let ordering = compare_lambda(&g, &h, &eps)?;
            let preceq = check_preceq(&g, &h)?;
            Ok(line(json!({ "ordering": ordering, "preceq": preceq })))
        }
        Command::Shift { input, u, v } => {
            let h = load(input)?;
            Ok(text::to_text(&shift_hypergraph(&h, ShiftSpec::new(*u, *v)?)?))
        }
        Command::Move { input, u, edges } => {
            let h = load(input)?;
            let moves = edges
                .iter()
                .map(|s| {
                    let (i, v) = split_last(s, ':', "EDGE:VERTEX")?;
                    let i = i.parse().map_err(|_| usage(format!("expected EDGE:VERTEX, got {s:?}")))?;
                    Ok((i, v))
                })
                .collect::<Result<Vec<_>, Failure>>()?;
            Ok(text::to_text(&edge_move(&h, *u, &moves)?))
        }
        Command::Join { host, parts } => {
            let host = load(host)?;
            let mut attachments = Vec::new();
            let mut loaded = Vec::new();
            for s in parts {
                let (rest, u) = split_last(s, '@', "FILE:ROOT@U")?;
                let (file, root) = split_last(rest, ':', "FILE:ROOT@U")?;
                attachments.push(u);
                loaded.push((load(file)?, root));
            }
            let joined = star_join(&StarJoinSpec { host, attachments, parts: loaded })?;
            Ok(text::to_text(&joined.graph))
        }
        Command::Make { family, k, m, t, l, n, p, graph } => make(*family, *k, *m, *t, *l, *n, *p, graph.as_deref()),
        Command::Walktree { input, root, order, cap, tree_only } => walktree(input, *root, order.as_deref(), *cap, *tree_only),
        Command::Rho { input, tol, max_iter } => rho(input, *tol, *max_iter),
        Command::Census { k, m, t, linear } => {
            let census = enumerate_census(*k, *m, *t, *linear)?;
            Ok(census.json_lines().into_iter().map(line).collect())
        }
        Command::Verify { theorem, k, m, t, n, p, samples, max_m } => {
            let seed = resolve_seed(cli.seed);
            let reports = run_verify(*theorem, *k, *m, *t, *n, *p, *samples, *max_m, seed)?;
            Ok(reports.into_iter().map(|r| line(r.to_json())).collect())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.jobs {
        Some(0) => Err(usage("--jobs must be at least 1")),
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(usage(format!("cannot start {j} worker threads: {e}"))),
        },
        None => execute(&cli),
    };
    match outcome {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Domain(e)) => {
            println!("{}", json!({ "error": e.kind(), "message": e.to_string() }));
            ExitCode::from(1)
        }
        Err(Failure::Io(path, e)) => {
            println!("{}", json!({ "error": "Io", "message": format!("{path}: {e}") }));
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
