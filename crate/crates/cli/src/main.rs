use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use clustered::colouring::{
    defect_oracle, heart_colouring, optimal_cluster_colouring, parity_colouring, two_colour, verify_clustering,
    verify_defect, weak_closure_colouring, TwoColourOutcome, WeakClosureOutcome,
};
use clustered::generators;
use clustered::harness::{run_suite, SuiteConfig, SUITES};
use clustered::minors::has_minor;
use clustered::{Colouring, Graph, Limits, Search};

/// Clustered colouring experiments on small graphs.
///
/// Every flag can also be set through an environment variable with the
/// CLUSTERCOL_ prefix, for example CLUSTERCOL_SEED.
#[derive(Parser)]
#[command(name = "clustercol", version)]
struct Cli {
    /// Seed for random generators and suites.
    #[arg(long, global = true, env = "CLUSTERCOL_SEED", default_value_t = 2024)]
    seed: u64,
    /// Node budget for each exhaustive search.
    #[arg(long, global = true, env = "CLUSTERCOL_BUDGET_NODES")]
    budget_nodes: Option<u64>,
    /// Wall-clock budget for the whole command.
    #[arg(long, global = true, env = "CLUSTERCOL_BUDGET_SECONDS")]
    budget_seconds: Option<f64>,
    /// Graph format for `gen` and `export`.
    #[arg(long, global = true, env = "CLUSTERCOL_FORMAT", value_enum, default_value_t = GraphFormat::Edgelist)]
    format: GraphFormat,
    /// Write the result here instead of standard output.
    #[arg(long, global = true, env = "CLUSTERCOL_OUT")]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Parity,
    Two,
    Heart,
    Weakclosure,
    Oracle,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named graph: path N, cycle N, complete N, star N, fan N,
    /// fat-star N, fat-path N, closure H K, weak-closure H K, ternary K C,
    /// x-family K C [INDEX], random N P.
    Gen {
        family: String,
        params: Vec<String>,
    },
    /// Colour a graph read from FILE ("-" for standard input).
    Colour {
        graph: PathBuf,
        #[arg(long, value_enum)]
        algo: Algo,
        /// Pattern order for `two`, tree arity for `heart` and `weakclosure`.
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Tree depth for `heart` and `weakclosure`.
        #[arg(long, default_value_t = 2)]
        h: usize,
        /// Treewidth bound for `heart`.
        #[arg(long, default_value_t = 1)]
        w: usize,
        /// Clustering for `oracle`.
        #[arg(long, default_value_t = 1)]
        c: usize,
        /// BFS root for `parity`.
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
    /// Check a colouring (one colour per line) against a graph.
    Verify {
        graph: PathBuf,
        colouring: PathBuf,
        /// Also check that every vertex has at most this many same-coloured neighbours.
        #[arg(long)]
        defect: Option<usize>,
    },
    /// Decide whether PATTERN is a minor of HOST.
    Minor { host: PathBuf, pattern: PathBuf },
    /// Fewest colours with bounded clustering or bounded defect.
    Oracle {
        graph: PathBuf,
        #[arg(long, conflicts_with = "defect", required_unless_present = "defect")]
        clustering: Option<usize>,
        #[arg(long)]
        defect: Option<usize>,
    },
    /// Run an experiment suite, or `all` of them.
    Suite { name: String },
    /// Convert a graph file to the format given by --format.
    Export { graph: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn limits(cli: &Cli) -> Result<Limits> {
    let mut l = Limits::default();
    if let Some(n) = cli.budget_nodes {
        l.search_nodes = n;
        l.oracle_nodes = n;
    }
    if let Some(s) = cli.budget_seconds {
        let d = Duration::try_from_secs_f64(s).context("--budget-seconds must be a nonnegative number")?;
        l = l.with_time_limit(d);
    }
    Ok(l)
}

fn read_graph(path: &Path) -> Result<Graph> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    Graph::parse_edge_list(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json(cli: &Cli, v: &Value) -> Result<()> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    emit(cli, &s)
}

fn graph_text(g: &Graph, f: GraphFormat) -> String {
    match f {
        GraphFormat::Edgelist => g.to_edge_list(),
        GraphFormat::Dot => g.to_dot(),
    }
}

fn num<T: std::str::FromStr>(params: &[String], i: usize, what: &str) -> Result<T> {
    let Some(s) = params.get(i) else { bail!("missing parameter {what}") };
    s.parse().map_err(|_| anyhow::anyhow!("parameter {what} is not a valid number: {s:?}"))
}

fn generate(family: &str, p: &[String], seed: u64, l: &Limits) -> Result<Graph> {
    let g = match family {
        "path" => Graph::path(num(p, 0, "N")?),
        "cycle" => Graph::cycle(num(p, 0, "N")?),
        "complete" => Graph::complete(num(p, 0, "N")?),
        "star" => Graph::star(num(p, 0, "N")?),
        "fan" => generators::fan(num(p, 0, "N")?)?,
        "fat-star" => generators::fat_star(num(p, 0, "N")?)?,
        "fat-path" => generators::fat_path(num(p, 0, "N")?)?,
        "closure" => generators::closure_tree(num(p, 0, "H")?, num(p, 1, "K")?)?,
        "weak-closure" => generators::weak_closure_tree(num(p, 0, "H")?, num(p, 1, "K")?)?,
        "ternary" => generators::ternary_lower_bound(num(p, 0, "K")?, num(p, 1, "C")?, l)?,
        "x-family" => {
            let index: usize = if p.len() > 2 { num(p, 2, "INDEX")? } else { 0 };
            let members = generators::x_family(num(p, 0, "K")?, num(p, 1, "C")?, index + 1, l)?;
            match members.into_iter().nth(index) {
                Some(g) => g,
                None => bail!("the family has no member {index}"),
            }
        }
        "random" => generators::random_graph(num(p, 0, "N")?, num(p, 1, "P")?, seed)?,
        other => bail!("unknown family {other:?}"),
    };
    Ok(g)
}

fn search_json<T>(s: &Search<T>, f: impl Fn(&T) -> Value) -> Value {
    match s {
        Search::Found(t) => json!({ "result": s.label(), "witness": f(t) }),
        _ => json!({ "result": s.label() }),
    }
}

fn coloured(g: &Graph, col: &Colouring) -> Result<Value> {
    let report = verify_clustering(g, col)?;
    Ok(json!({ "colouring": col, "report": report }))
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let l = limits(cli)?;
    match &cli.command {
        Command::Gen { family, params } => {
            let g = generate(family, params, cli.seed, &l)?;
            emit(cli, &graph_text(&g, cli.format))?;
        }
        Command::Export { graph } => {
            let g = read_graph(graph)?;
            emit(cli, &graph_text(&g, cli.format))?;
        }
        Command::Colour { graph, algo, k, h, w, c, root } => {
            let g = read_graph(graph)?;
            let v = match algo {
                Algo::Parity => coloured(&g, &parity_colouring(&g, *root)?)?,
                Algo::Two => match two_colour(&g, *k)? {
                    TwoColourOutcome::Coloured(col) => coloured(&g, &col)?,
                    TwoColourOutcome::Witness(m) => json!({ "witness": m }),
                },
                Algo::Heart => coloured(&g, &heart_colouring(&g, *h, *k, *w, &l)?)?,
                Algo::Weakclosure => match weak_closure_colouring(&g, *h, *k, &l)? {
                    WeakClosureOutcome::Coloured(col) => coloured(&g, &col)?,
                    WeakClosureOutcome::Witness(m) => json!({ "witness": m }),
                },
                Algo::Oracle => {
                    let out = optimal_cluster_colouring(&g, *c, &l)?;
                    let mut v = coloured(&g, &out.witness)?;
                    v["lower"] = json!(out.lower);
                    v["upper"] = json!(out.upper);
                    v
                }
            };
            emit_json(cli, &v)?;
        }
        Command::Verify { graph, colouring, defect } => {
            let g = read_graph(graph)?;
            let text = fs::read_to_string(colouring).with_context(|| format!("reading {}", colouring.display()))?;
            let col = Colouring::parse(&text)?;
            let report = verify_clustering(&g, &col)?;
            let mut v = json!({ "report": report });
            if let Some(d) = defect {
                let ok = verify_defect(&g, &col, *d);
                v["defect_ok"] = json!(ok);
                emit_json(cli, &v)?;
                return Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE });
            }
            emit_json(cli, &v)?;
        }
        Command::Minor { host, pattern } => {
            let g = read_graph(host)?;
            let h = read_graph(pattern)?;
            let s = has_minor(&g, &h, &l);
            emit_json(cli, &search_json(&s, |m| json!(m.branch_sets)))?;
        }
        Command::Oracle { graph, clustering, defect } => {
            let g = read_graph(graph)?;
            let out = match (clustering, defect) {
                (Some(c), _) => optimal_cluster_colouring(&g, *c, &l)?,
                (None, Some(d)) => defect_oracle(&g, *d, &l)?,
                (None, None) => bail!("give --clustering or --defect"),
            };
            emit_json(cli, &json!(out))?;
        }
        Command::Suite { name } => {
            let config = SuiteConfig { seed: cli.seed, limits: l.clone() };
            let names: Vec<&str> = if name == "all" { SUITES.iter().map(|(n, _)| *n).collect() } else { vec![name.as_str()] };
            let mut reports = Vec::new();
            for n in names {
                reports.push(run_suite(n, &config)?);
            }
            let passed = reports.iter().all(|r| r.passed());
            for r in &reports {
                for c in &r.claims {
                    eprintln!("{:<14} {:<34} {}", r.suite, c.id, serde_json::to_string(&c.status)?.trim_matches('"'));
                }
            }
            let mut text = if reports.len() == 1 {
                serde_json::to_string_pretty(&reports[0])?
            } else {
                serde_json::to_string_pretty(&reports)?
            };
            text.push('\n');
            emit(cli, &text)?;
            return Ok(if passed { ExitCode::SUCCESS } else { ExitCode::FAILURE });
        }
    }
    Ok(ExitCode::SUCCESS)
}
