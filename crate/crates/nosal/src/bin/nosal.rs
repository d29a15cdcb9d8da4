//! Thin command-line front end over the library: generation, analysis,
//! verification, the structure dichotomy, annealing search, random blowups,
//! and the summary table. Exit code is nonzero iff a verification row fails.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use nosal::counting::{CountReport, ReportOptions};
use nosal::harness::{self, Family, OutputFormat, VerifySpec};
use nosal::search::{extremal_search, SearchConfig, SearchObjective};
use nosal::spectral;
use nosal::weights::{self, WeightedGraphFile};
use nosal::{codec, constructions, dichotomy, from_edge_list, Graph};

#[derive(Parser)]
#[command(name = "nosal", version, about = "spectral supersaturation toolkit")]
struct Cli {
    /// Output format: json, csv or text.
    #[arg(long, global = true, default_value = "json")]
    format: String,
    /// Seed for every randomized component.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Worker threads (0 = rayon default).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Residual tolerance for iterative spectral solvers.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate an extremal construction.
    Gen(GenArgs),
    /// Count invariants and certify a graph read from a file or stdin.
    Analyze(AnalyzeArgs),
    /// Run the claim verification suite.
    Verify(VerifyArgs),
    /// Structure decomposition of a graph.
    Dichotomy(DichotomyArgs),
    /// Simulated annealing over fixed-budget graph space.
    Search(SearchArgs),
    /// Random blowup of a weighted graph (JSON file or stdin).
    Blowup(BlowupArgs),
    /// Best-known summary statistics at one edge budget.
    Table1(Table1Args),
}

#[derive(Args)]
struct GenArgs {
    /// Family: clique-plus-star, k-st-plus, prism-blowup, book-construction,
    /// book-core, clique-joint-tight, kpartite-plus-edge, turan,
    /// complete-multipartite.
    family: String,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    s: Option<u64>,
    #[arg(long)]
    t: Option<u64>,
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated part sizes for complete-multipartite.
    #[arg(long)]
    parts: Option<String>,
    /// Graph encoding: g6 or edges.
    #[arg(long, default_value = "edges")]
    encoding: String,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Edge-list file, graph6 file, or '-' for stdin.
    input: Option<String>,
    /// Force input interpretation: auto, g6 or edges.
    #[arg(long, default_value = "auto")]
    input_format: String,
    /// Clique sizes r for generalized books and joints.
    #[arg(long, default_value = "2,3")]
    rs: String,
    /// Clique sizes t for exact clique counts.
    #[arg(long, default_value = "3,4")]
    ts: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Comma-separated family list (default: all).
    #[arg(long)]
    families: Option<String>,
    #[arg(long, default_value_t = 100)]
    m_min: u64,
    #[arg(long, default_value_t = 10_000)]
    m_max: u64,
}

#[derive(Args)]
struct DichotomyArgs {
    /// Edge-list or graph6 file, or '-' for stdin.
    input: Option<String>,
    #[arg(long, default_value_t = 0.1)]
    eps: f64,
}

#[derive(Args)]
struct SearchArgs {
    /// Objective: min-bk-ratio, min-c4-ratio, min-triangular-ratio, or
    /// max-lambda-brk-free (with --r and --k).
    #[arg(long)]
    objective: String,
    #[arg(long)]
    m: usize,
    #[arg(long, default_value_t = 10_000)]
    steps: usize,
    #[arg(long, default_value_t = 1)]
    restarts: usize,
    #[arg(long, default_value_t = 1.0)]
    temp: f64,
    #[arg(long, default_value_t = 0.9999)]
    decay: f64,
    #[arg(long, default_value_t = 0)]
    n_max: usize,
    #[arg(long, default_value_t = 3)]
    r: usize,
    #[arg(long, default_value_t = 2)]
    k: usize,
}

#[derive(Args)]
struct BlowupArgs {
    /// Weighted-graph JSON file, or '-' for stdin.
    input: Option<String>,
    /// Blowup scale: vertex i becomes floor(w_i N) vertices.
    #[arg(long = "N", default_value_t = 1000)]
    n_scale: usize,
}

#[derive(Args)]
struct Table1Args {
    #[arg(long, default_value_t = 10_000)]
    m: u64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global()
            .ok();
    }
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    let format = OutputFormat::parse(&cli.format).ok_or("format must be json, csv or text")?;
    match cli.command {
        Command::Gen(args) => {
            let (graph, prediction_json) = generate(&args)?;
            match args.encoding.as_str() {
                "g6" => println!("{}", codec::graph6_encode(&graph).map_err(|e| e.to_string())?),
                "edges" => print!("{}", graph.to_edge_list()),
                other => return Err(format!("unknown encoding {other:?}")),
            }
            if let Some(pred) = prediction_json {
                eprintln!("{pred}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Analyze(args) => {
            let g = read_graph(args.input.as_deref(), &args.input_format)?;
            let opts = ReportOptions {
                rs: parse_list(&args.rs)?,
                ts: parse_list(&args.ts)?,
                ..ReportOptions::default()
            };
            let report = CountReport::compute(&g, &opts).map_err(|e| e.to_string())?;
            let cert = spectral::spectral_radius(&g, cli.tol, spectral::DEFAULT_MAX_ITERS)
                .map_err(|e| e.to_string())?;
            let verdict = spectral::nosal_verdict(&g, &cert);
            let doc = serde_json::json!({
                "schema_version": harness::SCHEMA_VERSION,
                "lambda": cert.lambda,
                "residual": cert.residual,
                "rational_lower_bound": cert.rational_lower_bound.to_string(),
                "nosal": format!("{verdict:?}"),
                "counts": report,
            });
            match format {
                OutputFormat::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).map_err(|e| e.to_string())?
                ),
                OutputFormat::Csv => {
                    println!("{}", report.csv_header());
                    println!("{}", report.to_csv_row());
                }
                OutputFormat::Text => {
                    println!("n = {}, m = {}", report.n, report.m);
                    println!("lambda = {} (residual {})", cert.lambda, cert.residual);
                    println!("nosal verdict: {verdict:?}");
                    println!("counts: {}", serde_json::to_string(&report).unwrap());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let families = match args.families {
                None => Family::ALL.to_vec(),
                Some(list) => {
                    let mut out = Vec::new();
                    for name in list.split(',') {
                        out.push(
                            Family::parse(name.trim())
                                .ok_or_else(|| format!("unknown family {name:?}"))?,
                        );
                    }
                    out
                }
            };
            let spec = VerifySpec {
                families,
                m_lo: args.m_min,
                m_hi: args.m_max,
                seed: cli.seed,
            };
            let rows = harness::verify_suite(&spec);
            let gaps = harness::coverage_gaps(&rows);
            match format {
                OutputFormat::Json => println!("{}", harness::rows_to_json(&rows)),
                OutputFormat::Csv => print!("{}", harness::rows_to_csv(&rows)),
                OutputFormat::Text => print!("{}", harness::rows_to_text(&rows)),
            }
            if !gaps.is_empty() {
                eprintln!("coverage gaps: {gaps:?}");
            }
            if harness::has_failures(&rows) {
                Ok(ExitCode::FAILURE)
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Command::Dichotomy(args) => {
            let g = read_graph(args.input.as_deref(), "auto")?;
            let res = dichotomy::structural_dichotomy(&g, args.eps).map_err(|e| e.to_string())?;
            println!(
                "{}",
                serde_json::to_string_pretty(&res).map_err(|e| e.to_string())?
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Search(args) => {
            let objective = match args.objective.as_str() {
                "min-bk-ratio" => SearchObjective::MinBkRatio,
                "min-c4-ratio" => SearchObjective::MinC4Ratio,
                "min-triangular-ratio" => SearchObjective::MinTriangularRatio,
                "max-lambda-brk-free" => SearchObjective::MaxLambdaBrkFree {
                    r: args.r,
                    k: args.k,
                },
                other => return Err(format!("unknown objective {other:?}")),
            };
            let cfg = SearchConfig {
                m: args.m,
                n_max: args.n_max,
                objective,
                steps: args.steps,
                temp_init: args.temp,
                decay: args.decay,
                seed: cli.seed,
                restarts: args.restarts,
            };
            let record = extremal_search(&cfg).map_err(|e| e.to_string())?;
            println!(
                "{}",
                serde_json::to_string_pretty(&record).map_err(|e| e.to_string())?
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Blowup(args) => {
            let text = read_input(args.input.as_deref())?;
            let file: WeightedGraphFile =
                serde_json::from_str(&text).map_err(|e| format!("weighted graph JSON: {e}"))?;
            let wg = file.into_weighted_graph().map_err(|e| e.to_string())?;
            let blown = weights::random_blowup(&wg, args.n_scale, cli.seed);
            println!(
                "{}",
                codec::graph6_encode(&blown).map_err(|e| e.to_string())?
            );
            eprintln!(
                "vertices: {}, edges: {}, expected edges: {:.1}",
                blown.n(),
                blown.m(),
                weights::blowup_expected_edges(&wg, args.n_scale)
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Table1(args) => {
            let table = harness::table1_report(args.m, cli.seed, &[]);
            match format {
                OutputFormat::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&table).map_err(|e| e.to_string())?
                ),
                OutputFormat::Csv => {
                    println!("statistic,graph,observed,normalized,scaling");
                    for r in &table.rows {
                        println!(
                            "{},{},{},{},{}",
                            r.statistic,
                            r.graph.replace(',', ";"),
                            r.observed,
                            r.normalized,
                            r.scaling
                        );
                    }
                }
                OutputFormat::Text => print!("{}", harness::table_to_text(&table)),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn generate(args: &GenArgs) -> Result<(Graph, Option<String>), String> {
    let need = |v: Option<u64>, name: &str| v.ok_or(format!("--{name} is required"));
    let out = match args.family.as_str() {
        "clique-plus-star" => constructions::clique_plus_star(need(args.m, "m")?),
        "k-st-plus" => match (args.s, args.t) {
            (Some(s), Some(t)) => constructions::k_st_plus(s, t),
            _ => constructions::k_st_plus_near(need(args.m, "m")?),
        },
        "prism-blowup" => constructions::prism_blowup(need(args.k, "k")?),
        "book-construction" => constructions::book_construction(need(args.m, "m")?),
        "book-core" => constructions::book_core(need(args.m, "m")?),
        "clique-joint-tight" => {
            constructions::clique_joint_tight(need(args.m, "m")?, args.r.unwrap_or(3))
        }
        "kpartite-plus-edge" => constructions::kpartite_plus_edge(
            args.t.unwrap_or(3) as usize,
            args.r.unwrap_or(3),
        ),
        "turan" => {
            let n = args.n.ok_or("--n is required")?;
            let r = args.r.ok_or("--r is required")?;
            let g = constructions::turan(n, r).map_err(|e| e.to_string())?;
            return Ok((g, None));
        }
        "complete-multipartite" => {
            let parts_raw = args.parts.clone().ok_or("--parts is required")?;
            let parts: Vec<usize> = parts_raw
                .split(',')
                .map(|p| p.trim().parse().map_err(|_| format!("bad part {p:?}")))
                .collect::<Result<_, _>>()?;
            let g = constructions::complete_multipartite(&parts).map_err(|e| e.to_string())?;
            return Ok((g, None));
        }
        other => return Err(format!("unknown family {other:?}")),
    }
    .map_err(|e| e.to_string())?;
    let pred = serde_json::json!({
        "construction": out.name,
        "params": out.params,
        "predictions": out.predictions,
    });
    Ok((out.graph, Some(pred.to_string())))
}

fn read_input(path: Option<&str>) -> Result<String, String> {
    match path {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| e.to_string())?;
            Ok(buf)
        }
        Some(p) => std::fs::read_to_string(p).map_err(|e| format!("{p}: {e}")),
    }
}

fn read_graph(path: Option<&str>, input_format: &str) -> Result<Graph, String> {
    let text = read_input(path)?;
    let trimmed = text.trim();
    let looks_g6 = !trimmed.contains(char::is_whitespace);
    match input_format {
        "g6" => codec::graph6_decode(trimmed).map_err(|e| e.to_string()),
        "edges" => Ok(from_edge_list(&text).map_err(|e| e.to_string())?.graph),
        "auto" => {
            if looks_g6 {
                codec::graph6_decode(trimmed).map_err(|e| e.to_string())
            } else {
                Ok(from_edge_list(&text).map_err(|e| e.to_string())?.graph)
            }
        }
        other => Err(format!("unknown input format {other:?}")),
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| format!("bad value {p:?}")))
        .collect()
}
