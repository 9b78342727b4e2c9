//! Command-line frontend: every pipeline of the toolkit behind one binary.
//!
//! Output is JSON (default) or text; identical `(argv, seed)` produce
//! byte-identical JSON. Exit codes: 0 success/pass, 1 claim failure,
//! 2 usage or input error, 3 budget exhaustion.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use symgraph_core::backtrack::{self, Budget as NodeBudget};
use symgraph_core::cosetgraph::{
    analyze_spec, arc_transitivity_check, build_graph, graph_from_edge_list_text, graph_props,
    quotient_graph, stabilizer_rpart_check, Graph, GraphJson,
};
use symgraph_core::numth::{self, cyclotomic, table1, PrimePower};
use symgraph_core::perm::Permutation;
use symgraph_core::search::{self, claims, Ambient, Mode, SearchBudget, SearchTask};
use symgraph_core::stabchain::{coset_action, is_simple_monte_carlo, PermGroup};
use symgraph_core::{atlas, Error};

#[derive(Parser)]
#[command(name = "symgraph", version, about = "Exact permutation-group and coset-graph computations")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for every randomized component (embedded in reports).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for parallel candidate certification.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Number-theoretic kernels.
    Numth {
        #[command(subcommand)]
        cmd: NumthCmd,
    },
    /// Exceptional-triple table enumeration.
    Table1 {
        #[command(subcommand)]
        cmd: Table1Cmd,
    },
    /// Group computations on generator files or catalogue names.
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// Coset-graph analysis and construction.
    Graph {
        #[command(subcommand)]
        cmd: GraphCmd,
    },
    /// The arc-element search pipeline.
    Search {
        #[command(subcommand)]
        cmd: SearchCmd,
    },
    /// Reproducible claims.
    Claims {
        #[command(subcommand)]
        cmd: ClaimsCmd,
    },
    /// The verified group database.
    Atlas {
        #[command(subcommand)]
        cmd: AtlasCmd,
    },
}

#[derive(Subcommand)]
enum NumthCmd {
    /// Cyclotomic value and primitive part of q^m - 1.
    Phi {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        q: u64,
    },
    /// Exhaustive scan for trivial primitive parts.
    Zsig {
        #[arg(long, default_value_t = 20)]
        max_m: u64,
        #[arg(long, default_value_t = 32)]
        max_q: u64,
    },
    /// Prime-ratio consequences for (q^d - 1)/(q - 1).
    LemmaR {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        q: u64,
    },
    /// Largest p-power dividing n.
    Ppart {
        #[arg(long)]
        n: BigUint,
        #[arg(long)]
        p: u64,
    },
}

#[derive(Subcommand)]
enum Table1Cmd {
    /// Enumerate instances of one line (or all) under parameter caps.
    Enumerate {
        /// Line id: 1-17, with sub-rows 11a/11b and 14a-14d.
        #[arg(long)]
        line: Option<String>,
        #[arg(long, default_value_t = 30)]
        bound: u64,
        #[arg(long, default_value_t = 16)]
        max_p: u64,
    },
}

#[derive(Args)]
struct GroupArg {
    /// Catalogue name (A12, M24, PSL2(11), ...) or a generator-file path.
    #[arg(long = "file")]
    file: String,
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Exact order from a verified stabilizer chain.
    Order(GroupArg),
    /// Point stabilizer.
    Stab {
        #[command(flatten)]
        group: GroupArg,
        /// 0-based point.
        #[arg(long)]
        point: u32,
    },
    /// Orbit of a point.
    Orbit {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        point: u32,
    },
    /// Normalizer of a subgroup.
    Normalizer {
        #[command(flatten)]
        group: GroupArg,
        /// Subgroup: name/path, or `stab:<point>` relative to --file.
        #[arg(long)]
        sub: String,
    },
    /// Centralizer of a subgroup.
    Centralizer {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        sub: String,
    },
    /// Intersection of two groups.
    Intersect {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        other: String,
    },
    /// Derived series, solvability, perfectness.
    Derived {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, default_value_t = 64)]
        max_steps: usize,
    },
    /// Simplicity verdict with certification.
    Simple {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long, default_value_t = 4)]
        trials: u32,
    },
    /// Coset action on a subgroup.
    CosetAction {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        sub: String,
        #[arg(long, default_value_t = 1_000_000)]
        max_index: usize,
    },
    /// Transitivity and a minimal block system.
    Blocks(GroupArg),
    /// Certify a subgroup factorization g = x * y.
    FactorCheck {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
}

#[derive(Subcommand)]
enum GraphCmd {
    /// Predicates of Cos(G, H, x) without building the graph.
    Analyze {
        #[arg(long)]
        group: String,
        #[arg(long)]
        h: String,
        /// Arc element in cycle notation.
        #[arg(long)]
        x: String,
    },
    /// Materialize the coset graph.
    Build {
        #[arg(long)]
        group: String,
        #[arg(long)]
        h: String,
        #[arg(long)]
        x: String,
        #[arg(long, default_value_t = 100_000)]
        max_vertices: usize,
        /// Write the graph (json or edge-list by extension) here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quotient by the orbits of a subgroup of automorphisms.
    Quotient {
        /// Graph file (.json or edge list with --n).
        #[arg(long)]
        graph: PathBuf,
        /// Vertex count for edge-list input.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        group: String,
        #[arg(long)]
        k: String,
        #[arg(long, default_value_t = false)]
        allow_two_orbits: bool,
    },
    /// Exact BFS-derived properties of a graph file.
    Props {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        n: Option<usize>,
    },
    /// The r-part conditions on a vertex stabilizer.
    Rpart {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = 0)]
        vertex: u32,
        #[arg(long)]
        r: u64,
    },
}

#[derive(Subcommand)]
enum SearchCmd {
    /// The normalizer-based arc-element search.
    Remark {
        /// Vertex-stabilizer candidate: name/path, or `stab:<point>` of the
        /// ambient group.
        #[arg(long)]
        h_file: String,
        #[arg(long)]
        r: u64,
        /// `alt`, `sym`, or a group name/path.
        #[arg(long, default_value = "alt")]
        ambient: String,
        #[arg(long, value_enum, default_value_t = CliMode::Exhaustive)]
        mode: CliMode,
        /// Random samples in randomized mode.
        #[arg(long, default_value_t = 20_000)]
        budget: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CliMode {
    Exhaustive,
    Randomized,
}

#[derive(Subcommand)]
enum ClaimsCmd {
    /// Run one claim by id, or `all`.
    Run { id: String },
    /// List registered claim ids.
    List,
}

#[derive(Subcommand)]
enum AtlasCmd {
    /// List the catalogue.
    List,
    /// Re-verify every catalogue entry (orders, formulas, simplicity).
    Verify {
        #[arg(long, default_value_t = 3)]
        trials: u32,
    },
}

#[derive(Serialize)]
struct Envelope {
    schema_version: u32,
    command: String,
    seed: u64,
    report: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded { .. }
                | Error::NoHallSubgroupFound { .. }
                | Error::FactorizationTimeout { .. }
                | Error::IndexExceedsLimit { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn emit(cli: &Cli, command: &str, report: Value, text: String) -> symgraph_core::Result<()> {
    let payload = match cli.format {
        Format::Json => {
            let envelope = Envelope {
                schema_version: 1,
                command: command.to_string(),
                seed: cli.seed,
                report,
            };
            serde_json::to_string_pretty(&envelope)? + "\n"
        }
        Format::Text => text,
    };
    match &cli.output {
        Some(path) => std::fs::write(path, payload)?,
        None => {
            std::io::stdout().write_all(payload.as_bytes())?;
        }
    }
    Ok(())
}

/// Resolves `--sub stab:<point>` relative to a parent, else a name/path.
fn resolve_sub(parent: &PermGroup, arg: &str) -> symgraph_core::Result<PermGroup> {
    if let Some(point) = arg.strip_prefix("stab:") {
        let point: u32 = point
            .parse()
            .map_err(|_| Error::InvalidParams(format!("bad stab point {arg:?}")))?;
        return parent.point_stabilizer(point);
    }
    atlas::resolve_group(arg)
}

fn load_graph_file(path: &PathBuf, n: Option<usize>) -> symgraph_core::Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    if path.extension().is_some_and(|e| e == "json") {
        let gj: GraphJson = serde_json::from_str(&text)?;
        gj.to_graph()
    } else {
        let n = n.ok_or_else(|| {
            Error::InvalidParams("edge-list graphs need --n <vertex count>".into())
        })?;
        graph_from_edge_list_text(&text, n)
    }
}

fn run(cli: &Cli) -> symgraph_core::Result<ExitCode> {
    let ok = ExitCode::SUCCESS;
    match &cli.command {
        Command::Numth { cmd } => match cmd {
            NumthCmd::Phi { m, q } => {
                let pp = PrimePower::from_value(*q)?;
                let report = cyclotomic::primitive_part(*m, &pp)?;
                let text = format!(
                    "phi_{m}({q}) = {}\nprimitive part = {}\nzsigmondy exception: {}\n",
                    report.phi_value, report.primitive_part, report.is_zsigmondy_exception
                );
                emit(cli, "numth phi", serde_json::to_value(&report)?, text)?;
            }
            NumthCmd::Zsig { max_m, max_q } => {
                let mut exceptions = Vec::new();
                let mut disagreements = Vec::new();
                for m in 2..=*max_m {
                    for q in numth::prime_powers_up_to(*max_q) {
                        let rep = cyclotomic::primitive_part(m, &q)?;
                        let closed = cyclotomic::zsigmondy_exception(m, &q)?;
                        if rep.is_zsigmondy_exception != closed {
                            disagreements.push((m, q.value_u64()));
                        }
                        if rep.is_zsigmondy_exception {
                            exceptions.push((m, q.value_u64()));
                        }
                    }
                }
                let text = exceptions
                    .iter()
                    .map(|(m, q)| format!("(m, q) = ({m}, {q})\n"))
                    .collect::<String>()
                    + &format!("closed-form disagreements: {}\n", disagreements.len());
                emit(
                    cli,
                    "numth zsig",
                    json!({ "exceptions": exceptions, "closed_form_disagreements": disagreements }),
                    text,
                )?;
            }
            NumthCmd::LemmaR { d, q } => {
                let pp = PrimePower::from_value(*q)?;
                let verdict = numth::lemma_r_check(&pp, *d)?;
                let text = format!("{verdict:?}\n");
                emit(cli, "numth lemma-r", serde_json::to_value(&verdict)?, text)?;
            }
            NumthCmd::Ppart { n, p } => {
                let part = numth::p_part(n, *p);
                emit(
                    cli,
                    "numth ppart",
                    json!({ "n": n.to_string(), "p": p, "p_part": part.to_string() }),
                    format!("{part}\n"),
                )?;
            }
        },
        Command::Table1 { cmd } => match cmd {
            Table1Cmd::Enumerate { line, bound, max_p } => {
                let bounds = table1::Bounds {
                    main: *bound,
                    max_p: *max_p,
                };
                let instances = table1::enumerate_table1(line.as_deref(), &bounds)?;
                let mut text = String::new();
                for i in &instances {
                    text += &format!("line {}: ({}, {}, {})\n    {}\n", i.line, i.l_desc, i.t_desc, i.r, i.witness);
                }
                text += &format!("{} instances\n", instances.len());
                emit(cli, "table1 enumerate", serde_json::to_value(&instances)?, text)?;
            }
        },
        Command::Group { cmd } => return run_group(cli, cmd),
        Command::Graph { cmd } => return run_graph(cli, cmd),
        Command::Search { cmd } => return run_search(cli, cmd),
        Command::Claims { cmd } => return run_claims(cli, cmd),
        Command::Atlas { cmd } => match cmd {
            AtlasCmd::List => {
                let summaries = atlas::catalogue();
                let mut text = String::new();
                for s in &summaries {
                    text += &format!(
                        "{:<12} degree {:>3}  order {:>12}  {}\n",
                        s.name,
                        s.degree,
                        s.order,
                        if s.simple { "simple" } else { "" }
                    );
                }
                emit(cli, "atlas list", serde_json::to_value(&summaries)?, text)?;
            }
            AtlasCmd::Verify { trials } => {
                let reports = atlas::verify_catalogue(*trials, cli.seed);
                let all_ok = reports
                    .iter()
                    .all(|r| r.order_ok && r.formula_ok != Some(false) && r.simplicity_ok);
                let mut text = String::new();
                for r in &reports {
                    text += &format!(
                        "{:<12} order {}  formula {}  {}\n",
                        r.name,
                        if r.order_ok { "ok" } else { "MISMATCH" },
                        match r.formula_ok {
                            Some(true) => "ok",
                            Some(false) => "MISMATCH",
                            None => "n/a",
                        },
                        r.simplicity.clone().unwrap_or_default()
                    );
                }
                text += &format!("catalogue {}\n", if all_ok { "verified" } else { "FAILED" });
                emit(cli, "atlas verify", serde_json::to_value(&reports)?, text)?;
                if !all_ok {
                    return Ok(ExitCode::from(1));
                }
            }
        },
    }
    Ok(ok)
}

fn group_report(g: &PermGroup) -> Value {
    json!({
        "degree": g.degree(),
        "order": g.order().to_string(),
        "generators": g.generators().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
        "transitive": g.is_transitive(),
    })
}

fn run_group(cli: &Cli, cmd: &GroupCmd) -> symgraph_core::Result<ExitCode> {
    match cmd {
        GroupCmd::Order(arg) => {
            let g = atlas::resolve_group(&arg.file)?;
            emit(
                cli,
                "group order",
                json!({ "order": g.order().to_string(), "degree": g.degree() }),
                format!("{}\n", g.order()),
            )?;
        }
        GroupCmd::Stab { group, point } => {
            let g = atlas::resolve_group(&group.file)?;
            let st = g.point_stabilizer(*point)?;
            emit(cli, "group stab", group_report(&st), format!("order {}\n", st.order()))?;
        }
        GroupCmd::Orbit { group, point } => {
            let g = atlas::resolve_group(&group.file)?;
            let orbit = g.orbit(*point)?;
            emit(
                cli,
                "group orbit",
                json!({ "point": point, "orbit": orbit, "length": orbit.len() }),
                format!("{orbit:?}\n"),
            )?;
        }
        GroupCmd::Normalizer { group, sub } => {
            let g = atlas::resolve_group(&group.file)?;
            let k = resolve_sub(&g, sub)?;
            let out = backtrack::normalizer(&g, &k, NodeBudget::default())?;
            let mut rep = group_report(&out.group);
            rep["stats"] = serde_json::to_value(out.stats)?;
            emit(cli, "group normalizer", rep, format!("order {}\n", out.group.order()))?;
        }
        GroupCmd::Centralizer { group, sub } => {
            let g = atlas::resolve_group(&group.file)?;
            let k = resolve_sub(&g, sub)?;
            let out = backtrack::centralizer_group(&g, &k, NodeBudget::default())?;
            let mut rep = group_report(&out.group);
            rep["stats"] = serde_json::to_value(out.stats)?;
            emit(cli, "group centralizer", rep, format!("order {}\n", out.group.order()))?;
        }
        GroupCmd::Intersect { group, other } => {
            let g = atlas::resolve_group(&group.file)?;
            let h = atlas::resolve_group(other)?;
            let out = backtrack::intersection(&g, &h, NodeBudget::default())?;
            emit(cli, "group intersect", group_report(&out.group), format!("order {}\n", out.group.order()))?;
        }
        GroupCmd::Derived { group, max_steps } => {
            let g = atlas::resolve_group(&group.file)?;
            let series = g.derived_series(*max_steps)?;
            let orders: Vec<String> = series.terms.iter().map(|t| t.order().to_string()).collect();
            emit(
                cli,
                "group derived",
                json!({ "orders": orders, "solvable": series.solvable, "perfect": series.is_perfect }),
                format!("series orders {orders:?}, solvable {}, perfect {}\n", series.solvable, series.is_perfect),
            )?;
        }
        GroupCmd::Simple { group, trials } => {
            let g = atlas::resolve_group(&group.file)?;
            let verdict = is_simple_monte_carlo(&g, *trials, cli.seed)?;
            emit(
                cli,
                "group simple",
                json!({ "simple": verdict.is_simple(), "certified": verdict.is_certified(), "verdict": verdict.describe() }),
                format!("{}\n", verdict.describe()),
            )?;
        }
        GroupCmd::CosetAction { group, sub, max_index } => {
            let g = atlas::resolve_group(&group.file)?;
            let h = resolve_sub(&g, sub)?;
            let ca = coset_action(&g, &h, *max_index)?;
            emit(
                cli,
                "group coset-action",
                json!({
                    "degree": ca.action.degree(),
                    "faithful": ca.faithful,
                    "image_order": ca.action.order().to_string(),
                    "generators": ca.action.generators().iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                }),
                format!("degree {} faithful {}\n", ca.action.degree(), ca.faithful),
            )?;
        }
        GroupCmd::FactorCheck { group, x, y } => {
            let g = atlas::resolve_group(&group.file)?;
            let xg = resolve_sub(&g, x)?;
            let yg = resolve_sub(&g, y)?;
            let cert = backtrack::factorization_certificate(&g, &xg, &yg, NodeBudget::default())?;
            emit(
                cli,
                "group factor-check",
                serde_json::to_value(&cert)?,
                format!(
                    "|G| = {}, |X| = {}, |Y| = {}, |X meet Y| = {}, factorization: {}\n",
                    cert.g_order, cert.x_order, cert.y_order, cert.meet_order, cert.is_factorization
                ),
            )?;
        }
        GroupCmd::Blocks(arg) => {
            let g = atlas::resolve_group(&arg.file)?;
            let blocks = symgraph_core::stabchain::minimal_block_system(&g)?;
            emit(
                cli,
                "group blocks",
                json!({ "primitive": blocks.is_none(), "blocks": blocks }),
                match &blocks {
                    None => "primitive\n".to_string(),
                    Some(b) => format!("blocks {b:?}\n"),
                },
            )?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_graph(cli: &Cli, cmd: &GraphCmd) -> symgraph_core::Result<ExitCode> {
    match cmd {
        GraphCmd::Analyze { group, h, x } => {
            let g = atlas::resolve_group(group)?;
            let hh = resolve_sub(&g, h)?;
            let xp = Permutation::parse_cycles(x, g.degree())?;
            let (_, report) = analyze_spec(&g, &hh, &xp)?;
            emit(
                cli,
                "graph analyze",
                serde_json::to_value(&report)?,
                format!("{report:#?}\n"),
            )?;
        }
        GraphCmd::Build { group, h, x, max_vertices, out } => {
            let g = atlas::resolve_group(group)?;
            let hh = resolve_sub(&g, h)?;
            let xp = Permutation::parse_cycles(x, g.degree())?;
            let (spec, report) = analyze_spec(&g, &hh, &xp)?;
            let built = build_graph(&spec, *max_vertices)?;
            let gj = GraphJson::from(&built.graph);
            if let Some(path) = out {
                if path.extension().is_some_and(|e| e == "json") {
                    std::fs::write(path, serde_json::to_string_pretty(&gj)? + "\n")?;
                } else {
                    std::fs::write(
                        path,
                        symgraph_core::cosetgraph::graph_to_edge_list_text(&built.graph),
                    )?;
                }
            }
            let props = graph_props(&built.graph);
            emit(
                cli,
                "graph build",
                json!({ "spec": serde_json::to_value(&report)?, "props": serde_json::to_value(&props)?, "graph": gj }),
                format!(
                    "{} vertices, {} edges, valency {:?}, connected {}\n",
                    props.vertex_count, props.edge_count, props.valency, props.connected
                ),
            )?;
        }
        GraphCmd::Quotient { graph, n, group, k, allow_two_orbits } => {
            let gr = load_graph_file(graph, *n)?;
            let g = atlas::resolve_group(group)?;
            let kk = resolve_sub(&g, k)?;
            let (q, report) = quotient_graph(&gr, &g, &kk, *allow_two_orbits)?;
            emit(
                cli,
                "graph quotient",
                json!({ "report": serde_json::to_value(&report)?, "graph": GraphJson::from(&q) }),
                format!("{report:#?}\n"),
            )?;
        }
        GraphCmd::Props { graph, n } => {
            let gr = load_graph_file(graph, *n)?;
            let props = graph_props(&gr);
            emit(cli, "graph props", serde_json::to_value(&props)?, format!("{props:#?}\n"))?;
        }
        GraphCmd::Rpart { graph, n, group, vertex, r } => {
            let gr = load_graph_file(graph, *n)?;
            let g = atlas::resolve_group(group)?;
            let rep = stabilizer_rpart_check(&g, &gr, *vertex, *r)?;
            // The acting group must be an automorphism group.
            let auto_ok = g.generators().iter().all(|s| gr.is_automorphism(s));
            let arc = arc_transitivity_check(&g, &gr)?;
            emit(
                cli,
                "graph rpart",
                json!({ "report": serde_json::to_value(&rep)?, "automorphisms": auto_ok, "arc_transitive": arc }),
                format!("{rep:#?}\n"),
            )?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_search(cli: &Cli, cmd: &SearchCmd) -> symgraph_core::Result<ExitCode> {
    match cmd {
        SearchCmd::Remark { h_file, r, ambient, mode, budget } => {
            let (ambient_kind, h) = match ambient.as_str() {
                "alt" | "sym" => {
                    let h = atlas::resolve_group(h_file)?;
                    let kind = if ambient == "alt" {
                        Ambient::Alternating
                    } else {
                        Ambient::Symmetric
                    };
                    (kind, h)
                }
                other => {
                    let g = atlas::resolve_group(other)?;
                    let h = resolve_sub(&g, h_file)?;
                    (Ambient::Explicit(g), h)
                }
            };
            let mut task = SearchTask::new(h, *r, ambient_kind);
            task.mode = match mode {
                CliMode::Exhaustive => Mode::Exhaustive,
                CliMode::Randomized => Mode::Randomized,
            };
            task.seed = cli.seed;
            task.workers = cli.workers.max(1);
            task.budget = SearchBudget {
                samples: *budget,
                ..SearchBudget::default()
            };
            let out = search::remark_search(&task)?;
            let text = format!(
                "exhaustive {}, scanned {}, {} signatures, {} desired\n",
                out.exhaustive,
                out.candidates_scanned,
                out.hits.len(),
                out.desired_hits().count()
            );
            emit(cli, "search remark", serde_json::to_value(&out)?, text)?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_claims(cli: &Cli, cmd: &ClaimsCmd) -> symgraph_core::Result<ExitCode> {
    match cmd {
        ClaimsCmd::List => {
            let ids = claims::claim_ids()?;
            emit(
                cli,
                "claims list",
                json!({ "claims": ids }),
                ids.iter().map(|i| format!("{i}\n")).collect(),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        ClaimsCmd::Run { id } => {
            let reports = if id == "all" {
                claims::reproduce_all()?
            } else {
                vec![claims::reproduce_claim(id)?]
            };
            let all_pass = reports.iter().all(|r| r.pass);
            let mut text = String::new();
            for r in &reports {
                text += &format!("[{}] {}\n", if r.pass { "PASS" } else { "FAIL" }, r.id);
                for line in &r.summary {
                    text += &format!("    {line}\n");
                }
                if let Some(note) = &r.conflict_note {
                    text += &format!("    note: {note}\n");
                }
            }
            emit(cli, "claims run", serde_json::to_value(&reports)?, text)?;
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}
