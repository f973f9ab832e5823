//! `wcprod`: analyze well-covered graphs and direct products from the shell.
//!
//! Exit status: 0 on success, 1 on usage or parse errors, 2 when a
//! counterexample is found, 3 when a size or search cap is exceeded.

mod input;
mod render;

use std::process::ExitCode;

use anyhow::anyhow;
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use wcprod::families::{corpus, cycle, isomorphism_classes, FamilyError, FamilySpec};
use wcprod::formats::{to_edge_list, to_graph6, FormatError};
use wcprod::harness::{
    clique_instances, pair_instances, single_instances, targeted_instances, ClaimRegistry,
    HarnessError, Instance,
};
use wcprod::independence::{alpha, is_well_covered, isolatable_vertices, well_covered_report};
use wcprod::kn::{kn_alpha_i_with_budget, KnError};
use wcprod::products::{direct_product, ProductError, ProductGraph};
use wcprod::vset::MAX_VERTICES;
use wcprod::{Graph, GraphError, Status, VertexSet};

use input::read_graph;
use render::{render, Format};

#[derive(Parser, Debug)]
#[command(
    name = "wcprod",
    version,
    about = "Well-covered graphs and direct products"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    /// Worker threads for parallel commands (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Node limit for the weak-partition search run by `product` on G×Kₙ.
    #[arg(long, global = true)]
    node_budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// α, i, well-coveredness and structure of one graph.
    Analyze {
        /// Family spec (cycle:7, h:4,2, kpartite:2,2,2, ...), graph6, or @file.
        graph: String,
    },
    /// The direct product G×H.
    Product {
        g: String,
        h: String,
        /// Also evaluate every pair claim (and G×Kₙ claim when H is complete).
        #[arg(long)]
        check: bool,
    },
    /// Print a family member or an exhaustive corpus.
    Generate(GenerateArgs),
    /// Run the claim suite over corpora or given instances.
    Verify(VerifyArgs),
    /// Classify ordered factor pairs by well-coveredness of the product.
    Scan(ScanArgs),
}

#[derive(Args, Debug)]
struct GenerateArgs {
    /// Family spec to build.
    #[arg(required_unless_present = "corpus", conflicts_with = "corpus")]
    spec: Option<String>,
    /// Print every graph on 1..=N vertices as graph6 lines instead.
    #[arg(long, value_name = "N")]
    corpus: Option<usize>,
    /// With --corpus: connected graphs only.
    #[arg(long, requires = "corpus")]
    connected: bool,
    /// With --corpus: one graph per isomorphism class.
    #[arg(long, requires = "corpus")]
    classes: bool,
    /// Print the bare graph6 string.
    #[arg(long, conflicts_with = "edge_list")]
    graph6: bool,
    /// Print an edge list (`n m` then one edge per line).
    #[arg(long)]
    edge_list: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// List the registered claims and exit.
    #[arg(long)]
    list: bool,
    /// Restrict to these claim ids (repeatable).
    #[arg(long = "claim", value_name = "ID")]
    claims: Vec<String>,
    /// Check only these instances, e.g. `G=Bw,H=Bw` or `G=Bw,n=3` (repeatable).
    #[arg(long = "instance", value_name = "DESC")]
    instances: Vec<String>,
    /// Largest order of the connected graphs used for single-graph claims.
    #[arg(long, default_value_t = 6)]
    single_max_n: usize,
    /// Largest factor order for pair claims.
    #[arg(long, default_value_t = 7)]
    pair_max_n: usize,
    /// Largest n(G)·n(H) for pair claims.
    #[arg(long, default_value_t = 36)]
    max_product: usize,
    /// Largest order of G for G×Kₙ claims.
    #[arg(long, default_value_t = 5)]
    clique_max_n: usize,
    /// Orders n of Kₙ for G×Kₙ claims.
    #[arg(long, value_delimiter = ',', default_values_t = [2, 3])]
    clique_orders: Vec<usize>,
    /// Skip the targeted instances (complete graphs, H(k,n), cycles, ...).
    #[arg(long)]
    no_targeted: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ScanFilter {
    Wc,
    Vwc,
    WcNotVwc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ScanSource {
    /// Nontrivial connected graphs.
    Connected,
    /// All graphs.
    All,
    /// Cycles C₃..C_max-n.
    Cycles,
}

#[derive(Args, Debug)]
struct ScanArgs {
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    #[arg(long, value_enum)]
    filter: Option<ScanFilter>,
    #[arg(long, value_enum, default_value = "connected")]
    source: ScanSource,
    /// Use every labeled graph instead of one per isomorphism class.
    #[arg(long)]
    labeled: bool,
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        let error = e.into();
        let code = if is_cap(&error) { 3 } else { 1 };
        Failure { code, error }
    }
}

/// Whether an error is a size or search cap rather than bad input.
fn is_cap(e: &anyhow::Error) -> bool {
    e.chain().any(|c| {
        matches!(
            c.downcast_ref::<ProductError>(),
            Some(ProductError::TooLarge { .. })
        ) || matches!(
            c.downcast_ref::<KnError>(),
            Some(KnError::BudgetExceeded { .. })
        ) || matches!(
            c.downcast_ref::<FamilyError>(),
            Some(FamilyError::TooLarge { .. } | FamilyError::CorpusTooLarge { .. })
        ) || matches!(
            c.downcast_ref::<GraphError>(),
            Some(GraphError::TooManyVertices { .. })
        ) || matches!(
            c.downcast_ref::<FormatError>(),
            Some(FormatError::Graph(GraphError::TooManyVertices { .. }))
        ) || matches!(
            c.downcast_ref::<HarnessError>(),
            Some(
                HarnessError::Product(ProductError::TooLarge { .. })
                    | HarnessError::Kn(KnError::BudgetExceeded { .. })
                    | HarnessError::Family(FamilyError::CorpusTooLarge { .. })
            )
        ) || c.downcast_ref::<CapError>().is_some()
    })
}

#[derive(Debug)]
struct CapError(String);

impl std::fmt::Display for CapError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CapError {}

/// Output plus whether a counterexample was seen.
struct Outcome {
    value: Value,
    counterexample: bool,
}

impl From<Value> for Outcome {
    fn from(value: Value) -> Self {
        Outcome {
            value,
            counterexample: false,
        }
    }
}

fn graph_summary(g: &Graph) -> Value {
    let mut v = json!({ "graph6": to_graph6(g), "n": g.order(), "m": g.size() });
    if let Some(labels) = g.labels() {
        v["labels"] = json!(labels);
    }
    v
}

fn analyze(g: &Graph, input: &str) -> Value {
    let r = well_covered_report(g);
    json!({
        "input": input,
        "graph": graph_summary(g),
        "alpha": r.alpha,
        "i": r.i_number,
        "well_covered": r.well_covered,
        "very_well_covered": r.very_well_covered,
        "witness_min": r.witness_min,
        "witness_max": r.witness_max,
        "girth": g.girth(),
        "regular_degree": g.regular_degree(),
        "bipartite": g.is_bipartite(),
        "connected": g.is_connected(),
        "min_degree": if g.order() > 0 { json!(g.min_degree()) } else { Value::Null },
        "max_degree": if g.order() > 0 { json!(g.max_degree()) } else { Value::Null },
        "isolated": g.isolated_vertices(),
        "isolatable": isolatable_vertices(g),
        "every_edge_in_triangle": g.every_edge_in_triangle(),
    })
}

fn pairs_of(p: &ProductGraph, s: VertexSet) -> Value {
    json!(s.iter().map(|v| p.coords(v)).collect::<Vec<_>>())
}

fn product(cli: &Cli, g_arg: &str, h_arg: &str, check: bool) -> Result<Outcome, Failure> {
    let g = read_graph(g_arg)?;
    let h = read_graph(h_arg)?;
    let clique = (h.order() >= 2 && h.is_complete()).then_some(h.order());
    let mut out = json!({ "G": graph_summary(&g), "H": graph_summary(&h) });
    match direct_product(&g, &h) {
        Ok(p) => {
            let r = well_covered_report(&p.graph);
            out["shape"] = json!(p.shape());
            out["product"] = json!({
                "graph6": to_graph6(&p.graph),
                "n": p.graph.order(),
                "m": p.graph.size(),
                "alpha": r.alpha,
                "i": r.i_number,
                "well_covered": r.well_covered,
                "very_well_covered": r.very_well_covered,
                "witness_min": pairs_of(&p, r.witness_min),
                "witness_max": pairs_of(&p, r.witness_max),
            });
        }
        Err(e) if clique.is_some() => out["product"] = json!({ "skipped": e.to_string() }),
        Err(e) => return Err(e.into()),
    }
    if let Some(n) = clique {
        out["kn"] = json!(kn_alpha_i_with_budget(&g, n, cli.node_budget)?);
    }
    let mut counterexample = false;
    if check {
        let registry = ClaimRegistry::standard();
        let mut instances = vec![Instance::Pair(g.clone(), h.clone())];
        if let Some(n) = clique {
            instances.push(Instance::WithClique(g.clone(), n));
        }
        let mut verdicts = Vec::new();
        for inst in &instances {
            for claim in registry.claims().iter().filter(|c| c.shape == inst.shape()) {
                match registry.verify(claim.id, inst) {
                    Ok(v) => {
                        counterexample |= v.status == Status::Counterexample;
                        verdicts.push(json!(v));
                    }
                    Err(e) => {
                        verdicts.push(json!({ "claim_id": claim.id, "error": e.to_string() }))
                    }
                }
            }
        }
        out["checks"] = Value::Array(verdicts);
    }
    Ok(Outcome {
        value: out,
        counterexample,
    })
}

/// Generate prints raw text in some modes, so it returns the final string.
fn generate(args: &GenerateArgs, format: Format) -> Result<String, Failure> {
    if let Some(n) = args.corpus {
        let graphs: Vec<Graph> = if args.classes {
            isomorphism_classes(n, args.connected)?
        } else {
            corpus(n, args.connected)?.collect()
        };
        let mut s = String::new();
        for g in &graphs {
            s.push_str(&to_graph6(g));
            s.push('\n');
        }
        return Ok(s);
    }
    let spec: FamilySpec = args
        .spec
        .as_deref()
        .expect("clap requires a spec")
        .parse()?;
    let g = spec.build()?;
    if args.graph6 {
        return Ok(format!("{}\n", to_graph6(&g)));
    }
    if args.edge_list {
        return Ok(to_edge_list(&g));
    }
    let mut v = graph_summary(&g);
    v["spec"] = json!(spec.to_string());
    v["edges"] = json!(g.edges().collect::<Vec<_>>());
    Ok(render(&v, format))
}

fn verify(args: &VerifyArgs) -> Result<Outcome, Failure> {
    let registry = ClaimRegistry::standard();
    if args.list {
        let claims: Vec<Value> = registry
            .claims()
            .iter()
            .map(|c| json!({ "id": c.id, "shape": c.shape, "statement": c.statement }))
            .collect();
        return Ok(json!({ "claims": claims }).into());
    }
    let ids: Vec<&str> = args.claims.iter().map(String::as_str).collect();
    for id in &ids {
        if registry.get(id).is_none() {
            return Err(HarnessError::UnknownClaim(id.to_string()).into());
        }
    }
    if !args.instances.is_empty() {
        let instances = args
            .instances
            .iter()
            .map(|s| s.parse::<Instance>())
            .collect::<Result<Vec<_>, _>>()?;
        let report = registry.run_suite(&ids, &instances, None)?;
        let mut verdicts = Vec::new();
        for inst in &instances {
            for claim in registry.claims().iter().filter(|c| c.shape == inst.shape()) {
                if !ids.is_empty() && !ids.contains(&claim.id) {
                    continue;
                }
                verdicts.push(match registry.verify(claim.id, inst) {
                    Ok(v) => json!(v),
                    Err(e) => json!({ "claim_id": claim.id, "instance": inst.describe(), "error": e.to_string() }),
                });
            }
        }
        let mut v = report.to_json();
        v["verdicts"] = Value::Array(verdicts);
        return Ok(Outcome {
            value: v,
            counterexample: !report.passed(),
        });
    }
    if args.max_product > MAX_VERTICES {
        return Err(CapError(format!(
            "--max-product {} exceeds the {MAX_VERTICES}-vertex limit",
            args.max_product
        ))
        .into());
    }
    if args.clique_orders.iter().any(|&n| n < 2) {
        return Err(anyhow!("clique orders must be at least 2").into());
    }
    let mut instances = single_instances(args.single_max_n)?;
    instances.extend(pair_instances(args.pair_max_n, args.max_product)?);
    instances.extend(clique_instances(args.clique_max_n, &args.clique_orders)?);
    if !args.no_targeted {
        instances.extend(targeted_instances());
    }
    let report = registry.run_suite(&ids, &instances, None)?;
    Ok(Outcome {
        counterexample: !report.passed(),
        value: report.to_json(),
    })
}

#[derive(Serialize)]
struct ScanRow {
    #[serde(rename = "G")]
    g: String,
    #[serde(rename = "H")]
    h: String,
    #[serde(rename = "nG")]
    n_g: usize,
    #[serde(rename = "nH")]
    n_h: usize,
    well_covered: bool,
    very_well_covered: bool,
    #[serde(rename = "G_well_covered")]
    g_wc: bool,
    #[serde(rename = "H_well_covered")]
    h_wc: bool,
    #[serde(rename = "girth_G")]
    girth_g: wcprod::Girth,
    #[serde(rename = "girth_H")]
    girth_h: wcprod::Girth,
}

fn scan(args: &ScanArgs) -> Result<Outcome, Failure> {
    let graphs: Vec<Graph> = match args.source {
        ScanSource::Cycles => {
            if args.max_n * args.max_n > MAX_VERTICES {
                return Err(CapError(format!(
                    "C{0}×C{0} exceeds {MAX_VERTICES} vertices",
                    args.max_n
                ))
                .into());
            }
            (3..=args.max_n)
                .map(|n| cycle(n).expect("n >= 3"))
                .collect()
        }
        ScanSource::Connected | ScanSource::All => {
            let connected = args.source == ScanSource::Connected;
            let gs: Vec<Graph> = if args.labeled {
                corpus(args.max_n, connected)?.collect()
            } else {
                isomorphism_classes(args.max_n, connected)?
            };
            gs.into_iter()
                .filter(|g| !connected || g.order() >= 2)
                .collect()
        }
    };
    let pairs: Vec<(&Graph, &Graph)> = graphs
        .iter()
        .flat_map(|g| graphs.iter().map(move |h| (g, h)))
        .collect();
    let wc_factor: Vec<bool> = graphs.par_iter().map(is_well_covered).collect();
    let index = |g: &Graph| {
        graphs
            .iter()
            .position(|x| std::ptr::eq(x, g))
            .expect("from the list")
    };
    let rows: Vec<ScanRow> = pairs
        .par_iter()
        .map(|&(g, h)| {
            let p = direct_product(g, h).expect("orders checked against the cap");
            let wc = is_well_covered(&p.graph);
            let vwc = wc
                && p.graph.order() > 0
                && p.graph.isolated_vertices().is_empty()
                && 2 * alpha(&p.graph) == p.graph.order();
            ScanRow {
                g: to_graph6(g),
                h: to_graph6(h),
                n_g: g.order(),
                n_h: h.order(),
                well_covered: wc,
                very_well_covered: vwc,
                g_wc: wc_factor[index(g)],
                h_wc: wc_factor[index(h)],
                girth_g: g.girth(),
                girth_h: h.girth(),
            }
        })
        .collect();
    let scanned = rows.len();
    let kept: Vec<ScanRow> = rows
        .into_iter()
        .filter(|r| match args.filter {
            None => true,
            Some(ScanFilter::Wc) => r.well_covered,
            Some(ScanFilter::Vwc) => r.very_well_covered,
            Some(ScanFilter::WcNotVwc) => r.well_covered && !r.very_well_covered,
        })
        .collect();
    let filter = args.filter.map(|f| {
        f.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_string()
    });
    Ok(json!({
        "scanned": scanned,
        "emitted": kept.len(),
        "filter": filter,
        "pairs": kept,
    })
    .into())
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    if let Some(j) = cli.jobs {
        if j == 0 {
            return Err(anyhow!("--jobs must be at least 1").into());
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()?;
    }
    let outcome = match &cli.command {
        Command::Analyze { graph } => analyze(&read_graph(graph)?, graph).into(),
        Command::Product { g, h, check } => product(cli, g, h, *check)?,
        Command::Generate(args) => return Ok((generate(args, cli.format)?, false)),
        Command::Verify(args) => verify(args)?,
        Command::Scan(args) => scan(args)?,
    };
    Ok((render(&outcome.value, cli.format), outcome.counterexample))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok((text, counterexample)) => {
            print!("{text}");
            if counterexample {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
