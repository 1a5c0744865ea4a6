//! `strongdiff`: exact strong-differential and domination invariants of
//! small graphs, witness certification, and registry verification runs.
//!
//! Exit codes: 0 success, 1 at least one violated check, 2 usage or parse
//! errors, 3 size guard exceeded without `--force`.

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use strongdiff_core::error::Error;
use strongdiff_core::families::{generate, FamilySpec};
use strongdiff_core::io::report::{CheckRecord, Report, ResultRecord};
use strongdiff_core::io::{parse_edgelist, parse_graph6, write_edgelist, write_graph6};
use strongdiff_core::solvers::{self, Invariant, SolverConfig};
use strongdiff_core::theorems;
use strongdiff_core::{breakdown, Graph, VertexSet};

const EXIT_VIOLATED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_GUARD: u8 = 3;

#[derive(Parser)]
#[command(
    name = "strongdiff",
    about = "Exact strong differential and domination invariants with witness certificates",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants of one graph with optimal witnesses.
    Compute(ComputeArgs),
    /// Print the differential breakdown of a user-supplied vertex set.
    Certify(CertifyArgs),
    /// Run theorem checks over generated graphs; exits 1 on any violation.
    Verify(VerifyArgs),
    /// Emit a generated graph.
    Generate(GenerateArgs),
    /// Re-check the derived Italian-domination relations over a built-in
    /// corpus and print a pass/fail table.
    Table(TableArgs),
}

#[derive(Args)]
struct GraphInput {
    /// Read the graph from a file.
    #[arg(long, conflicts_with = "family")]
    input: Option<String>,
    /// Generate the graph from a family spec, e.g. `figure-a`,
    /// `corona(path:3,complete:2)`, `gnp:n=9,p=0.3,seed=7`.
    #[arg(long)]
    family: Option<String>,
    /// Input file format.
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
}

#[derive(Args)]
struct GuardArgs {
    /// Maximum order admitted by the solvers (default 20, or the
    /// STRONGDIFF_GUARD environment variable).
    #[arg(long)]
    guard: Option<usize>,
    /// Admit graphs above the guard anyway.
    #[arg(long)]
    force: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputStyle {
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct ComputeArgs {
    /// Invariant id (e.g. `strong-differential`) or `all`.
    #[arg(long)]
    invariant: String,
    #[command(flatten)]
    graph: GraphInput,
    #[command(flatten)]
    guard: GuardArgs,
    /// Emit the JSON report instead of text.
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV rows (graph-id, invariant, value, witness).
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct CertifyArgs {
    #[command(flatten)]
    graph: GraphInput,
    /// Comma-separated vertex indices, e.g. `0,6,8,10,12`.
    #[arg(long)]
    set: String,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check id or `all`; may repeat.
    #[arg(long = "check", required = true)]
    checks: Vec<String>,
    /// Family spec; may repeat. `count=K` inside a random spec expands it.
    #[arg(long = "family", required = true)]
    families: Vec<String>,
    /// Replicate random specs this many times with consecutive seeds.
    #[arg(long)]
    count: Option<u64>,
    /// Base seed override for random specs.
    #[arg(long)]
    seed: Option<u64>,
    #[command(flatten)]
    guard: GuardArgs,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    family: String,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    guard: GuardArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute(args) => compute(args),
        Command::Certify(args) => certify(args),
        Command::Verify(args) => verify(args),
        Command::Generate(args) => generate_cmd(args),
        Command::Table(args) => table(args),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::SizeGuardExceeded { .. } => EXIT_GUARD,
        _ => EXIT_USAGE,
    }
}

fn solver_config(guard: &GuardArgs) -> SolverConfig {
    let mut cfg = SolverConfig::default();
    if let Ok(value) = std::env::var("STRONGDIFF_GUARD") {
        if let Ok(value) = value.parse() {
            cfg.size_guard = value;
        }
    }
    if let Some(value) = guard.guard {
        cfg.size_guard = value;
    }
    cfg.allow_guard_override = guard.force;
    cfg
}

/// Loads the graph plus a human-readable source tag.
fn load_graph(input: &GraphInput) -> Result<(Graph, String), Error> {
    match (&input.input, &input.family) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidArgument(format!("cannot read {path}: {e}")))?;
            let g = match input.format {
                Format::Graph6 => parse_graph6(&text)?,
                Format::Edgelist => parse_edgelist(&text)?,
            };
            Ok((g, path.clone()))
        }
        (None, Some(spec_text)) => {
            let spec = FamilySpec::parse(spec_text)?;
            let g = generate(&spec)?;
            Ok((g, spec.to_string()))
        }
        _ => Err(Error::InvalidArgument(
            "exactly one of --input and --family is required".into(),
        )),
    }
}

fn compute(args: ComputeArgs) -> Result<u8, Error> {
    let cfg = solver_config(&args.guard);
    let (g, source) = load_graph(&args.graph)?;
    let invariants: Vec<Invariant> = if args.invariant == "all" {
        Invariant::ALL.to_vec()
    } else {
        vec![Invariant::from_id(&args.invariant).ok_or_else(|| {
            Error::InvalidArgument(format!("unknown invariant `{}`", args.invariant))
        })?]
    };

    let mut report = Report::new(&g, source.clone());
    let mut skipped: Vec<(Invariant, Error)> = Vec::new();
    for inv in &invariants {
        let start = Instant::now();
        match solvers::solve(&g, *inv, &cfg) {
            Ok(result) => report
                .results
                .push(ResultRecord::new(&result, start.elapsed().as_millis())),
            Err(err @ Error::UndefinedInvariant(_)) if args.invariant == "all" => {
                skipped.push((*inv, err));
            }
            Err(err) => return Err(err),
        }
    }

    if args.json {
        println!("{}", report.to_json());
    } else if args.csv {
        println!("graph,invariant,value,witness");
        for record in &report.results {
            println!("{}", record.csv_row(&source));
        }
    } else {
        println!("graph {source}: n = {}, m = {}", g.order(), g.size());
        for record in &report.results {
            println!("{}", text_result(record));
        }
        for (inv, err) in &skipped {
            println!("{} skipped: {err}", inv.id());
        }
    }
    Ok(0)
}

fn text_result(record: &ResultRecord) -> String {
    use strongdiff_core::io::report::WitnessRecord;
    let witness = match &record.witness {
        WitnessRecord::Set { vertices } => format!("{vertices:?}"),
        WitnessRecord::Function { weights } => format!("weights {weights:?}"),
    };
    format!(
        "{} = {}  witness {}  [{} in {} ms]",
        record.invariant, record.value, witness, record.method, record.elapsed_ms
    )
}

fn certify(args: CertifyArgs) -> Result<u8, Error> {
    let (g, source) = load_graph(&args.graph)?;
    let mut indices = Vec::new();
    for part in args.set.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        indices.push(
            part.parse::<usize>().map_err(|_| {
                Error::InvalidArgument(format!("bad vertex index `{part}` in --set"))
            })?,
        );
    }
    let set = VertexSet::from_indices(g.order(), &indices)?;
    let bd = breakdown(&g, &set);
    if args.json {
        let record = strongdiff_core::io::report::BreakdownRecord::new(&bd);
        let body = serde_json::json!({
            "schema_version": strongdiff_core::io::report::SCHEMA_VERSION,
            "graph": { "n": g.order(), "edge_list": g.edges(), "source": source },
            "breakdown": record,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&body).expect("serializes")
        );
    } else {
        println!("graph {source}: n = {}, m = {}", g.order(), g.size());
        println!(
            "set                 = {:?} ({})",
            bd.set.to_vec(),
            bd.set.len()
        );
        println!(
            "external            = {:?} ({})",
            bd.external.to_vec(),
            bd.external.len()
        );
        println!(
            "weak defenders      = {:?} ({})",
            bd.weak.to_vec(),
            bd.weak.len()
        );
        println!(
            "strong defenders    = {:?} ({})",
            bd.strong.to_vec(),
            bd.strong.len()
        );
        println!("differential        = {}", bd.differential);
        println!("strong differential = {}", bd.strong_differential);
    }
    Ok(0)
}

fn expand_families(args: &VerifyArgs) -> Result<Vec<FamilySpec>, Error> {
    let mut specs = Vec::new();
    for family in &args.families {
        let mut text = family.clone();
        let is_random = text.starts_with("gnp:") || text.starts_with("tree:");
        if args.count.is_some() || args.seed.is_some() {
            if !is_random {
                return Err(Error::InvalidSpec(format!(
                    "--count/--seed apply only to random specs, got `{text}`"
                )));
            }
            if let Some(count) = args.count {
                text = format!("{text},count={count}");
            }
            if let Some(seed) = args.seed {
                text = format!("{text},seed={seed}");
            }
        }
        specs.extend(FamilySpec::parse_many(&text)?);
    }
    Ok(specs)
}

fn verify(args: VerifyArgs) -> Result<u8, Error> {
    let cfg = solver_config(&args.guard);
    let specs = expand_families(&args)?;
    let ids: Vec<&str> = args.checks.iter().map(|s| s.as_str()).collect();
    let start = Instant::now();
    let report = theorems::fuzz(&specs, &ids, specs.len(), &cfg)?;
    let elapsed = start.elapsed().as_millis();

    if args.json {
        let checks: Vec<serde_json::Value> = report
            .tallies
            .iter()
            .map(|(id, t)| {
                serde_json::json!({
                    "id": id,
                    "holds": t.holds,
                    "hypothesis_not_met": t.hypothesis_not_met,
                    "violated": t.violated,
                    "inconclusive": t.inconclusive,
                })
            })
            .collect();
        let violations: Vec<CheckRecord> = report
            .violations
            .iter()
            .map(|o| CheckRecord::new(o, 0))
            .collect();
        let body = serde_json::json!({
            "schema_version": strongdiff_core::io::report::SCHEMA_VERSION,
            "graphs_evaluated": report.graphs_evaluated,
            "elapsed_ms": elapsed,
            "tallies": checks,
            "violations": violations,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&body).expect("serializes")
        );
    } else {
        println!(
            "evaluated {} graphs in {} ms",
            report.graphs_evaluated, elapsed
        );
        for (id, tally) in &report.tallies {
            println!(
                "{id:28} holds {:>5}  hypothesis-not-met {:>5}  violated {:>3}  inconclusive {:>3}",
                tally.holds, tally.hypothesis_not_met, tally.violated, tally.inconclusive
            );
        }
        for outcome in &report.violations {
            println!(
                "VIOLATED {}: {}",
                outcome.id,
                outcome.detail.as_deref().unwrap_or("")
            );
            if let Some(ce) = &outcome.counterexample {
                println!("  graph6 {}", write_graph6(&ce.graph));
                if let Some(spec) = &ce.source {
                    println!("  source {spec}");
                }
                for (name, set) in &ce.witnesses {
                    println!("  {name} = {:?}", set.to_vec());
                }
            }
        }
    }
    Ok(if report.total_violated() > 0 {
        EXIT_VIOLATED
    } else {
        0
    })
}

fn generate_cmd(args: GenerateArgs) -> Result<u8, Error> {
    let spec = FamilySpec::parse(&args.family)?;
    let g = generate(&spec)?;
    match args.format {
        Format::Graph6 => println!("{}", write_graph6(&g)),
        Format::Edgelist => print!("{}", write_edgelist(&g)),
    }
    Ok(0)
}

/// The corpus backing `table`: small members of every deterministic family.
fn table_corpus() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for n in 1..=10 {
        specs.push(FamilySpec::Path { n });
    }
    for n in 3..=10 {
        specs.push(FamilySpec::Cycle { n });
    }
    for leaves in 1..=6 {
        specs.push(FamilySpec::Star { leaves });
    }
    for n in 2..=6 {
        specs.push(FamilySpec::Complete { n });
    }
    for b in 1..=5 {
        specs.push(FamilySpec::CompleteBipartite { a: 2, b });
    }
    for arms in 2..=6 {
        specs.push(FamilySpec::SubdividedStar { arms });
    }
    specs.push(FamilySpec::FigureA);
    specs.push(FamilySpec::FigureB);
    for leaves in [vec![2, 2], vec![2, 3], vec![3, 3], vec![2, 2, 2]] {
        specs.push(FamilySpec::FamilyG {
            leaves_per_support: leaves,
        });
    }
    for outer in ["path:1", "path:2", "path:3"] {
        for inner in ["complete:2", "path:3", "cycle:3"] {
            specs.push(FamilySpec::Corona {
                outer: Box::new(FamilySpec::parse(outer).expect("valid")),
                inner: Box::new(FamilySpec::parse(inner).expect("valid")),
            });
        }
    }
    specs
}

fn table(args: TableArgs) -> Result<u8, Error> {
    let cfg = solver_config(&args.guard);
    let specs = table_corpus();
    let table_ids: Vec<&str> = theorems::registry()
        .iter()
        .map(|c| c.id)
        .filter(|id| id.starts_with("table-"))
        .collect();
    let report = theorems::fuzz(&specs, &table_ids, specs.len(), &cfg)?;

    println!(
        "derived Italian-domination relations over {} built-in graphs",
        report.graphs_evaluated
    );
    println!(
        "{:<24} {:>6} {:>8} {:>9}  result",
        "check", "holds", "skipped", "violated"
    );
    for (id, tally) in &report.tallies {
        let result = if tally.violated == 0 { "PASS" } else { "FAIL" };
        println!(
            "{id:<24} {:>6} {:>8} {:>9}  {result}",
            tally.holds, tally.hypothesis_not_met, tally.violated
        );
    }
    for outcome in &report.violations {
        println!(
            "VIOLATED {} on {}: {}",
            outcome.id,
            outcome
                .counterexample
                .as_ref()
                .and_then(|c| c.source.as_ref())
                .map(|s| s.to_string())
                .unwrap_or_default(),
            outcome.detail.as_deref().unwrap_or("")
        );
    }
    Ok(if report.total_violated() > 0 {
        EXIT_VIOLATED
    } else {
        0
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_map_errors() {
        assert_eq!(
            exit_code_for(&Error::SizeGuardExceeded { n: 30, guard: 20 }),
            EXIT_GUARD
        );
        assert_eq!(exit_code_for(&Error::InvalidSpec("x".into())), EXIT_USAGE);
        assert_eq!(
            exit_code_for(&Error::Parse {
                position: 1,
                message: "x".into()
            }),
            EXIT_USAGE
        );
    }

    #[test]
    fn table_corpus_is_generable() {
        for spec in table_corpus() {
            generate(&spec).unwrap();
        }
    }
}
