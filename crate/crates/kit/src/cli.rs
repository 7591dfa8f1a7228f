//! Command line front end. `run` returns the process exit code: 0 when a
//! scope holds or a job completed, 1 on a counterexample or failed fixture
//! check, 2 on a resource limit, 3 on usage or input errors.

use std::collections::BTreeMap;
use std::io::{self, BufWriter};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use snarkcore::generate::{GenerationSpec, GraphClass, Shard};
use snarkcore::CubicGraph;

use crate::catalog::{self, CatalogError};
use crate::codec::{encode_graph6, load_fixture, FixtureId};
use crate::fixtures::{self, FixtureCheck};
use crate::pool::{run_ordered, worker_count};
use crate::props::{self, Property, Tier};
use crate::record::{seconds, Record, RecordLog};
use crate::registry::{check_graph, ConjectureId};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_LIMIT: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "snarkkit", version, about = "Generate snarks and test cubic graph conjectures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a catalogue in graph6, with a manifest beside the output.
    Generate(GenerateArgs),
    /// Evaluate properties of every graph in a graph6 file.
    Analyze(AnalyzeArgs),
    /// Check a conjecture over generated orders or a fixture set.
    Verify(VerifyArgs),
    /// Built-in fixture sets.
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_parser = parse_class)]
    pub class: GraphClass,
    #[arg(long, default_value_t = 1, requires = "shard")]
    pub shards: usize,
    #[arg(long, default_value_t = 0)]
    pub shard: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Stop after expanding this many graphs.
    #[arg(long)]
    pub budget: Option<u64>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Comma-separated property names.
    #[arg(long)]
    pub props: String,
    #[arg(long, value_enum, default_value_t = Tier::Short)]
    pub tier: Tier,
    /// Append records here, skipping work already recorded.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_parser = parse_conjecture)]
    pub conjecture: ConjectureId,
    #[arg(long, conflicts_with = "fixtures", required_unless_present = "fixtures")]
    pub n_max: Option<usize>,
    #[arg(long, value_parser = parse_fixture)]
    pub fixtures: Option<FixtureId>,
    #[arg(long, value_enum, default_value_t = Tier::Short)]
    pub tier: Tier,
    /// Append records here, skipping work already recorded.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum FixturesAction {
    /// Re-check the defining properties of a fixture set.
    Verify {
        #[arg(value_parser = parse_fixture)]
        id: FixtureId,
        #[arg(long, value_enum, default_value_t = Tier::Short)]
        tier: Tier,
    },
}

fn parse_class(s: &str) -> Result<GraphClass, String> {
    GraphClass::from_name(s).ok_or_else(|| format!("unknown class {s:?}; expected cubic3c, cyc4, weaksnark, snark or snark5"))
}

fn parse_conjecture(s: &str) -> Result<ConjectureId, String> {
    s.parse()
}

fn parse_fixture(s: &str) -> Result<FixtureId, String> {
    s.parse().map_err(|e: crate::codec::CodecError| e.to_string())
}

/// Parses `args` and runs the command.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}

pub fn run(cli: Cli) -> i32 {
    let result = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Analyze(a) => analyze(a),
        Command::Verify(a) => verify(a),
        Command::Fixtures { action: FixturesAction::Verify { id, tier } } => Ok(fixtures_verify(id, tier)),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        EXIT_USAGE
    })
}

fn generate(a: GenerateArgs) -> Result<i32, CatalogError> {
    let spec = GenerationSpec {
        order: a.n,
        class: a.class,
        shard: Shard { index: a.shard, count: a.shards },
        node_budget: a.budget,
    };
    let manifest = match &a.output {
        Some(path) => catalog::generate_file(&spec, path)?,
        None => catalog::generate_to(&spec, &mut BufWriter::new(io::stdout()), None)?,
    };
    eprintln!("{}", serde_json::to_string(&manifest).expect("manifest serialises"));
    Ok(if manifest.complete { EXIT_OK } else { EXIT_LIMIT })
}

fn open_log(output: &Option<PathBuf>) -> io::Result<RecordLog> {
    match output {
        Some(p) => RecordLog::append(p),
        None => Ok(RecordLog::stdout()),
    }
}

fn analyze(a: AnalyzeArgs) -> Result<i32, CatalogError> {
    let list = props::parse_list(&a.props).map_err(CatalogError::Spec)?;
    let graphs = catalog::read_graph6(&a.input)?;
    let mut log = open_log(&a.output)?;
    let items: Vec<(String, &CubicGraph, Property)> = graphs
        .iter()
        .flat_map(|g| {
            let code = encode_graph6(g);
            list.iter().map(move |&p| (code.clone(), g, p))
        })
        .filter(|(code, _, p)| !log.is_done(code, p.name()))
        .collect();
    let mut limited = false;
    let mut failure = None;
    run_ordered(
        &items,
        worker_count(),
        |(code, g, p)| {
            let start = Instant::now();
            let ev = props::evaluate(g, *p, a.tier);
            Record { graph: code.clone(), property: p.name().to_string(), value: ev.value, witness: ev.witness, seconds: seconds(start.elapsed()) }
        },
        |_, r| {
            limited |= r.value == json!("resource_limit");
            if let Err(e) = log.write(&r) {
                failure.get_or_insert(e);
            }
        },
    );
    if let Some(e) = failure {
        return Err(e.into());
    }
    Ok(if limited { EXIT_LIMIT } else { EXIT_OK })
}

/// Outcome of a conjecture over a scope.
#[derive(Clone, Debug, serde::Serialize)]
pub struct ConjectureReport {
    pub conjecture: String,
    pub scope: String,
    pub verdict: String,
    /// Graphs per verdict name.
    pub counts: BTreeMap<String, usize>,
    /// graph6 of each counterexample.
    pub counterexamples: Vec<String>,
    pub seconds: f64,
}

impl ConjectureReport {
    pub fn exit_code(&self) -> i32 {
        match self.verdict.as_str() {
            "counterexample" => EXIT_COUNTEREXAMPLE,
            "resource_limit" => EXIT_LIMIT,
            _ => EXIT_OK,
        }
    }
}

/// Checks `id` on every graph, writing one record per graph and skipping
/// graphs `log` already holds.
pub fn verify_graphs(id: ConjectureId, scope: String, graphs: &[CubicGraph], tier: Tier, log: &mut RecordLog) -> io::Result<ConjectureReport> {
    let start = Instant::now();
    let mut counts = BTreeMap::new();
    let mut counterexamples = Vec::new();
    let mut tally = |graph: &str, verdict: &str| {
        *counts.entry(verdict.to_string()).or_insert(0) += 1;
        if verdict == "counterexample" {
            counterexamples.push(graph.to_string());
        }
    };
    let codes: Vec<String> = graphs.iter().map(encode_graph6).collect();
    let previous: BTreeMap<(String, String), String> = log
        .previous()
        .iter()
        .filter_map(|r| Some((r.key(), r.value.as_str()?.to_string())))
        .collect();
    let mut items = Vec::new();
    for (g, code) in graphs.iter().zip(&codes) {
        match previous.get(&(code.clone(), id.name().to_string())) {
            Some(v) => tally(code, v),
            None => items.push((g, code)),
        }
    }
    let mut failure = None;
    run_ordered(
        &items,
        worker_count(),
        |(g, code)| {
            let t = Instant::now();
            let v = check_graph(id, g, tier);
            Record {
                graph: (*code).clone(),
                property: id.name().to_string(),
                value: json!(v.name()),
                witness: v.witness().cloned(),
                seconds: seconds(t.elapsed()),
            }
        },
        |_, r| {
            tally(&r.graph, r.value.as_str().unwrap_or_default());
            if let Err(e) = log.write(&r) {
                failure.get_or_insert(e);
            }
        },
    );
    if let Some(e) = failure {
        return Err(e);
    }
    let verdict = if counts.contains_key("counterexample") {
        "counterexample"
    } else if counts.contains_key("resource_limit") {
        "resource_limit"
    } else {
        "holds"
    };
    Ok(ConjectureReport {
        conjecture: id.name().to_string(),
        scope,
        verdict: verdict.to_string(),
        counts,
        counterexamples,
        seconds: seconds(start.elapsed()),
    })
}

fn verify(a: VerifyArgs) -> Result<i32, CatalogError> {
    let (scope, graphs) = match (a.fixtures, a.n_max) {
        (Some(id), _) => (id.name().to_string(), load_fixture(id)),
        (None, Some(n)) => {
            let class = a.conjecture.scope_class();
            let graphs = catalog::catalog_up_to(class, n)?.into_values().flatten().collect();
            (format!("{class} n<={n}"), graphs)
        }
        (None, None) => unreachable!("clap requires a scope"),
    };
    let mut log = open_log(&a.output)?;
    let report = verify_graphs(a.conjecture, scope, &graphs, a.tier, &mut log)?;
    eprintln!("{}", serde_json::to_string(&report).expect("report serialises"));
    Ok(report.exit_code())
}

fn fixtures_verify(id: FixtureId, tier: Tier) -> i32 {
    let checks: Vec<FixtureCheck> = fixtures::verify_fixture(id, tier);
    for c in &checks {
        println!("{}", serde_json::to_string(c).expect("check serialises"));
    }
    let status: Vec<_> = checks.iter().map(FixtureCheck::status).collect();
    if status.contains(&fixtures::Status::Fail) {
        EXIT_COUNTEREXAMPLE
    } else if status.contains(&fixtures::Status::Limit) {
        EXIT_LIMIT
    } else {
        EXIT_OK
    }
}
