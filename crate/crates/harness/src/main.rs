use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use turan_core::constructions::{
    alon_frankl_extremal, complete_bipartite, dense_turan_component, g1, g1_relaxed, g2, good_partition_regular,
    main_extremal, r1_bipartite, turan_graph,
};
use turan_core::detectors::{contains_pattern, is_family_free};
use turan_core::formulas::{ex_clique_matching, ex_k3, ex_main, ex_star, extremal_family_edges, turan_edges};
use turan_core::{graph6, ForbiddenFamily, Graph};
use turan_harness::{emit_report, parse_param_list, GridOverrides, ReportFormat, ResultCache, Runner, Suite};

#[derive(Parser)]
#[command(name = "turan", version, about = "Extremal graphs for {K_{k+1}, (s+1)S_l}: builders, detectors, formulas and an exhaustive oracle")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and print it as graph6 or a JSON edge list.
    Construct {
        builder: Builder,
        #[command(flatten)]
        p: Params,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test graph6 graphs (arguments, or one per stdin line) against a family.
    Detect {
        #[arg(long)]
        family: ForbiddenFamily,
        graphs: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a closed-form value; prints {value, validity, source}.
    Formula {
        name: FormulaName,
        #[command(flatten)]
        p: Params,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact ex(n, F) by exhaustive enumeration; prints one JSON record.
    Oracle {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        family: ForbiddenFamily,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Run a verification suite.
    Verify {
        suite: Suite,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[command(flatten)]
        run: RunOpts,
    },
    /// Oracle against formula for fixed k, s, l as n grows.
    Sweep {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[command(flatten)]
        run: RunOpts,
    },
}

#[derive(Args)]
struct Params {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    l: Option<usize>,
}

#[derive(Args)]
struct GridArgs {
    /// Values and inclusive ranges, e.g. `6-9` or `3,5`.
    #[arg(long, value_parser = param_list)]
    n: Option<ParamList>,
    #[arg(long, value_parser = param_list)]
    k: Option<ParamList>,
    #[arg(long, value_parser = param_list)]
    s: Option<ParamList>,
    #[arg(long, value_parser = param_list)]
    l: Option<ParamList>,
    /// Largest n at which oracle-reporting suites run the oracle.
    #[arg(long)]
    oracle_max: Option<usize>,
}

/// Wrapper so clap stores the parsed list as one value.
#[derive(Clone)]
struct ParamList(Vec<usize>);

fn param_list(text: &str) -> Result<ParamList, String> {
    parse_param_list(text).map(ParamList)
}

#[derive(Args)]
struct RunOpts {
    #[arg(long, default_value_t = turan_harness::suites::default_jobs())]
    jobs: usize,
    #[arg(long)]
    cache: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, ValueEnum)]
enum Builder {
    Turan,
    CompleteBipartite,
    Regular,
    R1,
    G1,
    G1Relaxed,
    G2,
    AlonFrankl,
    DenseTuran,
    Main,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormulaName {
    TuranEdges,
    ExStar,
    ExCliqueMatching,
    ExMain,
    ExK3,
    FamilyEdges,
}

/// Exit status for errors in the invocation or its inputs.
const USAGE: u8 = 2;

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("turan: {msg}");
            ExitCode::from(USAGE)
        }
    }
}

fn need(v: Option<usize>, name: &str) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure(format!("--{name} is required")))
}

fn write_out(out: Option<&PathBuf>, bytes: &[u8]) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, bytes).map_err(|e| Failure(format!("{}: {e}", path.display()))),
        None => Ok(io::stdout().write_all(bytes)?),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.command {
        Command::Construct { builder, p, format, out } => {
            let g = construct(builder, &p)?;
            let text = match format {
                Format::Graph6 => graph6::encode(&g)? + "\n",
                Format::Json => serde_json::to_string(&g)? + "\n",
                _ => return Err(Failure("construct prints graph6 or json".into())),
            };
            write_out(out.as_ref(), text.as_bytes())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Detect { family, graphs, out } => {
            let inputs: Vec<String> = if graphs.is_empty() {
                io::stdin()
                    .lock()
                    .lines()
                    .map(|l| l.map(|s| s.trim().to_string()))
                    .filter(|l| !matches!(l, Ok(s) if s.is_empty()))
                    .collect::<Result<_, _>>()?
            } else {
                graphs
            };
            let mut text = String::new();
            for g6 in inputs {
                let g = graph6::decode(&g6).map_err(|e| Failure(format!("{g6}: {e}")))?;
                let found: Vec<String> = family
                    .patterns()
                    .iter()
                    .filter(|&&p| contains_pattern(&g, p))
                    .map(|p| p.to_string())
                    .collect();
                let line = json!({ "graph": g6, "free": is_family_free(&g, &family), "contains": found });
                text += &(line.to_string() + "\n");
            }
            write_out(out.as_ref(), text.as_bytes())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Formula { name, p, out } => {
            let text = formula(name, &p)? + "\n";
            write_out(out.as_ref(), text.as_bytes())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { n, family, format, run } => {
            let mut runner = runner(&run)?;
            let record = runner.oracle(n, &family)?;
            let text = match format {
                Format::Json => serde_json::to_string(&record)? + "\n",
                Format::Graph6 => record.extremal_graphs.iter().map(|g| g.clone() + "\n").collect(),
                _ => return Err(Failure("oracle prints json or graph6".into())),
            };
            write_out(run.out.as_ref(), text.as_bytes())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, grid, format, run } => verify(suite, grid, format, run),
        Command::Sweep { grid, format, run } => verify(Suite::BoundarySweep, grid, format, run),
    }
}

fn runner(opts: &RunOpts) -> Result<Runner, Failure> {
    let runner = Runner::new(opts.jobs);
    Ok(match &opts.cache {
        Some(path) => {
            let cache = ResultCache::open(path)?;
            for c in cache.corrupt_lines() {
                eprintln!("turan: warning: {c}");
            }
            runner.with_cache(cache)
        }
        None => runner,
    })
}

fn verify(suite: Suite, grid: GridArgs, format: Format, run: RunOpts) -> Result<ExitCode, Failure> {
    let format = match format {
        Format::Csv => ReportFormat::Csv,
        Format::Json => ReportFormat::Json,
        Format::Table => ReportFormat::Table,
        Format::Graph6 => return Err(Failure("reports are csv, json or table".into())),
    };
    let overrides = GridOverrides {
        n: grid.n.map(|p| p.0),
        k: grid.k.map(|p| p.0),
        s: grid.s.map(|p| p.0),
        l: grid.l.map(|p| p.0),
        oracle_max_n: grid.oracle_max,
    };
    let report = runner(&run)?.run_suite(suite, &overrides)?;
    write_out(run.out.as_ref(), &emit_report(&report, format))?;
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn construct(builder: Builder, p: &Params) -> Result<Graph, Failure> {
    let n = || need(p.n, "n");
    let k = || need(p.k, "k");
    let s = || need(p.s, "s");
    let l = || need(p.l, "l");
    Ok(match builder {
        Builder::Turan => turan_graph(n()?, k()?)?,
        Builder::CompleteBipartite => {
            let (n, s) = (n()?, s()?);
            if s > n {
                return Err(Failure("complete-bipartite needs s <= n".into()));
            }
            complete_bipartite(s, n - s)?
        }
        Builder::Regular => good_partition_regular(n()?, l()?)?.0,
        Builder::R1 => r1_bipartite(n()?, l()?)?.graph,
        Builder::G1 => g1(n()?, s()?, l()?)?,
        Builder::G1Relaxed => g1_relaxed(n()?, s()?, l()?)?,
        Builder::G2 => g2(n()?, s()?, l()?)?,
        Builder::AlonFrankl => alon_frankl_extremal(n()?, k()?, s()?)?,
        Builder::DenseTuran => dense_turan_component(n()?, k()?, s()?)?,
        Builder::Main => main_extremal(n()?, k()?, s()?, l()?)?,
    })
}

fn formula(name: FormulaName, p: &Params) -> Result<String, Failure> {
    let get = |v: Option<usize>, name: &str| need(v, name).map(|x| x as u64);
    let n = || get(p.n, "n");
    let k = || get(p.k, "k");
    let s = || get(p.s, "s");
    let l = || get(p.l, "l");
    let result = match name {
        FormulaName::TuranEdges => return Ok(json!({ "value": turan_edges(n()?, k()?)? }).to_string()),
        FormulaName::FamilyEdges => {
            let (a, b) = extremal_family_edges(n()?, s()?, l()?)?;
            return Ok(json!({ "g1": a, "g2": b }).to_string());
        }
        FormulaName::ExStar => ex_star(n()?, l()?),
        FormulaName::ExCliqueMatching => ex_clique_matching(n()?, k()?, s()?)?,
        FormulaName::ExMain => ex_main(n()?, k()?, s()?, l()?)?,
        FormulaName::ExK3 => ex_k3(n()?, s()?, l()?)?,
    };
    Ok(serde_json::to_string(&result)?)
}
