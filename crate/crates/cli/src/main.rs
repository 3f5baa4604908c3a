//! Command-line front end: graph generation, flood simulation with trace
//! output, auxiliary-graph export, center computation, the (k,c)-flooding
//! decision problem, the total-domination reduction, and the verification
//! suites.
//!
//! Exit codes: 0 success (or "yes" for `decide`), 1 "no" (`decide`) or
//! suite failures (`verify`), 2 usage or I/O errors, 3 internal invariant
//! violations (the simulation round cap).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use amflood::{
    build_aux_multi, build_aux_single, decide_flooding, flood_k, greedy_k_center, is_exploratory,
    k_radius, ni_k_radius, random_connected, random_tree, reduce_total_domination, run_suite,
    run_suite_random, simulate, total_domination_number, Error, FloodingInstance, Graph, Node,
    SourceSet,
};

#[derive(Parser)]
#[command(name = "amflood", version, about = "Synchronous amnesiac flooding toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph in the text format.
    Gen(GenArgs),
    /// Simulate a flood and print `rounds=R messages=M`.
    Run(RunArgs),
    /// Export an auxiliary graph with its node-mapping sidecar.
    Aux(AuxArgs),
    /// Compute a center report for one objective.
    Centers(CentersArgs),
    /// Decide the (k,c)-flooding problem; exit 0 = yes, 1 = no.
    Decide(DecideArgs),
    /// Reduce a total-domination budget to a (k,2)-flooding instance.
    Reduce(ReduceArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    TreeRandom,
    Gnp,
}

#[derive(Args)]
struct GenArgs {
    /// Graph family.
    family: Family,
    /// Node count.
    n: usize,
    /// Edge probability (gnp only).
    #[arg(long)]
    p: Option<f64>,
    /// RNG seed (gnp and tree-random).
    #[arg(long)]
    seed: Option<u64>,
    /// Output file (stdout when absent).
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RunArgs {
    /// Graph file in the text format.
    graph: PathBuf,
    /// Source nodes, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    sources: Vec<Node>,
    /// Write the full trace (one JSON object per line) to this file.
    #[arg(long)]
    trace: Option<PathBuf>,
}

#[derive(Args)]
struct AuxArgs {
    graph: PathBuf,
    /// Source nodes; one source selects the mirrored single-source
    /// construction, several the virtual-source construction.
    #[arg(long, value_delimiter = ',', required = true)]
    sources: Vec<Node>,
    /// Output file for the graph; the mapping goes to `FILE.map`.
    /// Without it both blocks go to stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    #[value(name = "k_radius")]
    KRadius,
    #[value(name = "ni_k_radius")]
    NiKRadius,
    #[value(name = "total_domination")]
    TotalDomination,
    #[value(name = "flood_k")]
    FloodK,
    #[value(name = "greedy")]
    Greedy,
}

#[derive(Args)]
struct CentersArgs {
    graph: PathBuf,
    #[arg(long)]
    objective: ObjectiveArg,
    /// Subset size (ignored for total_domination).
    #[arg(long)]
    k: Option<usize>,
    /// Lift the brute-force node limit (hard cap 64).
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct DecideArgs {
    graph: PathBuf,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    c: usize,
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct ReduceArgs {
    graph: PathBuf,
    /// Total-domination budget to reduce.
    #[arg(long)]
    k: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite id (see `amflood verify --suite help` for the list).
    #[arg(long)]
    suite: String,
    /// Exhaustive sweep bound; in randomized mode the sampled graph size.
    #[arg(long, default_value_t = 5)]
    n_max: usize,
    /// Switch to randomized mode with this many samples.
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn main() -> ExitCode {
    if let Ok(value) = std::env::var("FLOOD_THREADS") {
        if let Ok(threads) = value.parse::<usize>() {
            if threads >= 1 {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(threads)
                    .build_global();
            }
        }
    }
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                CliError::Lib(Error::RoundCapExceeded { .. }) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

enum CliError {
    Lib(Error),
    Io(String),
    Usage(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(msg) | CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult<T = u8> = Result<T, CliError>;

fn read_graph(path: &Path) -> CliResult<Graph> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Ok(Graph::from_text(&text)?)
}

fn write_out(path: &Option<PathBuf>, content: &str) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, content)
            .map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn witness_braces(nodes: &[Node]) -> String {
    let inner: Vec<String> = nodes.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn dispatch(command: Command) -> CliResult {
    match command {
        Command::Gen(args) => gen(args),
        Command::Run(args) => run(args),
        Command::Aux(args) => aux(args),
        Command::Centers(args) => centers(args),
        Command::Decide(args) => decide(args),
        Command::Reduce(args) => reduce(args),
        Command::Verify(args) => verify(args),
    }
}

fn gen(args: GenArgs) -> CliResult {
    let n = args.n;
    let graph = match args.family {
        Family::Path => {
            require(n >= 1, "path needs n >= 1")?;
            Graph::path(n)
        }
        Family::Cycle => {
            require(n >= 3, "cycle needs n >= 3")?;
            Graph::cycle(n)
        }
        Family::Complete => {
            require(n >= 1, "complete needs n >= 1")?;
            Graph::complete(n)
        }
        Family::Star => {
            require(n >= 1, "star needs n >= 1")?;
            Graph::star(n)
        }
        Family::TreeRandom => {
            let seed = args.seed.ok_or_else(|| usage("tree-random needs --seed"))?;
            random_tree(n, seed)?
        }
        Family::Gnp => {
            let p = args.p.ok_or_else(|| usage("gnp needs --p"))?;
            let seed = args.seed.ok_or_else(|| usage("gnp needs --seed"))?;
            random_connected(n, p, seed)?
        }
    };
    write_out(&args.output, &graph.to_text())?;
    Ok(0)
}

fn require(cond: bool, msg: &str) -> CliResult<()> {
    if cond {
        Ok(())
    } else {
        Err(usage(msg))
    }
}

fn usage(msg: &str) -> CliError {
    CliError::Usage(msg.to_string())
}

fn run(args: RunArgs) -> CliResult {
    let g = read_graph(&args.graph)?;
    let s = SourceSet::new(&g, args.sources)?;
    let trace = simulate(&g, &s)?;
    if let Some(path) = &args.trace {
        fs::write(path, trace.to_jsonl())
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    }
    println!(
        "rounds={} messages={}",
        trace.rounds_count(),
        trace.total_messages()
    );
    Ok(0)
}

fn aux(args: AuxArgs) -> CliResult {
    let g = read_graph(&args.graph)?;
    let s = SourceSet::new(&g, args.sources)?;
    let aux = if s.len() == 1 {
        build_aux_single(&g, s.nodes()[0])?
    } else {
        build_aux_multi(&g, &s)?
    };
    let graph_text = aux.graph.to_text();
    let mapping = aux.mapping_text();
    match &args.output {
        Some(path) => {
            fs::write(path, graph_text)
                .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
            let map_path = path.with_extension(
                path.extension()
                    .map(|e| format!("{}.map", e.to_string_lossy()))
                    .unwrap_or_else(|| "map".into()),
            );
            fs::write(&map_path, mapping)
                .map_err(|e| CliError::Io(format!("{}: {e}", map_path.display())))?;
        }
        None => {
            print!("{graph_text}");
            print!("{mapping}");
        }
    }
    Ok(0)
}

fn centers(args: CentersArgs) -> CliResult {
    let g = read_graph(&args.graph)?;
    let need_k = || args.k.ok_or_else(|| usage("this objective needs --k"));
    let report = match args.objective {
        ObjectiveArg::KRadius => k_radius(&g, need_k()?, args.force)?,
        ObjectiveArg::NiKRadius => {
            let k = need_k()?;
            match ni_k_radius(&g, k, args.force)? {
                Some(report) => report,
                None => {
                    println!("ni_k_radius {k} infeasible");
                    return Ok(0);
                }
            }
        }
        ObjectiveArg::TotalDomination => total_domination_number(&g, args.force)?,
        ObjectiveArg::FloodK => flood_k(&g, need_k()?, args.force)?,
        ObjectiveArg::Greedy => greedy_k_center(&g, need_k()?)?,
    };
    println!("{}", report.to_line());
    Ok(0)
}

fn decide(args: DecideArgs) -> CliResult {
    let g = read_graph(&args.graph)?;
    let instance = FloodingInstance::new(g, args.k, args.c)?;
    match decide_flooding(&instance, args.force)? {
        Some(witness) => {
            println!("yes witness={}", witness_braces(&witness));
            Ok(0)
        }
        None => {
            println!("no");
            Ok(1)
        }
    }
}

fn reduce(args: ReduceArgs) -> CliResult {
    let g = read_graph(&args.graph)?;
    let reduction = reduce_total_domination(&g, args.k)?;
    let mut out = reduction.instance.graph.to_text();
    out.push_str(&format!("# k {}\n# c {}\n", reduction.instance.k, reduction.instance.c));
    if let Some(gadget) = &reduction.gadget {
        out.push_str(&format!("# attach {}\n", gadget.attach_node));
        let ids: Vec<String> = gadget.gadget_nodes.iter().map(ToString::to_string).collect();
        out.push_str(&format!("# gadget {}\n", ids.join(" ")));
    }
    write_out(&args.output, &out)?;
    Ok(0)
}

fn verify(args: VerifyArgs) -> CliResult {
    let result = match args.samples {
        Some(samples) => run_suite_random(&args.suite, args.n_max, samples, args.seed)?,
        None => run_suite(&args.suite, args.n_max)?,
    };
    println!("{}", result.summary_line());
    for failure in &result.failures {
        println!("failure: {failure}");
    }
    for note in &result.notes {
        println!("report: {note}");
    }
    if !result.passed() && !is_exploratory(&args.suite) {
        return Ok(1);
    }
    Ok(0)
}
