//! `friendly` — generate, check, search, classify and scan graphs for
//! internal partitions and cohesive sets.
//!
//! Exit codes: 0 success, 1 verified negative answer, 2 usage or input
//! error, 3 budget exhausted (indeterminate). Every randomized command is
//! fully determined by its inputs, seed and budgets.

mod commands;
mod io;

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "friendly",
    about = "Internal (friendly) partitions and cohesive sets in regular graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from one of the built-in families.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Verify a witness (partition, set, or certificate) against a graph.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Search for a witness in a graph.
    #[command(subcommand)]
    Search(SearchCommand),
    /// Extract a k-core, or search for a small cohesive set.
    Cohesive(CohesiveArgs),
    /// Near-bisection by clustered randomized assignment.
    Bisect(BisectArgs),
    /// Run the min-intersection pipeline on a 5-regular graph.
    Pipeline(PipelineArgs),
    /// Classify whole graph families.
    #[command(subcommand)]
    Classify(ClassifyCommand),
    /// Scan a graph family, certifying every member.
    #[command(subcommand)]
    Scan(ScanCommand),
    /// Decide internal-partition existence for an (n-3)-regular graph.
    NearComplete(NearCompleteArgs),
}

#[derive(Subcommand)]
enum GenCommand {
    /// Circulant graph <i1,...,it>_n.
    Circulant(GenCirculantArgs),
    /// Cayley graph of a finite Abelian group.
    Cayley(GenCayleyArgs),
    /// Paley graph on GF(q), q ≡ 1 (mod 4).
    Paley(GenPaleyArgs),
    /// Complete or complete bipartite graph.
    Standard(GenStandardArgs),
    /// Switching-hard sharpness family with its designed bisection.
    Hard(GenHardArgs),
    /// Seeded random regular graph.
    Random(GenRandomArgs),
}

#[derive(Args)]
struct GenCirculantArgs {
    /// Number of vertices.
    #[arg(long)]
    n: usize,
    /// Comma-separated offsets, e.g. "1,2,5".
    #[arg(long, value_delimiter = ',')]
    gens: Vec<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GenCayleyArgs {
    /// Invariant factors, e.g. "2,6" for Z2 x Z6.
    #[arg(long, value_delimiter = ',')]
    factors: Vec<u32>,
    /// Connection set as colon-tuples, e.g. "1:0,0:1,0:5,0:3,1:3".
    #[arg(long, value_delimiter = ',')]
    set: Vec<String>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GenPaleyArgs {
    /// Field order: a prime power congruent to 1 mod 4.
    #[arg(long)]
    q: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum StandardKindArg {
    Complete,
    CompleteBipartite,
}

#[derive(Args)]
struct GenStandardArgs {
    #[arg(long, value_enum)]
    kind: StandardKindArg,
    /// K_size, or K_{size,size} for the bipartite kind.
    #[arg(long)]
    size: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct GenHardArgs {
    #[arg(long)]
    valency: usize,
    /// Class size; the graph has 2*half vertices.
    #[arg(long)]
    half: usize,
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Also write the designed bisection as a partition file.
    #[arg(long)]
    partition_out: Option<PathBuf>,
}

#[derive(Args)]
struct GenRandomArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Verify an internal partition (partition file or certificate).
    Internal(CheckInternalArgs),
    /// Verify a k-cohesive set (set file or cohesive-pair certificate).
    Cohesive(CheckCohesiveArgs),
}

#[derive(Args)]
struct CheckInternalArgs {
    graph: PathBuf,
    witness: PathBuf,
    /// Interpret witness vertex ids as 1-indexed (paper tables).
    #[arg(long)]
    one_indexed: bool,
}

#[derive(Args)]
struct CheckCohesiveArgs {
    graph: PathBuf,
    witness: PathBuf,
    /// Required minimum inside-degree.
    #[arg(long)]
    k: usize,
    #[arg(long)]
    one_indexed: bool,
}

#[derive(Subcommand)]
enum SearchCommand {
    /// Find an internal partition, or prove there is none.
    Internal(SearchInternalArgs),
}

#[derive(Args)]
struct SearchInternalArgs {
    graph: PathBuf,
    /// Strategy: switch, exhaustive, or hybrid.
    #[arg(long, default_value = "hybrid")]
    method: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 50_000_000)]
    node_cap: u64,
    #[arg(long, default_value_t = 64)]
    restarts: u32,
    /// Write the certificate here.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Print the witness 1-indexed.
    #[arg(long)]
    one_indexed: bool,
}

#[derive(Args)]
struct CohesiveArgs {
    graph: PathBuf,
    /// Cohesion level k.
    #[arg(long)]
    k: usize,
    /// Search for a small witness instead of taking the maximal k-core
    /// (regular graphs only; k must equal ceil(d/2)).
    #[arg(long)]
    ban_linial: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 32)]
    restarts: u32,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct BisectArgs {
    graph: PathBuf,
    /// Only the clustering heuristic is registered.
    #[arg(long, default_value = "km")]
    method: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct PipelineArgs {
    graph: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Directory for the certificate and CSV report.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ClassifyCommand {
    /// Classify every connected 5-regular Abelian Cayley graph up to an
    /// order cap.
    Abelian(ClassifyAbelianArgs),
}

#[derive(Args)]
struct ClassifyAbelianArgs {
    #[arg(long)]
    max_order: usize,
    /// Directory for per-graph certificates.
    #[arg(short, long)]
    output: Option<PathBuf>,
    /// Parallelize across specs (deterministic merge order).
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum ScanCommand {
    /// Certify an internal partition in every Paley graph up to max-q.
    Paley(ScanPaleyArgs),
}

#[derive(Args)]
struct ScanPaleyArgs {
    #[arg(long)]
    max_q: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 64)]
    restarts: u32,
    /// Directory for per-order certificates.
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct NearCompleteArgs {
    graph: PathBuf,
    /// Write the partition here when one exists.
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(long)]
    one_indexed: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen(cmd) => commands::gen(cmd),
        Command::Check(cmd) => commands::check(cmd),
        Command::Search(cmd) => commands::search(cmd),
        Command::Cohesive(args) => commands::cohesive(args),
        Command::Bisect(args) => commands::bisect(args),
        Command::Pipeline(args) => commands::pipeline(args),
        Command::Classify(cmd) => commands::classify(cmd),
        Command::Scan(cmd) => commands::scan(cmd),
        Command::NearComplete(args) => commands::near_complete(args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("friendly: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
