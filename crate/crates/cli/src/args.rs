use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hipermotif::{Engine, Semantics};

#[derive(Debug, Parser)]
#[command(name = "hipermotif", version, about = "Parallel subgraph matching on directed property graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find embeddings of a pattern graph in a target graph.
    Match(MatchArgs),
    /// Generate a synthetic graph in edge-list format.
    Generate(GenerateArgs),
    /// Time engines over graphs, patterns and worker counts.
    Bench(BenchArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Match(_) => "match",
            Command::Generate(_) => "generate",
            Command::Bench(_) => "bench",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SemanticsArg {
    Mono,
    Iso,
}

impl From<SemanticsArg> for Semantics {
    fn from(s: SemanticsArg) -> Self {
        match s {
            SemanticsArg::Mono => Semantics::Mono,
            SemanticsArg::Iso => Semantics::Iso,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Hipermotif,
    Vf2ps,
    Oracle,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Hipermotif => Engine::HiPerMotif,
            EngineArg::Vf2ps => Engine::Vf2ps,
            EngineArg::Oracle => Engine::Oracle,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Er,
    Ws,
    Sf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum FormatArg {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct MatchArgs {
    /// Pattern graph (edge-list file).
    #[arg(long)]
    pub pattern: PathBuf,
    /// Target graph (edge-list file).
    #[arg(long)]
    pub target: PathBuf,
    #[arg(long, value_enum, default_value_t = SemanticsArg::Mono)]
    pub semantics: SemanticsArg,
    #[arg(long, value_enum, default_value_t = EngineArg::Hipermotif)]
    pub engine: EngineArg,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Stop after this many embeddings.
    #[arg(long)]
    pub limit: Option<usize>,
    /// Match the pattern as given, without structural reordering.
    #[arg(long)]
    pub no_reorder: bool,
    /// Print one embedding per line (target ids in pattern-vertex order).
    #[arg(long)]
    pub print: bool,
    /// Re-verify every embedding before reporting it.
    #[arg(long)]
    pub paranoid: bool,
    /// Write results here instead of stdout.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

/// Generator parameters shared by `generate` and `bench`.
#[derive(Debug, Args, Clone, Default)]
pub struct FamilyParams {
    #[arg(long)]
    pub n: Option<usize>,
    /// Edge probability (er) or rewiring probability (ws).
    #[arg(long)]
    pub p: Option<f64>,
    /// Lattice degree (ws).
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub alpha: Option<f64>,
    #[arg(long)]
    pub beta: Option<f64>,
    #[arg(long)]
    pub gamma: Option<f64>,
    #[arg(long)]
    pub delta_in: Option<f64>,
    #[arg(long)]
    pub delta_out: Option<f64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Vertex attribute as `key:v1,v2,...` (repeatable).
    #[arg(long = "vertex-attr")]
    pub vertex_attr: Vec<String>,
    /// Edge attribute as `key:v1,v2,...` (repeatable).
    #[arg(long = "edge-attr")]
    pub edge_attr: Vec<String>,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(value_enum, required_unless_present = "config")]
    pub family: Option<FamilyArg>,
    #[command(flatten)]
    pub params: FamilyParams,
    /// Read the generator spec from a `key=value` file instead of flags.
    #[arg(long, conflicts_with = "family")]
    pub config: Option<PathBuf>,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Target graph files (repeatable). Without one, a target is generated.
    #[arg(long)]
    pub target: Vec<PathBuf>,
    /// Family of the generated target.
    #[arg(long, value_enum, default_value_t = FamilyArg::Er)]
    pub family: FamilyArg,
    #[command(flatten)]
    pub params: FamilyParams,
    /// Pattern files (repeatable). Without one, patterns are sampled from
    /// each target.
    #[arg(long)]
    pub pattern: Vec<PathBuf>,
    /// Number of sampled patterns per target.
    #[arg(long, default_value_t = 1)]
    pub patterns: usize,
    /// Vertex count of sampled patterns.
    #[arg(long, default_value_t = 5)]
    pub pattern_size: usize,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [EngineArg::Hipermotif, EngineArg::Vf2ps])]
    pub engines: Vec<EngineArg>,
    #[arg(long, value_delimiter = ',', default_values_t = [1usize])]
    pub workers: Vec<usize>,
    #[arg(long, default_value_t = 5)]
    pub reps: usize,
    #[arg(long, value_enum, default_value_t = SemanticsArg::Mono)]
    pub semantics: SemanticsArg,
    #[arg(long)]
    pub limit: Option<usize>,
    /// Match without structural reordering.
    #[arg(long)]
    pub no_reorder: bool,
    /// Compare reorder on/off on one engine over random patterns of 3 to 20
    /// vertices.
    #[arg(long)]
    pub ablate_reorder: bool,
    /// Instances for `--ablate-reorder`.
    #[arg(long, default_value_t = 20)]
    pub instances: usize,
    /// Engine for `--ablate-reorder`.
    #[arg(long, value_enum, default_value_t = EngineArg::Vf2ps)]
    pub ablate_engine: EngineArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}
