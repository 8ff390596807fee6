use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "glmn",
    version,
    about = "GL(M|N) weights: Serganova's algorithm, highest weights, relevant orbits"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the algorithm (or its inverse) on weights read as JSON lines.
    Transform(TransformArgs),
    /// Report set membership for weights read as JSON lines.
    Classify(ClassifyArgs),
    /// Print the orbit representative matrix for weights read as JSON lines.
    OrbitRep(OrbitRepArgs),
    /// Print positive roots, the excess pairs, and their Hasse diagram.
    Roots(RootsArgs),
    /// List the weights of a box, optionally filtered.
    Enumerate(EnumerateArgs),
    /// Run exhaustive verification checks over a box.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, Args)]
pub struct RankArgs {
    /// Number of even basis vectors.
    #[arg(long = "M")]
    pub m: usize,
    /// Number of odd basis vectors.
    #[arg(long = "N")]
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DirectionArg {
    Forward,
    Inverse,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ConventionArg {
    Uminus,
    Uplus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    Json,
    #[default]
    Jsonl,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    All,
    Standard,
    Mixed,
    Relevant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckArg {
    Image,
    Roundtrip,
    Order,
    Theorem,
    Trace,
    All,
}

#[derive(Debug, Args)]
pub struct TransformArgs {
    #[command(flatten)]
    pub rank: RankArgs,
    /// 0 for generic q, otherwise a prime.
    #[arg(long = "p")]
    pub p: u32,
    #[arg(long, value_enum, default_value = "forward")]
    pub direction: DirectionArg,
    /// `v1`, `v2`, or `file:PATH` with a JSON array of [i,j] pairs.
    #[arg(long, default_value = "v1")]
    pub order: String,
    /// Include the per-step trace.
    #[arg(long)]
    pub trace: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub rank: RankArgs,
    #[arg(long = "p")]
    pub p: u32,
    #[arg(long, value_enum, default_value = "uplus")]
    pub convention: ConventionArg,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct OrbitRepArgs {
    #[command(flatten)]
    pub rank: RankArgs,
}

#[derive(Debug, Args)]
pub struct RootsArgs {
    #[command(flatten)]
    pub rank: RankArgs,
    /// Borel word as comma-separated indices; defaults to the mixed word.
    #[arg(long, value_delimiter = ',')]
    pub word: Option<Vec<usize>>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub rank: RankArgs,
    /// Coordinate range `LO:HI`.
    #[arg(long = "box", allow_hyphen_values = true)]
    pub bx: String,
    #[arg(long, value_enum, default_value = "all")]
    pub filter: FilterArg,
    #[arg(long = "p", default_value_t = 0)]
    pub p: u32,
    #[arg(long, value_enum, default_value = "uplus")]
    pub convention: ConventionArg,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Maximum number of box points.
    #[arg(long)]
    pub limit: Option<u128>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub rank: RankArgs,
    #[arg(long = "p")]
    pub p: u32,
    /// Coordinate range `LO:HI`.
    #[arg(long = "box", allow_hyphen_values = true)]
    pub bx: String,
    #[arg(long, value_enum, default_value = "all")]
    pub check: CheckArg,
    /// Maximum number of linear extensions enumerated by the order check.
    #[arg(long)]
    pub cap: Option<usize>,
    /// Maximum number of box points.
    #[arg(long)]
    pub limit: Option<u128>,
    /// Counterexamples kept per report.
    #[arg(long)]
    pub max_failures: Option<usize>,
}
