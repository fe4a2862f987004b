mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use closurelab::Error;

/// Exact m-closures and partition closures of small permutation groups.
///
/// Groups are given as `name:n` (sym, alt, cyclic, dihedral, trivial) or
/// as 1-based generators in cycle notation separated by `;`, e.g.
/// "(1 2)(3 4);(1 3)".
#[derive(Parser, Debug)]
#[command(name = "closurelab", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Include wall-clock timings in JSON output.
    #[arg(long, global = true)]
    pub timings: bool,

    /// Disable data parallelism.
    #[arg(long, global = true)]
    pub sequential: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Orbits on m-tuples of points or on ordered partitions.
    Orbits(OrbitsArgs),
    /// A single closure G^(m) or G^[m].
    Closure(ClosureArgs),
    /// The chain of closures for m = 1..=max-m.
    Chain(ChainArgs),
    /// Build a product of two groups.
    Product(ProductArgs),
    /// Check the closure formulas on one instance or a suite.
    Verify(VerifyArgs),
    /// Scan the catalog for groups that are 2-closed but not 2-partition-closed.
    Explore(ExploreArgs),
}

#[derive(Args, Debug)]
pub struct GroupArgs {
    /// Group spec.
    #[arg(long)]
    pub group: String,
    /// Degree for generator specs (defaults to the largest point mentioned).
    #[arg(long)]
    pub degree: Option<usize>,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("objects").required(true)))]
pub struct OrbitsArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Orbits on m-tuples of points.
    #[arg(long, value_name = "M", group = "objects")]
    pub tuples: Option<usize>,
    /// Orbits on ordered partitions with at most M classes.
    #[arg(long, value_name = "M", group = "objects")]
    pub partitions: Option<usize>,
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("kind").required(true)))]
pub struct ClosureArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// The m-closure.
    #[arg(long, value_name = "M", group = "kind")]
    pub m: Option<usize>,
    /// The m-partition closure.
    #[arg(long, value_name = "M", group = "kind")]
    pub partition: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ChainKind {
    #[value(alias = "point_tuple")]
    Tuple,
    Partition,
}

#[derive(Args, Debug)]
pub struct ChainArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[arg(long, value_enum, default_value = "tuple")]
    pub kind: ChainKind,
    #[arg(long, default_value_t = 3)]
    pub max_m: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ProductKind {
    WreathProductAction,
    Direct,
    WreathImprimitive,
}

#[derive(Args, Debug)]
pub struct ProductArgs {
    #[arg(long, value_enum)]
    pub kind: ProductKind,
    /// Base group K.
    #[arg(long)]
    pub k: String,
    /// Top group L.
    #[arg(long)]
    pub l: String,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// JSON grid spec: {groups, m_range, degree_cap, time_budget_s}.
    #[arg(long, conflicts_with_all = ["theorem", "k", "l", "m"])]
    pub suite: Option<std::path::PathBuf>,
    /// 1, 2, 3 or direct.
    #[arg(long, requires_all = ["k", "l", "m"])]
    pub theorem: Option<String>,
    #[arg(long)]
    pub k: Option<String>,
    #[arg(long)]
    pub l: Option<String>,
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Args, Debug)]
pub struct ExploreArgs {
    #[arg(long, default_value_t = 6)]
    pub max_degree: usize,
}

/// Outcome codes: 0 success, 1 verification failure, 2 parse or usage
/// error, 3 budget exceeded.
pub fn exit_code_for(err: &Error) -> u8 {
    if err.is_budget() {
        3
    } else {
        2
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
