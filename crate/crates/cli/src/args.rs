use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "symcc", version, about = "Component counts, symmetric functions and Specht modules")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Worker threads for cell marking (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Add wall-clock time to the run manifest (makes output nondeterministic).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Upper bounds on b0 for degree d in n variables.
    Bounds { d: usize, n: usize },
    /// Components of Z(P) inside a box.
    Components(GridArgs),
    /// Components of the complement of Z(P) inside a box.
    Complement(GridArgs),
    /// Clusters of candidate common zeros of a polynomial system.
    System(SystemArgs),
    /// Component count of a symmetric hypersurface from diagonal-line samples.
    #[command(name = "symmetric-b0")]
    SymmetricB0(SymmetricArgs),
    /// symmetric-b0 over a range of n.
    Stability(StabilityArgs),
    /// Specht module dimensions.
    Specht(SpechtArgs),
    /// Isotypic decomposition of the permutation module on k-subsets.
    Young {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Run built-in consistency suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Family (sharpness:d, sigma:a0,..,ad, sphere:n), inline JSON, or a JSON file.
    #[arg(long, allow_hyphen_values = true)]
    pub poly: String,
    /// "lo,hi" for every axis, or "lo1,hi1;lo2,hi2;..." per axis.
    #[arg(long = "box", allow_hyphen_values = true)]
    pub bx: String,
    /// Cells per axis on the first pass.
    #[arg(long, default_value_t = 8)]
    pub res: usize,
    /// Number of variables for sigma families.
    #[arg(long)]
    pub n: Option<usize>,
    /// Stay at the first resolution.
    #[arg(long)]
    pub no_refine: bool,
}

#[derive(Debug, Args)]
pub struct SystemArgs {
    /// System family, e.g. example3:2.
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long = "box", allow_hyphen_values = true, default_value = "-1/2,3/2")]
    pub bx: String,
    #[arg(long, default_value_t = 8)]
    pub res: usize,
    #[arg(long)]
    pub no_refine: bool,
}

#[derive(Debug, Args)]
pub struct SymmetricArgs {
    /// Coefficients a0,..,ad of sum a_i sigma_i.
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct StabilityArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub coeffs: String,
    /// Smallest n (default: max(2, d)).
    #[arg(long)]
    pub n_min: Option<usize>,
    #[arg(long)]
    pub n_max: usize,
    #[arg(long, default_value_t = 500)]
    pub samples: usize,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct SpechtArgs {
    /// Parts, e.g. 3,3.
    #[arg(long)]
    pub partition: Option<String>,
    /// Dimension of the balanced two-row partition of n.
    #[arg(long)]
    pub two_row_max: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Newton,
    Example3,
    Hooks,
    AuxIneq,
    Orbit,
    All,
}
