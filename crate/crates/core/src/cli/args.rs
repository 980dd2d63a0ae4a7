use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::spectral::SectionMethod;

pub(crate) const OUT_DIR_ENV: &str = "BESSEL_RKBS_OUT_DIR";

#[derive(Debug, Parser)]
#[command(
    name = "bessel-rkbs",
    version,
    about = "RKBS pairs of Bessel potential spaces with the Matérn kernel"
)]
pub struct Cli {
    /// Directory receiving report files.
    #[arg(long, global = true, env = OUT_DIR_ENV)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Human-readable tables instead of compact JSON.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether H^{u,p} and H^{v,q} form an RKBS pair with kernel K_s.
    CheckPair(PairArgs),
    /// Interval of kernel orders s admissible for the pair H^{u,p}, H^{v,q}.
    KernelInterval(PairArgs),
    /// Evaluate the Matérn kernel K_s(x, 0) = G_{2s}(|x|).
    EvalKernel(EvalKernelArgs),
    /// Run a numerical verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        config: RunConfig,
    },
}

/// Exact rationals (`3`, `3/2`) and `inf` for exponents.
#[derive(Debug, Args)]
pub struct PairArgs {
    #[arg(short = 'd', long = "d")]
    pub d: u32,
    #[arg(short = 'u', long = "u", allow_hyphen_values = true)]
    pub u: String,
    #[arg(short = 'p', long = "p", allow_hyphen_values = true)]
    pub p: String,
    #[arg(short = 'v', long = "v", allow_hyphen_values = true)]
    pub v: String,
    #[arg(short = 'q', long = "q", allow_hyphen_values = true)]
    pub q: String,
    #[arg(short = 's', long = "s", allow_hyphen_values = true)]
    pub s: Option<String>,
}

#[derive(Debug, Args)]
pub struct EvalKernelArgs {
    #[arg(short = 'd', long = "d")]
    pub d: u32,
    /// Kernel parameter s; the values are G_{2s}(r).
    #[arg(short = 's', long = "s")]
    pub s: String,
    /// Radii, repeated or comma separated.
    #[arg(
        short = 'r',
        long = "r",
        value_delimiter = ',',
        allow_hyphen_values = true
    )]
    pub r: Vec<String>,
    /// Sample a kernel section on a grid with this many points per axis.
    #[arg(long)]
    pub grid_n: Option<usize>,
    /// Grid period.
    #[arg(long = "grid-L")]
    pub grid_length: Option<String>,
    /// Section centre, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub center: Option<Vec<String>>,
    #[arg(long, value_enum, default_value_t = Method::Spectral)]
    pub method: Method,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Spectral,
    Radial,
}

impl From<Method> for SectionMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Spectral => SectionMethod::Spectral,
            Method::Radial => SectionMethod::Radial,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Reproducing,
    Integrability,
    BlowupDilation,
    BlowupRescaled,
    BlowupMollifier,
    Young,
    Norming,
    All,
}

/// Parameters of a verification run. Unset values fall back to each
/// suite's reference configuration.
#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
pub struct RunConfig {
    #[arg(long = "d")]
    pub d: Option<u32>,
    #[arg(long = "s")]
    pub s: Option<String>,
    #[arg(long = "u")]
    pub u: Option<String>,
    #[arg(long = "v")]
    pub v: Option<String>,
    #[arg(long = "p")]
    pub p: Option<String>,
    #[arg(long = "q")]
    pub q: Option<String>,
    /// Convolution order for the Young suite.
    #[arg(long)]
    pub sigma: Option<String>,
    /// Grid period.
    #[arg(long = "L")]
    pub length: Option<String>,
    /// Grid points per axis.
    #[arg(long = "n")]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Number of random fields (Young, norming).
    #[arg(long)]
    pub fields: Option<usize>,
    /// Use nonnegative random fields (Young).
    #[arg(long)]
    pub nonnegative: bool,
}
