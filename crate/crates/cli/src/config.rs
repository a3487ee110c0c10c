use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use qring::groebner::OrderKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Groebner,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderName {
    Lex,
    Grlex,
    Grevlex,
}

impl From<OrderName> for OrderKind {
    fn from(o: OrderName) -> Self {
        match o {
            OrderName::Lex => OrderKind::Lex,
            OrderName::Grlex => OrderKind::Grlex,
            OrderName::Grevlex => OrderKind::Grevlex,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "qring", version, about = "Dihedral quandle rings: adjacency matrices, idempotents, Groebner bases and automorphisms")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the adjacency matrix of Q_n
    Adjacency,
    /// Print the idempotent polynomial system of Q_n
    System,
    /// Find the integer idempotents of Z[Q_n] with augmentation 1
    Idempotents,
    /// Run every Q_5 reproduction check
    #[command(name = "verify-q5")]
    VerifyQ5,
    /// Compare quandle automorphisms with basis-permuting ring automorphisms
    Automorphisms,
    /// Reduced Groebner basis of a polynomial system file
    Groebner {
        /// One polynomial per line, variables t0, t1, ...
        input: PathBuf,
    },
}

#[derive(Debug, Clone, Default, clap::Args)]
pub struct Flags {
    /// Quandle order
    #[arg(long, global = true)]
    pub n: Option<usize>,
    /// Brute-force box radius
    #[arg(long, global = true)]
    pub bound: Option<u64>,
    /// Monomial order
    #[arg(long, global = true, value_enum)]
    pub order: Option<OrderName>,
    /// Idempotent search engine
    #[arg(long, global = true, value_enum)]
    pub method: Option<Method>,
    /// Output format
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads for searches that can be partitioned
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Critical-pair budget for each Groebner basis computation
    #[arg(long, global = true)]
    pub budget_pairs: Option<usize>,
    /// Branch budget for the integer-point solver
    #[arg(long, global = true)]
    pub budget_branches: Option<usize>,
    /// Seed for randomized sampling
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Run the structure checks as well
    #[arg(long, global = true)]
    pub verify: bool,
    /// Include wall-clock duration in the output (makes output run-dependent)
    #[arg(long, global = true)]
    pub timing: bool,
    /// JSON file with default values for any of the options above
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
}

/// Values read from `--config`. Every field is optional.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub n: Option<usize>,
    pub bound: Option<u64>,
    pub order: Option<OrderName>,
    pub method: Option<Method>,
    pub format: Option<Format>,
    pub jobs: Option<usize>,
    pub budget_pairs: Option<usize>,
    pub budget_branches: Option<usize>,
    pub seed: Option<u64>,
    pub verify: Option<bool>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        serde_json::from_str(&text).map_err(|e| format!("invalid config {}: {e}", path.display()))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Budget {
    pub pairs: usize,
    pub branches: usize,
}

/// Fully resolved settings, echoed in every JSON report.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub n: usize,
    pub bound: u64,
    pub order: OrderName,
    pub method: Method,
    pub format: Format,
    pub jobs: usize,
    pub budget: Budget,
    pub seed: u64,
    pub verify: bool,
}

impl RunConfig {
    /// Flags beat the config file, which beats the built-in defaults.
    pub fn resolve(flags: &Flags, file: FileConfig) -> Self {
        Self {
            n: flags.n.or(file.n).unwrap_or(5),
            bound: flags.bound.or(file.bound).unwrap_or(qring::system::DEFAULT_BOUND),
            order: flags.order.or(file.order).unwrap_or(OrderName::Grevlex),
            method: flags.method.or(file.method).unwrap_or(Method::Groebner),
            format: flags.format.or(file.format).unwrap_or(Format::Text),
            jobs: flags.jobs.or(file.jobs).unwrap_or(1).max(1),
            budget: Budget {
                pairs: flags
                    .budget_pairs
                    .or(file.budget_pairs)
                    .unwrap_or(qring::groebner::DEFAULT_PAIR_BUDGET),
                branches: flags.budget_branches.or(file.budget_branches).unwrap_or(10_000),
            },
            seed: flags.seed.or(file.seed).unwrap_or(0),
            verify: flags.verify || file.verify.unwrap_or(false),
        }
    }
}
