use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "mulecheck", version, about = "Exact colouring and choosability checks on small graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Auto,
    Graph6,
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// `K_t ∨ B`, needs `--t`.
    Kt,
    K3,
    E2,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Input file; standard input when absent or `-`.
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Auto)]
    pub format: Format,
    /// Per-graph wall-clock limit in seconds.
    #[arg(long, value_name = "SECS")]
    pub time_limit: Option<f64>,
    /// Per-graph search-node limit.
    #[arg(long, value_name = "N")]
    pub node_limit: Option<u64>,
    /// Worker threads.
    #[arg(short = 'j', long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long)]
    pub pretty: bool,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Order, size, Δ, ω, α and χ.
    Invariants {
        #[command(flatten)]
        common: Common,
    },
    /// f-choosability, with f = d - r or an explicit vector.
    Choosable {
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with = "f")]
        r: Option<i64>,
        /// Comma-separated list sizes, one per vertex.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        f: Option<Vec<i64>>,
        /// Reduce by graph automorphisms as well.
        #[arg(long)]
        symmetry: bool,
        #[arg(long)]
        max_pot: Option<usize>,
    },
    /// Predicted d1-choosability of `A ∨ B` for the input graph `B`.
    Classify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        t: Option<usize>,
        /// Also run the exhaustive search on the join.
        #[arg(long)]
        check: bool,
    },
    /// Membership in C(k, j) for a catalogue mule or the input graphs.
    Mule {
        #[command(flatten)]
        common: Common,
        /// Catalogue entry: M61, M71, M72 or M8.
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Passes from C(k, j) to C(k-1, j).
    Reduce {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        j: usize,
        /// Keep reducing while the preconditions hold.
        #[arg(long)]
        chain: bool,
    },
    /// χ ≤ max(ω, Δ - 1).
    BkCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        name: Option<String>,
    },
    /// A copy of `K_s ∨ E_t` as a subgraph; `t` defaults to Δ - s.
    ContainsJoin {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 3)]
        s: usize,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        name: Option<String>,
    },
    /// Prediction against search for every B up to the given order.
    Sweep {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long, default_value_t = 5)]
        max_order: usize,
        #[arg(long)]
        time_limit: Option<f64>,
        #[arg(long)]
        node_limit: Option<u64>,
        #[arg(short = 'j', long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        pretty: bool,
    },
}
