use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "conjlab",
    version,
    about = "Conjugacy graphs, potentials and derivations on group rings"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOpts {
    /// Group model: h3, free<n>, dinf, dsemi, h3semi or (lhs|rhs)
    #[arg(long, global = true)]
    pub model: Option<String>,
    /// Seed for sampled checks
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Node budget for breadth-first searches [default: $CONJLAB_DEFAULT_BUDGET or 1000000]
    #[arg(long, global = true)]
    pub budget_nodes: Option<usize>,
    /// Depth budget for conjugation distances
    #[arg(long, global = true, default_value_t = 64)]
    pub budget_diam: u64,
    /// Cutoff index for closed-form potentials (overrides the potential file)
    #[arg(long, global = true)]
    pub trunc_k: Option<u64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
    Table,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Explore the conjugacy graph around an element
    Graph {
        #[arg(long)]
        base: String,
        #[arg(long)]
        radius: u64,
        #[arg(long)]
        suppress_loops: bool,
    },
    /// Probe the bounded-conjugation condition on a finite set
    Bc {
        /// Elements of K, canonical encodings
        #[arg(required = true)]
        k: Vec<String>,
        #[arg(long, default_value_t = 6)]
        cayley_radius: u64,
    },
    /// Apply the derivation induced by a potential to one element
    Derive {
        #[arg(long)]
        potential: PathBuf,
        #[arg(long)]
        element: String,
        #[arg(short, long, default_value_t = 2.0)]
        p: f64,
    },
    /// Check the Leibniz rule on sampled pairs
    Leibniz {
        #[arg(long)]
        potential: PathBuf,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        /// Maximal length of the sampled words
        #[arg(long, default_value_t = 6)]
        word_length: usize,
    },
    /// Evaluate the character of a potential on a morphism (u, v)
    Character {
        #[arg(long)]
        potential: PathBuf,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Check that the character vanishes on sampled loops
    QuasiInner {
        #[arg(long)]
        potential: PathBuf,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 6)]
        word_length: usize,
    },
    /// How far a potential is from vanishing away from a base vertex
    Stabilise {
        #[arg(long)]
        potential: PathBuf,
        #[arg(long)]
        base: String,
        #[arg(long)]
        radius: u64,
        /// Distances r at which to report sup |φ| beyond r
        #[arg(long, value_delimiter = ',')]
        radii: Vec<u64>,
        /// Also count edges whose potential gap is at least this value
        #[arg(long)]
        epsilon: Option<String>,
    },
    /// Largest ‖d(g)‖_p over a Cayley ball
    BoundProbe {
        #[arg(long)]
        potential: PathBuf,
        #[arg(long)]
        radius: u64,
        #[arg(short, long, default_value_t = 2.0)]
        p: f64,
    },
    /// Coefficients and norm certificate of the harmonic inner derivation on h3
    Appendix {
        #[arg(long, default_value_t = 64)]
        m_max: u64,
        #[arg(long)]
        n_max: Option<u64>,
    },
    /// ‖d(a_k)‖_q along a_k = conjugator^k · tail
    Limit {
        #[arg(long)]
        potential: PathBuf,
        /// Word such as "Ax" or "x1.x2^-1"
        #[arg(long)]
        conjugator: String,
        #[arg(long, default_value = "e")]
        tail: String,
        #[arg(long, default_value_t = 2)]
        q: u32,
        #[arg(long, default_value_t = 8)]
        k_max: u64,
    },
    /// ρ(u, a_k u a_k^-1) against ρ(u, a_k^-1 u a_k)
    InverseSeq {
        #[arg(long)]
        u: String,
        #[arg(long)]
        conjugator: String,
        #[arg(long, default_value = "e")]
        tail: String,
        #[arg(long, default_value_t = 8)]
        k_max: u64,
    },
}
