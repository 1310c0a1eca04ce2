//! Command line front end: structural reports, embeddings, root systems and
//! golden corpus verification.

pub mod commands;
pub mod corpus;
pub mod error;
pub mod input;
pub mod render;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use lieembed::embed::SearchConfig;

pub use commands::{run, Output};
pub use error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    /// Real torus to a maximally real Cartan subalgebra.
    Torus,
    /// Compact torus to a maximally compact Cartan subalgebra.
    CompactTorus,
    AbelianNilpotent,
    Nilpotent,
}

#[derive(Debug, Parser)]
#[command(name = "lieembed", version, about = "Exact structure theory of real Lie algebras")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Seed for the random part of element searches; defaults to LIEEMBED_SEED or 0.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Number of candidates tried per element search.
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Killing form, radical and Levi factor.
    Analyze { input: String },
    /// Run one of the embedding algorithms on a subspace.
    Embed {
        input: String,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Comma separated elements, e.g. "e8+e10, e11".
        #[arg(long, default_value = "")]
        subspace: String,
    },
    /// Roots of a torus, on the whole algebra or on an invariant subspace.
    Roots {
        input: String,
        /// Torus basis; root coordinates follow this order.
        #[arg(long)]
        cartan: String,
        #[arg(long)]
        ambient: Option<String>,
    },
    /// Dynkin diagram of the roots of a torus.
    Dynkin {
        input: String,
        #[arg(long)]
        cartan: String,
        #[arg(long)]
        ambient: Option<String>,
    },
    /// Bracket table of a set of vector fields.
    VfBrackets { input: String },
    /// Generic rank and number of joint invariants of vector fields.
    VfInvariants {
        input: String,
        /// Combinations of the fields to use instead of all of them.
        #[arg(long)]
        subspace: Option<String>,
    },
    /// Run every case of a golden corpus.
    Verify {
        #[arg(long)]
        corpus: PathBuf,
    },
}

impl Cli {
    pub fn search_config(&self) -> SearchConfig {
        let mut cfg = SearchConfig::from_env();
        if let Some(s) = self.seed {
            cfg.seed = s;
        }
        if let Some(b) = self.budget {
            cfg.budget = b;
        }
        cfg
    }
}
