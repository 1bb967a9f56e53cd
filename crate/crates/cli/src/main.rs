//! `sknmill` command-line front end.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "sknmill", version, about = "Proof search, focusing and coherence for skew monoidal closed categories")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit a JSON envelope instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Cap on search nodes and rewrite steps.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub budget: usize,

    /// Backend for `enumerate` and `count`.
    #[arg(long, global = true, value_enum, default_value_t = Calculus::Tagged)]
    pub calculus: Calculus,

    /// Worker threads for library-internal parallelism (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Calculus {
    Tagged,
    Naive,
    Unfocused,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum RenderFormat {
    Ascii,
    Latex,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print one focused derivation of SEQ, or fail.
    Derive {
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// Print every derivation of SEQ in the chosen calculus.
    Enumerate {
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// Count the derivations of SEQ in the chosen calculus.
    Count {
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// Decide whether SEQ is derivable.
    Decide {
        #[arg(allow_hyphen_values = true)]
        seq: String,
    },
    /// Rewrite a derivation to its normal form.
    Normalize { file: String },
    /// Compare two derivations (up to ≗) or two terms.
    Eq { left: String, right: String },
    /// Map a derivation to its focused normal form.
    Focus { file: String },
    /// Forget the focusing structure of a focused derivation.
    Emb { file: String },
    /// Translate a Hilbert term into a cut-free derivation.
    Hilbert2seq { file: String },
    /// Translate a derivation into a Hilbert term.
    Seq2hilbert { file: String },
    /// Draw a derivation or focused derivation.
    Render {
        file: String,
        #[arg(long, value_enum, default_value_t = RenderFormat::Ascii)]
        format: RenderFormat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = sknmill::par::with_threads(cli.jobs, || commands::run(&cli));
    outcome.emit(&cli)
}
