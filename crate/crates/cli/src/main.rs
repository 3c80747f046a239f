mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use stabdis_core::Error;

#[derive(Parser, Debug)]
#[command(name = "stabdis", version, about = "Disjointness and transversal-gate bounds for stabilizer codes")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    output: Format,
    /// Worker threads for per-class solves (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check that a code file describes a valid stabilizer code.
    Validate { file: PathBuf },
    /// Print a logical basis; class labels elsewhere refer to it.
    Logicals { file: PathBuf },
    /// Per-class distances, min-distance and max-distance.
    Distance { file: PathBuf },
    /// LP disjointness of one class or all classes, optionally with an
    /// optimal c-disjoint collection.
    Disjointness {
        file: PathBuf,
        /// Representative of the class, as a Pauli string.
        #[arg(long)]
        class: Option<String>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        c: Option<u64>,
    },
    /// Disjointness of the code and its minimizing classes.
    CodeDisjointness { file: PathBuf },
    /// Clifford-hierarchy level bound from distances and disjointness.
    Bound { file: PathBuf },
    /// Largest common support of M logical classes, and the level
    /// certificate it yields.
    Omega {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        /// Skip class pairs ruled out by LP bounds (M = 2 only).
        #[arg(long)]
        prune: bool,
    },
    /// Build the graph code of a graph.
    Reduce {
        graph: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        c: u64,
        /// Replace the graph by two disjoint copies first.
        #[arg(long)]
        double: bool,
        /// Write the qubit label map as JSON to this path.
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Concatenate an outer code with a one-qubit inner code.
    Concat {
        outer: PathBuf,
        inner: PathBuf,
        /// Report the product bound on disjointness instead of the code.
        #[arg(long)]
        check: bool,
    },
    /// Hypergraph product of two parity-check matrices.
    Hgp {
        h1: PathBuf,
        h2: PathBuf,
        /// Report the bound by the classical X-type disjointness instead of
        /// the code.
        #[arg(long)]
        check: bool,
    },
    /// Compare the c-disjointness of a graph code with the independence
    /// number of the graph.
    VerifyLemma3 {
        graph: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        c: u64,
    },
    /// Check a claimed c-disjoint collection of representatives.
    VerifyCollection {
        file: PathBuf,
        #[arg(long)]
        class: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        c: u64,
        #[arg(long)]
        collection: PathBuf,
        /// Also require at least this many members.
        #[arg(long)]
        at_least: Option<usize>,
    },
}

/// A run that could not produce a report.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub const INPUT: u8 = 2;
    pub const RESOURCE: u8 = 3;

    pub fn input(message: String) -> Self {
        Self {
            code: Self::INPUT,
            message,
        }
    }

    pub fn from_error(e: Error) -> Self {
        Self {
            code: if e.is_resource_cap() { Self::RESOURCE } else { Self::INPUT },
            message: e.to_string(),
        }
    }

    pub fn context(self, prefix: &str) -> Self {
        Self {
            message: format!("{prefix}: {}", self.message),
            ..self
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self::from_error(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.into()).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(Failure::INPUT);
        }
    }
    match commands::run(&cli.command) {
        Ok(report) => {
            match cli.output {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&report.json).expect("reports serialize"))
                }
                Format::Text => print!("{}", report.text),
            }
            if report.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
