//! `uvdc` command-line driver.
//!
//! Exit codes: 0 success, 1 a coloring failed verification, 2 bad input or
//! arguments, 3 search budget exhausted.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use crate::coloring::{color_graph, read_coloring, verify, write_coloring};
use crate::error::{Error, Result};
use crate::graph::{generate, read_graph, write_graph, GraphKind};
use crate::onestar::{forest_graph, spanning_onestar_forest};
use crate::oracle::{solve_exact, SearchBudget};
use crate::partition::{partition, partition_with_empty, SizeComposition};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "uvdc",
    version,
    about = "Union vertex-distinguishing edge colorings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Color an edge-list graph and report the number of colors.
    Color {
        graph: PathBuf,
        /// Coloring file to write; printed to stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Allow the empty set as an edge label.
        #[arg(long)]
        allow_empty: bool,
        /// Write the spanning 1-star forest as an edge list.
        #[arg(long, value_name = "PATH")]
        dump_forest: Option<PathBuf>,
    },
    /// Check a coloring file against a graph.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Compute the exact index by exhaustive search.
    Exact {
        graph: PathBuf,
        #[arg(long, env = "UVDC_MAX_K", default_value_t = 6)]
        max_k: u32,
        #[arg(long, env = "UVDC_NODES", default_value_t = 200_000_000)]
        nodes: u64,
        #[arg(long, env = "UVDC_SECONDS", default_value_t = 120.0)]
        seconds: f64,
        /// Witness coloring file; printed to stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Partition the subsets of [k] into stars of the given sizes.
    Partition {
        #[arg(short = 'k')]
        k: u32,
        #[arg(short = 'm', value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Include the empty set (sizes must sum to 2^k).
        #[arg(long)]
        with_empty: bool,
    },
    /// Generate a graph as an edge list.
    Gen {
        kind: Family,
        /// Vertex count, or the dimension for hypercubes.
        size: usize,
        /// Edge probability for `random`.
        #[arg(long, default_value_t = 0.1)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Path,
    Cycle,
    Star,
    Complete,
    Hypercube,
    CompleteBinaryTree,
    Random,
    OnestarForest,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded => EXIT_BUDGET,
        Error::Invariant(_) | Error::BoundViolated(_) => EXIT_INVALID,
        _ => EXIT_INPUT,
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| {
        Error::Io(std::io::Error::new(
            e.kind(),
            format!("{}: {e}", path.display()),
        ))
    })
}

fn emit(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Color {
            graph,
            output,
            allow_empty,
            dump_forest,
        } => {
            let g = read_graph(&read(&graph)?)?;
            if let Some(p) = dump_forest {
                let trees = spanning_onestar_forest(&g)?;
                fs::write(p, write_graph(&forest_graph(&g, &trees)))?;
            }
            let c = color_graph(&g, allow_empty)?;
            emit(&write_coloring(&c), output.as_deref(), out)?;
            let valid = verify(&g, &c, allow_empty).is_valid();
            writeln!(out, "k={} valid={valid}", c.k)?;
            Ok(if valid { EXIT_OK } else { EXIT_INVALID })
        }
        Command::Verify { graph, coloring } => {
            let g = read_graph(&read(&graph)?)?;
            let c = read_coloring(&read(&coloring)?)?;
            let report = verify(&g, &c, c.mode.allows_empty());
            write!(out, "{report}")?;
            Ok(if report.is_valid() {
                EXIT_OK
            } else {
                EXIT_INVALID
            })
        }
        Command::Exact {
            graph,
            max_k,
            nodes,
            seconds,
            output,
        } => {
            if !(seconds.is_finite() && seconds > 0.0) {
                return Err(Error::InvalidParams(format!("--seconds {seconds}")));
            }
            let budget = SearchBudget {
                max_k,
                node_limit: nodes,
                time_limit: Duration::from_secs_f64(seconds),
            };
            budget.validate()?;
            let g = read_graph(&read(&graph)?)?;
            let (k, witness) = solve_exact(&g, &budget)?;
            writeln!(out, "index {k}")?;
            emit(&write_coloring(&witness), output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
        Command::Partition {
            k,
            sizes,
            with_empty,
        } => {
            let comp = SizeComposition::new(sizes, k);
            let blocks = if with_empty {
                partition_with_empty(&comp)?
            } else {
                partition(&comp)?
            };
            for b in blocks {
                writeln!(out, "{b}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Gen {
            kind,
            size,
            p,
            seed,
            output,
        } => {
            let kind = match kind {
                Family::Path => GraphKind::Path(size),
                Family::Cycle => GraphKind::Cycle(size),
                Family::Star => GraphKind::Star(size),
                Family::Complete => GraphKind::Complete(size),
                Family::Hypercube => GraphKind::Hypercube(
                    u32::try_from(size).map_err(|_| Error::InvalidParams("dimension".into()))?,
                ),
                Family::CompleteBinaryTree => GraphKind::CompleteBinaryTree(size),
                Family::Random => GraphKind::Random { n: size, p, seed },
                Family::OnestarForest => GraphKind::OneStarForest { n: size, seed },
            };
            emit(&write_graph(&generate(&kind)?), output.as_deref(), out)?;
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code. Diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            return if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
