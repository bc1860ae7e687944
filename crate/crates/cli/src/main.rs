//! `rg`: ribbon graph partial duals, minors, biseparations and the knot
//! bridge from the command line.
//!
//! Exit status: 0 on success, 1 when a decision comes out negative (no
//! minor, no biseparation, no low-genus partial dual, a failed self-test),
//! 2 on input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "rg", version, about = "Ribbon graphs: partial duals, minors and biseparations")]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Cap on worker threads for the parallel sweeps.
    #[arg(long, global = true, value_name = "N")]
    pub threads: Option<usize>,

    /// Largest edge count for enumerations, sweeps and minor-search hosts.
    #[arg(long, global = true, value_name = "N")]
    pub max_edges: Option<usize>,

    /// Largest edge count for scans over all partial duals.
    #[arg(long, global = true, value_name = "N")]
    pub brute_cap: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Euler genus of a ribbon graph.
    Genus { file: PathBuf },
    /// Geometric dual.
    Dual { file: PathBuf },
    /// Partial dual with respect to a set of edges.
    Pdual {
        file: PathBuf,
        /// Comma-separated edge labels.
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        edges: Vec<String>,
    },
    /// Contract edges, in the order given.
    Contract {
        file: PathBuf,
        #[arg(long = "edge", value_delimiter = ',', required = true)]
        edges: Vec<String>,
    },
    /// Delete edges or vertices.
    Delete(DeleteArgs),
    /// Search for a minor equivalent to a pinned obstruction or a graph file.
    Minor {
        file: PathBuf,
        /// X1, X2, X3, P1, P2, P3, or a path to a graph file.
        #[arg(long)]
        target: String,
    },
    /// Find a plane- or RP2-biseparation.
    Biseparation {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
    },
    /// Intersection graphs and the obstruction certificate of a bouquet.
    Bouquet {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "intersection")]
        show: ShowArg,
    },
    /// Decide whether some partial dual has Euler genus at most one.
    Characterize { file: PathBuf },
    /// Enumerate ribbon graphs up to equivalence.
    Enumerate(EnumerateArgs),
    /// Search for minor-minimal graphs without a low-genus partial dual.
    Obstructions {
        /// Experimental: look for obstructions to Euler genus at most K.
        #[arg(long, default_value_t = 1, value_name = "K")]
        genus: usize,
    },
    /// Build the all-A ribbon graph of a link diagram and decide it.
    Knot(KnotArgs),
    /// Run the theorem sweeps on all small connected graphs.
    Selftest,
    /// Euler genus distribution over all partial duals.
    Profile { file: PathBuf },
}

#[derive(Args, Debug)]
pub struct DeleteArgs {
    pub file: PathBuf,
    #[arg(long = "edge", value_delimiter = ',', required_unless_present = "vertices")]
    pub edges: Vec<String>,
    #[arg(long = "vertex", value_delimiter = ',')]
    pub vertices: Vec<String>,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    /// Largest edge count.
    #[arg(long)]
    pub edges: usize,
    /// Only graphs with exactly that many edges.
    #[arg(long)]
    pub exact: bool,
    /// One-vertex graphs only.
    #[arg(long, conflicts_with = "all")]
    pub bouquets: bool,
    /// Include disconnected graphs.
    #[arg(long)]
    pub all: bool,
    /// Print the number of classes only.
    #[arg(long)]
    pub count: bool,
    /// Write one .rg file per class into this directory.
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct KnotArgs {
    /// PD code, e.g. "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)".
    #[arg(long)]
    pub pd: Option<String>,
    /// Signed Gauss code, e.g. "O1- U2- O3- U1- O2- U3-".
    #[arg(long)]
    pub gauss: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum KindArg {
    Plane,
    Rp2,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ShowArg {
    Intersection,
    Quotient,
    Certificate,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.negative {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
