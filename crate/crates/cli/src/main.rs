//! `cayley-forge`: reproduce, verify, search, census and export.
//!
//! Exit codes: 0 when every claim holds (or the predicate is true), 1 when a
//! claim or predicate fails, 2 for usage and parse errors, 3 when a size cap
//! is exceeded.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "cayley-forge",
    version,
    about = "Cayley graphs with large induced matchings"
)]
#[command(after_help = "Dihedral element a^i b^j is vertex i + n*j of D_2n. \
Set CAYLEY_FORGE_MAX_VERTICES to change the vertex cap (default 1000000).")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a family instance, verify every claim and print its certificate.
    Reproduce {
        #[command(subcommand)]
        family: FamilyArgs,
        /// Write the certificate here instead of stdout.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Certify a user-supplied graph and subset. Exits 0 iff the pair is a
    /// counterexample to the sqrt(x + x'/2) threshold.
    Verify {
        graph: PathBuf,
        subset: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Largest vertex set inducing maximum degree at most k.
    Search(SearchArgs),
    /// Hunt for dihedral Cayley graphs below the threshold.
    Census {
        #[arg(long)]
        max_half_order: usize,
        #[arg(long)]
        connection_size: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Render an instance or a graph file as DOT, subset shaded gray.
    Export {
        #[command(subcommand)]
        source: ExportSource,
        #[arg(long, global = true)]
        dot: Option<PathBuf>,
        /// Also write the graph in JSON form.
        #[arg(long, global = true)]
        graph_json: Option<PathBuf>,
        /// Also write the subset in JSON form.
        #[arg(long, global = true)]
        subset_json: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum FamilyArgs {
    /// Odd graph O_n with the n-subsets avoiding one point.
    Odd {
        #[arg(long)]
        n: u32,
    },
    /// Cay(D_18m, {b, ab, a^3 b}) with the preimage of the 10-vertex set.
    Dihedral {
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Iterated Z_2 wreath products starting from (Z_2, {1}).
    Wreath {
        #[arg(long)]
        levels: u32,
    },
}

#[derive(Subcommand, Debug)]
enum ExportSource {
    Odd {
        #[arg(long)]
        n: u32,
    },
    Dihedral {
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    Wreath {
        #[arg(long)]
        levels: u32,
    },
    /// A graph JSON file with an optional subset JSON file.
    Files {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        subset: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct SearchArgs {
    graph: PathBuf,
    #[arg(long, short = 'k')]
    max_degree: usize,
    #[arg(long, conflicts_with = "heuristic")]
    exact: bool,
    #[arg(long)]
    heuristic: bool,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Give up the optimality proof after this many nodes.
    #[arg(long)]
    node_limit: Option<u64>,
    /// Report search progress on stderr.
    #[arg(long)]
    progress: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Reproduce { family, out } => commands::reproduce(family, out.as_deref()),
        Command::Verify { graph, subset, out } => commands::verify(&graph, &subset, out.as_deref()),
        Command::Search(args) => commands::search(&args),
        Command::Census {
            max_half_order,
            connection_size,
            threads,
        } => commands::census(max_half_order, connection_size, threads),
        Command::Export {
            source,
            dot,
            graph_json,
            subset_json,
        } => commands::export(
            &source,
            dot.as_deref(),
            graph_json.as_deref(),
            subset_json.as_deref(),
        ),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
