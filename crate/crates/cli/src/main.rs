//! `topo`: command-line front end for topokit.
//!
//! Exit status is 0 on success, 1 when the input is well formed but outside
//! the domain of the operation, 2 when it cannot be parsed.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use topokit::ribbon::DEFAULT_BUDGET;

#[derive(Parser)]
#[command(name = "topo", version, about = "Combinatorial topology computations with checkable output")]
pub struct Cli {
    /// Emit one JSON record instead of key=value lines.
    #[arg(long, global = true)]
    json: bool,

    /// Largest search space an exhaustive computation may visit.
    #[arg(long, global = true, value_name = "N", default_value_t = DEFAULT_BUDGET)]
    budget: u128,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Homology groups of a cell scheme (.scheme) or simplicial complex (.cx).
    Homology {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = RingArg::Z)]
        ring: RingArg,
    },
    /// Recognize and classify the surface of a .scheme file.
    Surface {
        file: PathBuf,
        /// Also print the mod 2 intersection form on a homology basis.
        #[arg(long)]
        form: bool,
    },
    /// Minimum genus of a connected graph (.graph).
    Genus {
        file: PathBuf,
        /// Minimum number of cross-caps instead of handles.
        #[arg(long)]
        nonorientable: bool,
        /// Use interlacement ranks instead of face tracing.
        #[arg(long)]
        mohar: bool,
        /// Print a rotation system attaining the minimum.
        #[arg(long)]
        witness: bool,
    },
    /// Surface of a ribbon graph (.rot), or thickening counts of a graph (.graph).
    Thicken {
        file: PathBuf,
        /// List the boundary circuits of a ribbon graph.
        #[arg(long)]
        trace: bool,
        /// List oriented thickening classes of a simple graph.
        #[arg(long)]
        classes: bool,
    },
    /// Planarity of a graph (.graph).
    Planar(PlanarArgs),
    /// Approximability obstruction of a plane path (.path).
    Approx {
        file: PathBuf,
        /// List the singular vertices and unmarked components.
        #[arg(long)]
        verbose: bool,
    },
    /// Double cover classes of a graph, or of a surface with --surface.
    Covers {
        file: PathBuf,
        /// Treat the .scheme file as a surface and count its covers.
        #[arg(long)]
        surface: bool,
        /// List one labeling per class.
        #[arg(long)]
        list: bool,
    },
    /// Linking number of a two-component polygonal link (.link).
    Link { file: PathBuf },
    /// Check the fixture files and run the acceptance criteria.
    Selftest {
        /// Run only criteria whose key contains this text (or whose number it is).
        #[arg(long)]
        filter: Option<String>,
        /// Directory of fixture files to check instead of the bundled one.
        #[arg(long, value_name = "DIR")]
        fixtures: Option<PathBuf>,
    },
}

#[derive(Args)]
pub struct PlanarArgs {
    file: PathBuf,
    /// Decide by the van Kampen obstruction (the default).
    #[arg(long, conflicts_with = "rotation")]
    vk: bool,
    /// Decide by exhaustive rotation search.
    #[arg(long)]
    rotation: bool,
    /// Compute the obstruction cocycle from this drawing (.draw) instead of
    /// the built-in one.
    #[arg(long, value_name = "FILE", conflicts_with = "rotation")]
    drawing: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum RingArg {
    Z2,
    Z,
    Q,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.record.render(json));
            ExitCode::from(out.status)
        }
        Err(e) => {
            let (status, kind) = if e.is_malformed_input() { (2, "malformed") } else { (1, "domain") };
            let hint = commands::diagnostic(&cli, &e);
            if json {
                let mut rec = serde_json::json!({ "error": e.to_string(), "kind": kind });
                if let Some(h) = &hint {
                    rec["hint"] = h.clone().into();
                }
                println!("{rec}");
            }
            eprintln!("error: {e}");
            if let Some(h) = hint {
                eprintln!("{h}");
            }
            ExitCode::from(status)
        }
    }
}
