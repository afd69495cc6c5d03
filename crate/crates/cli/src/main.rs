mod commands;
mod input;
mod report;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::json;

use report::RunReport;

#[derive(Parser)]
#[command(name = "k3lat", version, about = "Exact computations on the K3 lattice and its involutions")]
struct Cli {
    /// Print the full report as JSON
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute the swap-involution obstruction and check every value
    PaperVerify {
        /// Replace the K3 Gram matrix with a corrupted copy
        #[arg(long, hide = true)]
        corrupt_gram: bool,
    },
    /// Lattice invariants
    Lattice {
        #[command(subcommand)]
        action: LatticeAction,
    },
    /// Structure of an involution
    Involution {
        #[command(subcommand)]
        action: InvolutionAction,
    },
    /// Step-by-step obstruction certificate for an involution
    Certificate {
        /// Built-in name (id, neg_id, swap_k3, perm_u(i,j)) or JSON file
        isometry: String,
    },
    /// All vectors of a given norm in a definite lattice
    Roots {
        /// Built-in name (k3, u, e8_minus) or JSON file
        lattice: String,
        #[arg(allow_negative_numbers = true)]
        target: BigInt,
    },
    /// Period-domain checks for positive 3-planes
    Period {
        #[command(subcommand)]
        action: PeriodAction,
    },
}

#[derive(Subcommand)]
enum LatticeAction {
    /// Rank, signature, determinant, parity
    Info { lattice: String },
    /// The lattice in its JSON form
    Json { lattice: String },
}

#[derive(Subcommand)]
enum InvolutionAction {
    /// (t,c,r) decomposition and invariant-lattice signature
    Analyze { isometry: String },
}

#[derive(Subcommand)]
enum PeriodAction {
    /// Whether no root is orthogonal to the plane
    CheckW { plane: String },
}

fn run(command: Command) -> RunReport {
    let (name, inputs, result) = match command {
        Command::PaperVerify { corrupt_gram } => return verify::paper_verify(corrupt_gram),
        Command::Lattice { action: LatticeAction::Info { lattice } } => {
            ("lattice info", json!({ "lattice": lattice }), commands::lattice_info(&lattice))
        }
        Command::Lattice { action: LatticeAction::Json { lattice } } => {
            ("lattice json", json!({ "lattice": lattice }), commands::lattice_json(&lattice))
        }
        Command::Involution { action: InvolutionAction::Analyze { isometry } } => (
            "involution analyze",
            json!({ "isometry": isometry }),
            commands::involution_analyze(&isometry),
        ),
        Command::Certificate { isometry } => {
            ("certificate", json!({ "isometry": isometry }), commands::certificate(&isometry))
        }
        Command::Roots { lattice, target } => (
            "roots",
            json!({ "lattice": lattice, "target": target.to_string() }),
            commands::roots(&lattice, &target),
        ),
        Command::Period { action: PeriodAction::CheckW { plane } } => {
            ("period check-w", json!({ "plane": plane }), commands::period_check_w(&plane))
        }
    };
    result.unwrap_or_else(|e| RunReport::failed(name, inputs, e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = run(cli.command);
    let out = report.render(cli.json);
    if report.exit_code == report::EXIT_ERROR && !cli.json {
        let _ = std::io::stderr().write_all(out.as_bytes());
    } else {
        let _ = std::io::stdout().write_all(out.as_bytes());
    }
    ExitCode::from(report.exit_code as u8)
}
