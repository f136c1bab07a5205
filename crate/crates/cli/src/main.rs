//! `conewalls <subcommand> --input <path> [--output <path>] [--depth K] [--seed S]`

mod commands;
mod problem;

use std::panic;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use commands::Overrides;
use problem::Problem;

#[derive(Parser)]
#[command(name = "conewalls", version, about = "Exact walls, chambers and fundamental domains in hyperbolic lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Walls of square > -N meeting the cone
    Walls(Args),
    /// Subdivide the cone by explicit walls or by the walls for N
    Chambers(Args),
    /// Dirichlet domain of a group action, with a sampled tiling check
    Dirichlet(Args),
    /// Chambers up to the action: classes glued by a face pairing
    Models(Args),
    /// Projected walls from a Mukai vector
    K3walls(Args),
}

#[derive(clap::Args)]
struct Args {
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long)]
    depth: Option<u64>,
    #[arg(long)]
    seed: Option<u64>,
}

/// An error with its machine-readable code and exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: String,
    pub detail: String,
    pub exit: u8,
}

impl Failure {
    pub fn validation(code: &str, detail: impl Into<String>) -> Self {
        Failure { code: code.to_string(), detail: detail.into(), exit: 2 }
    }

    fn internal(detail: impl Into<String>) -> Self {
        Failure { code: "internal".to_string(), detail: detail.into(), exit: 4 }
    }
}

impl From<conewalls::Error> for Failure {
    fn from(e: conewalls::Error) -> Self {
        use conewalls::Error::*;
        let exit = match e {
            Precondition(_) | Stabilizer { .. } | NotInCone => 3,
            _ => 2,
        };
        Failure { code: e.code().to_string(), detail: e.to_string(), exit }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let (args, which) = match &cli.command {
        Command::Walls(a) => (a, "walls"),
        Command::Chambers(a) => (a, "chambers"),
        Command::Dirichlet(a) => (a, "dirichlet"),
        Command::Models(a) => (a, "models"),
        Command::K3walls(a) => (a, "k3walls"),
    };
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| Failure::validation("io", format!("{}: {e}", args.input.display())))?;
    let p = Problem::parse(&text)?;
    let o = Overrides { depth: args.depth, seed: args.seed };
    let doc = match which {
        "walls" => commands::walls(&p)?,
        "chambers" => commands::chambers(&p)?,
        "dirichlet" => commands::dirichlet(&p, &o)?,
        "models" => commands::models(&p, &o)?,
        _ => commands::k3walls(&p)?,
    };
    let mut out = serde_json::to_string_pretty(&doc).map_err(|e| Failure::internal(e.to_string()))?;
    out.push('\n');
    match &args.output {
        Some(path) => std::fs::write(path, out).map_err(|e| Failure::internal(format!("{}: {e}", path.display()))),
        None => {
            print!("{out}");
            Ok(())
        }
    }
}

fn report(f: &Failure) {
    let v: Value = json!({"error": f.code, "detail": f.detail});
    eprintln!("{v}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    panic::set_hook(Box::new(|_| {}));
    let result = panic::catch_unwind(|| run(&cli)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(Failure::internal(msg))
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            report(&f);
            ExitCode::from(f.exit)
        }
    }
}
