use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use goursat_cli::{cmd_classify, cmd_decompose, cmd_enumerate, cmd_lattice, cmd_verify, CommandResult};
use goursat_core::Limits;

/// Subgroups of finite direct products via Goursat data.
#[derive(Parser, Debug)]
#[command(name = "goursat", version)]
struct Cli {
    /// Cap on group orders, for both construction and enumeration.
    #[arg(long, global = true, env = "GOURSAT_MAX_ORDER")]
    max_order: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Target {
    /// Group expression such as `S3 x Z2 x Z2`.
    group: String,
}

#[derive(Args, Debug)]
struct Gens {
    /// Generators as coordinate tuples, e.g. "(1,0),(0,1)".
    #[arg(long, default_value = "")]
    gens: String,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List every subgroup with its chain.
    Enumerate {
        #[command(flatten)]
        target: Target,
        /// Cross-check against the brute-force enumerator.
        #[arg(long)]
        verify: bool,
        /// JSON output (the default).
        #[arg(long)]
        json: bool,
    },
    /// Chain of the subgroup generated by --gens.
    Decompose {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        gens: Gens,
        #[arg(long)]
        json: bool,
    },
    /// Cyclicity and projection predicates for the subgroup generated by --gens.
    Classify {
        #[command(flatten)]
        target: Target,
        #[command(flatten)]
        gens: Gens,
        #[arg(long)]
        json: bool,
    },
    /// Hasse diagram of the subgroup lattice.
    Lattice {
        #[command(flatten)]
        target: Target,
        #[arg(long, conflicts_with = "dot")]
        json: bool,
        /// Graphviz DOT instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Compare the Goursat enumeration with the brute-force one.
    Verify {
        #[command(flatten)]
        target: Target,
        #[arg(long)]
        json: bool,
    },
}

fn run(cli: Cli) -> CommandResult {
    let limits = cli.max_order.map_or_else(Limits::default, Limits::uniform);
    match cli.command {
        Command::Enumerate { target, verify, .. } => cmd_enumerate(&target.group, verify, &limits),
        Command::Decompose { target, gens, .. } => cmd_decompose(&target.group, &gens.gens, &limits),
        Command::Classify { target, gens, .. } => cmd_classify(&target.group, &gens.gens, &limits),
        Command::Lattice { target, dot, .. } => cmd_lattice(&target.group, dot, &limits),
        Command::Verify { target, .. } => cmd_verify(&target.group, &limits),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok((out, outcome)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(outcome.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
