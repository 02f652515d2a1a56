use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use tarski_cli::commands::io_failure;
use tarski_cli::{render, run, Command, Options};

/// Configuration sets, configuration equations and paradoxical
/// decompositions of group actions. Reads a JSON document, writes a JSON
/// report. Exit codes: 0 success, 2 input error, 3 bound exceeded.
#[derive(Parser)]
#[command(name = "tarski", version)]
struct Cli {
    #[command(subcommand)]
    command: Top,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Input document (default: standard input).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Report destination (default: standard output).
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[arg(long, global = true)]
    bound_depth: Option<usize>,
    #[arg(long, global = true)]
    bound_length: Option<usize>,
    #[arg(long, global = true)]
    bound_pieces: Option<usize>,
    /// Require pieces to partition X and translates to be disjoint.
    #[arg(long, global = true)]
    strict_partition: bool,
    /// Seed for randomized checks (action axiom sampling).
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Subcommand)]
enum Top {
    /// Configuration sets.
    #[command(subcommand)]
    Con(Con),
    /// Configuration equations.
    #[command(subcommand)]
    Eq(Eq),
    /// Push a solution down a refinement.
    Coarsen,
    #[command(subcommand)]
    Compare(Compare),
    #[command(subcommand)]
    Probe(Probe),
    #[command(subcommand)]
    Paradox(Paradox),
    #[command(subcommand)]
    Pingpong(Pingpong),
    #[command(subcommand)]
    Witness(Witness),
}

#[derive(Subcommand)]
enum Con {
    Compute,
}

#[derive(Subcommand)]
enum Eq {
    Solve,
    Verify,
}

#[derive(Subcommand)]
enum Compare {
    /// Bounded check that every configuration set of the first action is one
    /// of the second.
    Con,
}

#[derive(Subcommand)]
enum Probe {
    Cardinality,
}

#[derive(Subcommand)]
enum Paradox {
    Verify,
    Chain,
    Search,
    Pattern,
}

#[derive(Subcommand)]
enum Pingpong {
    Cyclic,
    Subgroups,
}

#[derive(Subcommand)]
enum Witness {
    Nonabelian,
    InfiniteOrder,
}

fn command(top: &Top) -> Command {
    match top {
        Top::Con(Con::Compute) => Command::ConCompute,
        Top::Eq(Eq::Solve) => Command::EqSolve,
        Top::Eq(Eq::Verify) => Command::EqVerify,
        Top::Coarsen => Command::Coarsen,
        Top::Compare(Compare::Con) => Command::CompareCon,
        Top::Probe(Probe::Cardinality) => Command::ProbeCardinality,
        Top::Paradox(Paradox::Verify) => Command::ParadoxVerify,
        Top::Paradox(Paradox::Chain) => Command::ParadoxChain,
        Top::Paradox(Paradox::Search) => Command::ParadoxSearch,
        Top::Paradox(Paradox::Pattern) => Command::ParadoxPattern,
        Top::Pingpong(Pingpong::Cyclic) => Command::PingpongCyclic,
        Top::Pingpong(Pingpong::Subgroups) => Command::PingpongSubgroups,
        Top::Witness(Witness::Nonabelian) => Command::WitnessNonabelian,
        Top::Witness(Witness::InfiniteOrder) => Command::WitnessInfiniteOrder,
    }
}

fn read_input(path: Option<&PathBuf>) -> std::io::Result<Vec<u8>> {
    match path {
        Some(p) => std::fs::read(p),
        None => {
            let mut buf = Vec::new();
            std::io::stdin().read_to_end(&mut buf)?;
            Ok(buf)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cmd = command(&cli.command);
    let c = cli.common;
    let options = Options {
        bound_depth: c.bound_depth,
        bound_length: c.bound_length,
        bound_pieces: c.bound_pieces,
        strict_partition: c.strict_partition,
        seed: c.seed,
    };
    let outcome = match read_input(c.input.as_ref()) {
        Ok(bytes) => run(cmd, &bytes, &options),
        Err(e) => io_failure(cmd, e.to_string()),
    };
    let text = render(&outcome.report);
    let written = match &c.output {
        Some(p) => std::fs::write(p, text.as_bytes()),
        None => std::io::stdout().write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("tarski: cannot write report: {e}");
        return ExitCode::from(2);
    }
    if outcome.exit_code != 0 {
        if let Some(msg) = outcome.report.pointer("/error/message").and_then(|m| m.as_str()) {
            eprintln!("tarski: {msg}");
        }
    }
    ExitCode::from(outcome.exit_code as u8)
}
