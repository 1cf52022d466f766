//! `monodromy`: command-line access to the representation-theory, p-adic
//! and bundle computations of `monodromy-core`.

mod bundle;
mod output;
mod padic;
mod paper;
mod parse;
mod rep;
mod rootsys;

use std::process::ExitCode;

use clap::{CommandFactory, FromArgMatches, Parser, Subcommand};

use output::{CliResult, Format};

#[derive(Parser)]
#[command(name = "monodromy", version, about = "Exact computations for monodromy groups of bundles")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "MONODROMY_FORMAT", default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Root systems: Cartan matrices, roots, fundamental groups, duality.
    #[command(subcommand)]
    Rootsys(rootsys::Cmd),
    /// Characters, tensor products and invariants.
    #[command(subcommand)]
    Rep(rep::Cmd),
    /// Valuations, Newton polygons and connectedness certificates.
    #[command(subcommand)]
    Padic(padic::Cmd),
    /// Bundles on projective space presented by line bundles.
    #[command(subcommand)]
    Bundle(bundle::Cmd),
    /// Fixed reproduction runs.
    #[command(subcommand)]
    Paper(paper::Cmd),
}

fn command_name(matches: &clap::ArgMatches) -> String {
    let mut parts = Vec::new();
    let mut m = matches;
    while let Some((name, sub)) = m.subcommand() {
        parts.push(name);
        m = sub;
    }
    parts.join(" ")
}

fn main() -> ExitCode {
    let matches = Cli::command().get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let result: CliResult = match cli.command {
        Command::Rootsys(c) => rootsys::run(c),
        Command::Rep(c) => rep::run(c),
        Command::Padic(c) => padic::run(c),
        Command::Bundle(c) => bundle::run(c),
        Command::Paper(c) => paper::run(c),
    };
    match result {
        Ok(out) => {
            println!("{}", out.render(&command_name(&matches), cli.format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
