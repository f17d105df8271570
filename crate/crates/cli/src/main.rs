//! Entry point: parse the command line, dispatch, and map failures to
//! exit codes — 0 on success, 1 on domain or file errors, 2 on usage
//! errors (including anything the parser rejects).

mod args;
mod ops;

use args::{Cli, Command};
use clap::Parser;

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct { kind } => ops::construct(kind),
        Command::Classify { input, method, budget, json } => {
            ops::classify(&input, method, &budget, json.json)
        }
        Command::Wdist { method, input, params, budget, json } => ops::wdist(
            method,
            input.as_deref(),
            params.as_deref(),
            &budget,
            json.json,
        ),
        Command::Restrict { input, blocks, output, json } => {
            ops::restrict_or_shorten(&input, &blocks, &output, json.json, false)
        }
        Command::Shorten { input, blocks, output, json } => {
            ops::restrict_or_shorten(&input, &blocks, &output, json.json, true)
        }
        Command::Bounds { field, r, k, n, json } => ops::bounds(&field, r, k, n, json.json),
        Command::Density { field, n, r, k, trials, seed, json } => {
            ops::density(&field, n, r, k, trials, seed, json.json)
        }
        Command::Pseudoarc { kind } => ops::pseudoarc(kind),
        Command::Isometry { kind } => ops::isometry(kind),
    };
    if let Err(e) = result {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
