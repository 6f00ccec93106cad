mod args;
mod commands;
mod input;

use clap::Parser;

use crate::args::{Command, RunConfig};

fn main() {
    let cfg = RunConfig::parse();
    let code = match &cfg.command {
        Command::Solve(a) => commands::solve_command(a),
        Command::Compare(a) => commands::compare_command(a),
        Command::Matches(a) => commands::matches_command(a),
        Command::Bench(a) => commands::bench_command(a),
    };
    std::process::exit(code);
}
