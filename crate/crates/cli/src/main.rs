use std::process::ExitCode;

use clap::Parser;
use superjack_cli::{run, Cli};

fn main() -> ExitCode {
    // clap exits with status 2 on usage errors.
    let cli = Cli::parse();
    let (status, body) = run(&cli);
    if body.ends_with('\n') {
        print!("{body}");
    } else {
        println!("{body}");
    }
    ExitCode::from(status)
}
