use std::process::ExitCode;

use clap::Parser;
use liekit::{run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("liekit: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
