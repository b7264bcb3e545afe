use std::process::ExitCode;

use clap::Parser;
use grt2::cli::{configure_threads, run, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| run(&cli, &mut std::io::stdout().lock()));
    match result {
        Ok(status) if status.is_fail() => ExitCode::from(1),
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("grt2: {e}");
            ExitCode::from(2)
        }
    }
}
