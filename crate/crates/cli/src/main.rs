use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use probdom_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match probdom_cli::dispatch(&cli.command) {
        Ok(out) => {
            print!("{out}");
            let _ = std::io::stdout().flush();
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
