use std::io;
use std::process::ExitCode;

use clap::Parser;
use dihedral_hom_cli::{run, Cli, CliError, ERROR_EXIT_CODE};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    match run(cli, &mut stdout.lock()) {
        Ok(outcome) => ExitCode::from(outcome.exit_code()),
        // downstream closed early, e.g. `| head`
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("dihom: {e}");
            ExitCode::from(ERROR_EXIT_CODE)
        }
    }
}
