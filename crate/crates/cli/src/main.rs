use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use quandle_quiver_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = (|| -> Result<(), CliError> {
        let mut out: Box<dyn Write> = match &cli.global.output {
            Some(path) => Box::new(BufWriter::new(File::create(path).map_err(|source| {
                CliError::Io {
                    path: path.display().to_string(),
                    source,
                }
            })?)),
            None => Box::new(BufWriter::new(io::stdout().lock())),
        };
        let outcome = run(&cli, &mut out, &mut io::stderr());
        out.flush()?;
        outcome
    })();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qquiver: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
