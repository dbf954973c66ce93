use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use conjlab::{run, Cli, CliError, Settings};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match execute(&cli) {
        Ok(status) => ExitCode::from(status as u8),
        Err(e) => {
            eprintln!("conjlab: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn execute(cli: &Cli) -> Result<i32, CliError> {
    let env = std::env::var("CONJLAB_DEFAULT_BUDGET").ok();
    let settings = Settings::resolve(&cli.global, env.as_deref())?;
    let outcome = run(&cli.command, &settings)?;
    match &cli.global.output {
        Some(path) => std::fs::write(path, &outcome.text)?,
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(outcome.text.as_bytes())?;
        }
    }
    Ok(outcome.status)
}
