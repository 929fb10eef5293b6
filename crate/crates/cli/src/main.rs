mod args;
mod commands;
mod error;
mod output;
mod verify;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use args::{Cli, Command, Format};
use error::CliError;

fn dispatch(command: &Command) -> Result<(&'static str, output::Outcome), CliError> {
    Ok(match command {
        Command::Bounds { d, n } => ("bounds", commands::bounds_cmd(*d, *n)?),
        Command::Components(a) => ("components", commands::components(a)?),
        Command::Complement(a) => ("complement", commands::complement(a)?),
        Command::System(a) => ("system", commands::system(a)?),
        Command::SymmetricB0(a) => ("symmetric-b0", commands::symmetric(a)?),
        Command::Stability(a) => ("stability", commands::stability(a)?),
        Command::Specht(a) => ("specht", commands::specht(a)?),
        Command::Young { n, k } => ("young", commands::young(*n, *k)?),
        Command::Verify { suite } => ("verify", verify::run(*suite)?),
    })
}

fn run(cli: &Cli) -> Result<String, CliError> {
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot configure {t} threads: {e}")))?;
    }
    let start = Instant::now();
    let (name, outcome) = dispatch(&cli.command)?;
    let wall = cli.timing.then(|| start.elapsed().as_millis());
    let text = output::emit(name, &outcome, cli.format, wall)?;
    if name == "verify" && outcome.result["passed"] == false {
        print!("{text}");
        return Err(CliError::Assertion("verification suite failed".into()));
    }
    Ok(text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => {
            let mut out = std::io::stdout().lock();
            if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            if cli.format == Format::Pretty {
                eprintln!("run with --help for usage");
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
