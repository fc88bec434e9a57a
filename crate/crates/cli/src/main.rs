mod args;
mod commands;
mod error;
mod render;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command, Format, OutputArgs};
use commands::Outcome;
use error::{CliError, CliResult};

fn run(cli: &Cli) -> CliResult<Outcome> {
    match &cli.command {
        Command::Solve { geometry, given, .. } => commands::solve(geometry, given),
        Command::SolveOrtho { geometry, given, .. } => commands::solve_ortho(geometry, given),
        Command::Verify { geometry, given, tol, .. } => commands::verify(geometry, given, *tol),
        Command::Identities { geometry, suite, run, .. } => commands::identities(geometry, *suite, run),
        Command::Table { geometry, which, run, .. } => commands::table(geometry, which, run),
        Command::Spacetime { geometry, given, .. } => commands::spacetime(geometry, given.as_deref()),
    }
}

fn output_args(cli: &Cli) -> &OutputArgs {
    match &cli.command {
        Command::Solve { output, .. }
        | Command::SolveOrtho { output, .. }
        | Command::Verify { output, .. }
        | Command::Identities { output, .. }
        | Command::Table { output, .. }
        | Command::Spacetime { output, .. } => output,
    }
}

fn emit(out: &OutputArgs, o: &Outcome) -> CliResult<()> {
    let json = serde_json::to_string_pretty(&o.record).expect("records serialise");
    if let Some(path) = &out.report_file {
        std::fs::write(path, format!("{json}\n"))
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    }
    match out.output {
        Format::Json => println!("{json}"),
        Format::Text => print!("{}", render::text(&o.record)),
    }
    Ok(())
}

fn fail(e: &CliError) -> ExitCode {
    let rec = serde_json::to_string(&e.to_json()).expect("error records serialise");
    eprintln!("{rec}");
    ExitCode::from(e.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(&CliError::Parse(e.to_string().trim().to_string())),
    };
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => return fail(&e),
    };
    if let Err(e) = emit(output_args(&cli), &outcome) {
        return fail(&e);
    }
    match &outcome.failure {
        Some(e) => fail(e),
        None => ExitCode::SUCCESS,
    }
}
