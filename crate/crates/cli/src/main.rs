mod args;
mod checkpoint;
mod commands;
mod report;

use std::process::ExitCode;

use anyhow::Result;
use clap::Parser;

use args::{Cli, Command, Format, PartitionCommand};
use report::{Ceilings, Report, RunConfig};

const EXIT_PROPERTY_FAILED: u8 = 1;
const EXIT_INVALID: u8 = 2;

fn dispatch(command: &Command) -> Result<Report> {
    match command {
        Command::Repfn(a) => commands::repfn(a),
        Command::Cube(a) => commands::cube(a),
        Command::VerifyEq1(a) => commands::verify_eq1(a),
        Command::CertMult(a) => commands::cert_mult(a),
        Command::Nathanson(a) => commands::nathanson(a),
        Command::Solve(a) => commands::solve(a),
        Command::Classify(a) => commands::classify(a),
        Command::Partition(PartitionCommand::Verify(a)) => commands::partition_verify(a),
        Command::Partition(PartitionCommand::Scan(a)) => commands::partition_scan(a),
        Command::Search(a) => commands::search(a),
    }
}

fn run(cli: Cli, argv: Vec<String>) -> Result<bool> {
    if cli.format == Format::Csv && !matches!(cli.command, Command::Repfn(_)) {
        anyhow::bail!("csv output is only available for `repfn`");
    }
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()?;
    }
    let config = RunConfig {
        command: cli.command.name().to_string(),
        argv,
        format: cli.format,
        jobs: cli.jobs,
        out: cli.out.clone(),
        ceilings: Ceilings::default(),
    };
    let report = dispatch(&cli.command)?;
    let rendered = report.render(&config)?;
    if let Some(path) = &cli.out {
        std::fs::write(path, &rendered)?;
    }
    if !cli.quiet {
        print!("{rendered}");
    }
    Ok(report.ok)
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli, argv) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_PROPERTY_FAILED),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}
