use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;
use maxrep_cli::{run, usage_error_report, Cli, EXIT_SCHEMA};

fn emit(report: &serde_json::Value) {
    let text = serde_json::to_string_pretty(report).expect("reports serialize");
    // A closed pipe downstream is not an error of the job.
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => e.exit(),
        Err(e) => {
            emit(&usage_error_report(&e.to_string()));
            std::process::exit(EXIT_SCHEMA);
        }
    };
    let (report, code) = run(&cli);
    emit(&report);
    std::process::exit(code);
}
