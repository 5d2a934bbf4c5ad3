mod args;
mod commands;
mod config;
mod summary;

use args::{Cli, Output};
use clap::Parser;
use commands::{CliError, Report};
use std::io::Write;
use std::process::ExitCode;

fn write_file(path: &std::path::Path, text: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Usage(format!("{}: {e}", dir.display())))?;
    }
    std::fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn emit(output: &Output, report: Report) -> Result<(), CliError> {
    let mut stderr = std::io::stderr().lock();
    for line in &report.protocol {
        let _ = writeln!(stderr, "{line}");
    }
    let mut stdout = String::new();
    match &output.out {
        Some(path) => write_file(path, &report.text)?,
        None => stdout.push_str(&report.text),
    }
    for (path, text) in &report.files {
        write_file(path, text)?;
    }
    if let Some(path) = &output.json {
        let json = serde_json::to_string_pretty(&report.summary).expect("summaries serialize") + "\n";
        if path.as_os_str() == "-" {
            stdout.push_str(&json);
        } else {
            write_file(path, &json)?;
        }
    }
    std::io::stdout()
        .lock()
        .write_all(stdout.as_bytes())
        .map_err(|e| CliError::Usage(format!("stdout: {e}")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match commands::run(&cli.command).and_then(|r| emit(&cli.output, r)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("forge: {}", e.message());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
