use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use altquad_cli::{run, Args};

/// Collapses clap's multi-line usage error into one line.
fn one_line(err: &clap::Error) -> String {
    let rendered = err.render().to_string();
    let text: Vec<&str> = rendered
        .lines()
        .take_while(|l| !l.starts_with("Usage:") && !l.starts_with("For more information"))
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();
    text.join(" ").trim_start_matches("error: ").to_string()
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(args) => args,
        Err(err)
            if matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            ) =>
        {
            err.exit()
        }
        Err(err) => {
            eprintln!("altquad: usage error: {}", one_line(&err));
            return ExitCode::from(2);
        }
    };
    let result = args.into_config().and_then(|config| run(&config));
    match result {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(3);
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("altquad: error: {}", err.message());
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
