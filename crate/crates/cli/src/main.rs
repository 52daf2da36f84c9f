use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use fqzeta_cli::args::Cli;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let result = match cli.threads {
        Some(t) => fqzeta::with_threads(t, || fqzeta_cli::execute(&cli)),
        None => fqzeta_cli::execute(&cli),
    };
    match result {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = if json {
                writeln!(stdout, "{}", serde_json::to_string_pretty(&out.doc).expect("serializable"))
            } else {
                write!(stdout, "{}", out.text)
            };
            if out.exit != 0 {
                eprintln!("verification failed: library and oracle disagree");
            }
            ExitCode::from(out.exit)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
