use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use lieembed_cli::{run, Cli, CliError};

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(out.render(cli.format).as_bytes());
            if out.failures > 0 {
                let total = out.json["cases"].as_u64().unwrap_or(0) as usize;
                let e = CliError::Mismatch(out.failures, total);
                eprintln!("error: {e}");
                return ExitCode::from(e.exit_code() as u8);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
