use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use phasewave::{run, RunConfig};

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    match run(&cfg) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.stdout.as_bytes());
            let _ = std::io::stderr().write_all(out.stderr.as_bytes());
            ExitCode::from(out.status as u8)
        }
        Err(e) => {
            eprintln!("phasewave: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
