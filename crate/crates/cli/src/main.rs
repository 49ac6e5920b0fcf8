use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use env_logger::Env;

use markov_laguerre_cli::{run, Cli, Status};

fn main() -> ExitCode {
    env_logger::Builder::from_env(Env::new().filter_or("MARKOV_LAGUERRE_LOG", "error")).init();
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let result = run(&cli, &mut out);
    let _ = out.flush();
    match result {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("markov-laguerre: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
