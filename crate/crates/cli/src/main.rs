use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use kappa_cli::{run, Cli, Config};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = Config::from_env().and_then(|config| run(cli, config));
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            eprint!("{}", out.stderr);
            let _ = std::io::stdout().flush();
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
