use std::io;
use std::process::ExitCode;

use genfrob::cli::main_with_args;
use genfrob::Limits;

fn main() -> ExitCode {
    let limits = match Limits::from_env() {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let code = main_with_args(std::env::args_os(), &limits, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
