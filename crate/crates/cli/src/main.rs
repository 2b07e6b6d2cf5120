use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(cwp_cli::run(std::env::args_os()))
}
