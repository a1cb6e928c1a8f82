use std::process::ExitCode;

fn main() -> ExitCode {
    elementary::cli::run(std::env::args_os())
}
