use std::process::ExitCode;

fn main() -> ExitCode {
    arcperm::cli::main_with(std::env::args_os())
}
