use std::process::ExitCode;

fn main() -> ExitCode {
    tripow::cli::run()
}
