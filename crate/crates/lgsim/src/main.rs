use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(lgsim::cli::execute() as u8)
}
