use std::io::Write;

fn main() {
    let outcome = permod::cli::run(std::env::args_os());
    let _ = std::io::stdout().write_all(outcome.output.as_bytes());
    std::process::exit(outcome.status);
}
