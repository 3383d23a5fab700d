use clap::Parser;

fn main() -> std::process::ExitCode {
    let cli = cheegerlab::cli::Cli::parse();
    std::process::ExitCode::from(cheegerlab::cli::run(cli))
}
