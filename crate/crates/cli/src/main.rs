use clap::Parser;
use dual_bernstein_cli::args::Cli;

fn main() {
    let cli = Cli::parse();
    if let Err(err) = dual_bernstein_cli::run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}
