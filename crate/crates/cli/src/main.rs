use clap::Parser;
use exg_cli::args::Cli;

fn main() {
    let cli = Cli::parse();
    if let Err(e) = exg_cli::run(cli.command) {
        eprintln!("exg: {e}");
        std::process::exit(e.exit_code());
    }
}
