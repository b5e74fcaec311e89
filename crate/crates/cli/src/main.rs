use clap::Parser;
use tiled_cli::{run_with_workers, Cli};

fn main() {
    let cli = Cli::parse();
    let code = run_with_workers(
        &cli,
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    std::process::exit(code);
}
