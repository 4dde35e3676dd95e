use clap::Parser;

fn main() {
    let cli = euob_cli::Cli::parse();
    std::process::exit(euob_cli::run(&cli));
}
