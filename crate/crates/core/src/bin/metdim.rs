use clap::Parser;
use metdim::cli::{run, Cli};

fn main() {
    std::process::exit(run(Cli::parse()));
}
