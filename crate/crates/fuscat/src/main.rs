use clap::Parser;

use fuscat::cli::{execute, RunConfig};

fn main() {
    let config = RunConfig::parse();
    std::process::exit(execute(&config));
}
