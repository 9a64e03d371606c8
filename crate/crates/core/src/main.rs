use std::io::Write;

use clap::Parser;
use drazin_core::cli::{run, Cli};

fn main() {
    let cli = Cli::parse();
    let (out, err, code) = run(&cli);
    let _ = std::io::stdout().write_all(out.as_bytes());
    let _ = std::io::stderr().write_all(err.as_bytes());
    std::process::exit(code);
}
