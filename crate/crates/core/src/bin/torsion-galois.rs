use clap::Parser;
use std::process::ExitCode;
use torsion_galois::cli::{main_with, Cli};

fn main() -> ExitCode {
    main_with(Cli::parse())
}
