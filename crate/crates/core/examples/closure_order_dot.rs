//! Hasse diagram of the closure order for U(2,2), printed as DOT.

use korbits::cli::{run, Command, Format, RunConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = RunConfig::new(2, 2, Command::ClosureOrder)?.with_format(Format::Dot);
    print!("{}", run(&cfg)?.output);
    Ok(())
}
