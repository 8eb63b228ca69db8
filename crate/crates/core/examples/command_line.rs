// Driving the command-line front end in process and reading its JSON report.

use clap::Parser;
use paralg::cli::{run, Cli};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cli = Cli::try_parse_from(["paralg", "verify", "--set", "eq12", "--order", "2", "--cutoff", "4"])?;
    let (report, code) = run(&cli);
    println!("verify eq12 → exit {code}, passed {}", report.passed);

    let cli = Cli::try_parse_from(["paralg", "verify", "--set", "eq12", "--cutoff", "2"])?;
    let (report, code) = run(&cli);
    println!("cutoff 2 → exit {code}: {}", report.error.as_deref().unwrap_or(""));

    let cli = Cli::try_parse_from(["paralg", "check", "--catalog", "su11_ext_anticomm"])?;
    let (_, code) = run(&cli);
    println!("check su11_ext_anticomm → exit {code}");
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("command line example");
}
