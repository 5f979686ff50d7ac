use std::process::ExitCode;

use clap::Parser;

mod commands;
mod input;

use commands::Report;

#[derive(Debug, Parser)]
#[command(name = "isoword", version, about = "Hamming- and Lee-isometric word checks")]
struct Cli {
    #[command(subcommand)]
    command: commands::Command,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.command.json();
    match commands::run(cli.command) {
        Ok(Report { code, text, json: value }) => {
            if json {
                println!("{value}");
            } else {
                print!("{text}");
            }
            ExitCode::from(code)
        }
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
