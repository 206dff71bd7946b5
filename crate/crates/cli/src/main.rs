use std::process::ExitCode;

use clap::{Parser, Subcommand};
use torspair_cli::{run_classical, run_sweep, run_twisted, CliError, Fault, Format, RunReport};

#[derive(Parser)]
#[command(name = "torspair", version, about = "Blanchfield pairings of torus knots")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Alexander polynomial and Blanchfield pairing of T(m, n).
    Classical {
        m: i64,
        n: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, hide = true)]
        inject_fault: Option<Fault>,
    },
    /// Metabelian twisted module and pairing at t = z_n^a.
    Twisted {
        m: i64,
        n: i64,
        /// Character entries mod n, comma separated.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        b: Vec<i64>,
        #[arg(long, allow_negative_numbers = true)]
        a: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Runs the classical and twisted suites over a parameter grid.
    Verify {
        #[arg(long, default_value_t = 7)]
        max: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, hide = true)]
        inject_fault: Option<Fault>,
    },
}

fn finish(r: Result<RunReport, CliError>, format: Format) -> ExitCode {
    match r {
        Ok(rep) => {
            print!("{}", rep.render(format));
            ExitCode::from(rep.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match cli.command {
        Command::Classical { m, n, format, inject_fault } => finish(run_classical(m, n, inject_fault), format),
        Command::Twisted { m, n, b, a, format } => finish(run_twisted(m, n, &b, a), format),
        Command::Verify { max, format, inject_fault } => finish(run_sweep(max, inject_fault), format),
    }
}
