use std::io;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use modwythoff::output::{ClassifyOutput, PPositionsOutput, PPOSITIONS_M_LIMIT};
use modwythoff::{play, service};
use modwythoff_core::beatty::INDEX_CAP;
use modwythoff_core::oracle::FAST_LIMIT;
use modwythoff_core::verify::{emit_table1, verify_range, write_csv, BoxFactor};
use modwythoff_core::{GameParams, Position};

#[derive(Parser)]
#[command(name = "modwythoff", version, about = "Solver and play engine for m-Modular Wythoff's game")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum TableFormat {
    #[default]
    Text,
    Json,
    Csv,
}

fn modulus() -> clap::builder::RangedU64ValueParser<u64> {
    clap::value_parser!(u64).range(1..=INDEX_CAP)
}

fn pile() -> clap::builder::RangedU64ValueParser<u64> {
    clap::value_parser!(u64).range(0..=INDEX_CAP)
}

#[derive(Subcommand)]
enum Command {
    /// Label a position P or N and print a winning move for N.
    Classify {
        #[arg(short, value_parser = modulus())]
        m: u64,
        #[arg(value_parser = pile())]
        x: u64,
        #[arg(value_parser = pile())]
        y: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// List all P-positions for modulus m.
    Ppositions {
        #[arg(short, value_parser = clap::value_parser!(u64).range(1..=PPOSITIONS_M_LIMIT))]
        m: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Check the closed-form solution against the brute-force oracle.
    Verify {
        #[arg(long, num_args = 2, value_names = ["M_LO", "M_HI"], required = true)]
        range: Vec<u64>,
        /// Box side as a multiple of m (at least 2; `3`, `5/2` or `2.5`).
        #[arg(long, default_value = "3")]
        box_factor: BoxFactor,
        #[arg(long, value_enum, default_value_t)]
        format: TableFormat,
    },
    /// Print the P-position table for a list of moduli.
    Table {
        #[arg(short, value_delimiter = ',', default_value = "2,3,4,5", value_parser = clap::value_parser!(u64).range(1..=PPOSITIONS_M_LIMIT))]
        m: Vec<u64>,
        /// Name each row's set as P_i instead of listing it.
        #[arg(long)]
        cutoffs: bool,
        #[arg(long, value_enum, default_value_t)]
        format: TableFormat,
    },
    /// Play against the engine in the terminal.
    Play {
        #[arg(short, value_parser = modulus())]
        m: u64,
        #[arg(value_parser = pile())]
        x: u64,
        #[arg(value_parser = pile())]
        y: u64,
        /// Let the engine make the first move.
        #[arg(long)]
        engine_first: bool,
    },
    /// Run the HTTP JSON service.
    Serve {
        #[arg(long, default_value = "127.0.0.1")]
        bind: String,
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

fn usage_error(kind: ErrorKind, msg: impl std::fmt::Display) -> ! {
    Cli::command().error(kind, msg).exit()
}

fn json(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("output types serialize") + "\n"
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Classify { m, x, y, format } => {
            let params = GameParams::new(m)?;
            let pos = Position::new(x, y)?;
            let out = ClassifyOutput::compute(pos, params);
            match format {
                Format::Text => print!("{}", out.to_text(pos)),
                Format::Json => print!("{}", json(&out)),
            }
        }
        Command::Ppositions { m, format } => {
            let out = PPositionsOutput::compute(GameParams::new(m)?)?;
            match format {
                Format::Text => print!("{}", out.to_text()),
                Format::Json => print!("{}", json(&out)),
            }
        }
        Command::Verify {
            range,
            box_factor,
            format,
        } => {
            let (lo, hi) = (range[0], range[1]);
            if lo == 0 || hi < lo {
                usage_error(ErrorKind::ValueValidation, "--range needs 1 <= M_LO <= M_HI");
            }
            if box_factor.side_for(hi) > FAST_LIMIT {
                usage_error(
                    ErrorKind::ValueValidation,
                    format!("box side for m = {hi} exceeds the oracle limit {FAST_LIMIT}"),
                );
            }
            let batch = verify_range(lo, hi, box_factor)?;
            match format {
                TableFormat::Text => {
                    for r in &batch.reports {
                        println!("{}", r.to_text());
                    }
                    println!("all_pass={}", batch.all_pass);
                }
                TableFormat::Json => print!("{}", json(&batch)),
                TableFormat::Csv => print!("{}", write_csv(&batch.reports)),
            }
            if !batch.all_pass {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Table { m, cutoffs, format } => {
            let table = emit_table1(&m)?;
            match (format, cutoffs) {
                (TableFormat::Text, false) => print!("{}", table.to_text()),
                (TableFormat::Text, true) => print!("{}", table.to_cutoff_text()),
                (TableFormat::Csv, _) => print!("{}", table.to_csv()),
                (TableFormat::Json, _) => print!("{}", json(&table)),
            }
        }
        Command::Play {
            m,
            x,
            y,
            engine_first,
        } => {
            let params = GameParams::new(m)?;
            play::run(
                params,
                Position::new(x, y)?,
                !engine_first,
                io::stdin().lock(),
                io::stdout().lock(),
            )?;
        }
        Command::Serve { bind, port } => {
            tokio::runtime::Runtime::new()?.block_on(service::serve(&bind, port))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
