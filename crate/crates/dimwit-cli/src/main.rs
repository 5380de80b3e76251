use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use dimwit_cli::formats;
use dimwit_cli::numfmt::{significant, DEFAULT_STDOUT_DIGITS, PRECISION_RANGE};
use dimwit_cli::CliError;
use dimwit_core::{behaviour, classical, qrac, statedisc, svd_witness};

const DEFAULT_CAP: u64 = 10_000_000;

/// Dimension witnessing for prepare-and-measure behaviours: trace-norm
/// bounds, witness construction and evaluation, brute-force classical optima,
/// random access codes and state-discrimination games.
#[derive(Parser)]
#[command(name = "dimwit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a behaviour file; print its scenario and normalization slack
    Validate { behaviour: PathBuf },
    /// Trace-norm lower bound on the message dimension of a behaviour
    Bound { behaviour: PathBuf },
    /// Evaluate ⟨P, G⟩ and, with --dim, compare against the dimension bound
    WitnessEval {
        behaviour: PathBuf,
        witness: PathBuf,
        /// Message dimension for the bound check
        #[arg(long)]
        dim: Option<usize>,
    },
    /// Write the witness built from the SVD of a behaviour
    SvdWitness {
        behaviour: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Brute-force maximum of a witness over dimension-d classical strategies
    ClassicalMax {
        witness: PathBuf,
        #[arg(long)]
        dim: usize,
        /// Enumeration size guard
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Random access code constructions
    #[command(subcommand)]
    Qrac(QracCommand),
    /// State-discrimination game constructions
    #[command(subcommand)]
    Statedisc(StatediscCommand),
    /// Write the classical-to-quantum ratio series as CSV
    Figure1 {
        /// Largest (even) N in the series
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum QracCommand {
    /// Write the 0/1 index matrix F(m,n)
    Matrix {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write the associated partial isometry H
    Isometry {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write the success-probability witness G(m,n) = F/(n mⁿ)
    Witness {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Print the dimension-dependent success bound
    Bound {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dim: usize,
    },
    /// Write the optimal qubit model for binary strings of length 2 or 3
    Model {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum StatediscCommand {
    /// Write the optimal behaviour (closed form for --dim 2, Helstrom model otherwise)
    Behaviour {
        #[arg(long = "N")]
        n: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write the discrimination witness
    Witness {
        #[arg(long = "N")]
        n: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Write the Fourier-state Helstrom model
    Model {
        #[arg(long = "N")]
        n: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Print the quantum, classical and general-dimension bounds
    Bounds {
        #[arg(long = "N")]
        n: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let digits = match stdout_digits() {
        Ok(digits) => digits,
        Err(err) => {
            eprintln!("error: {err}");
            return ExitCode::from(1);
        }
    };
    match run(cli.command, digits) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

fn stdout_digits() -> Result<usize, CliError> {
    match std::env::var("DIMWIT_PRECISION") {
        Ok(raw) => match raw.parse::<usize>() {
            Ok(digits) if PRECISION_RANGE.contains(&digits) => Ok(digits),
            _ => Err(CliError::Usage(format!(
                "DIMWIT_PRECISION must be an integer in {}..={}, got {raw:?}",
                PRECISION_RANGE.start(),
                PRECISION_RANGE.end()
            ))),
        },
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_STDOUT_DIGITS),
        Err(err) => Err(CliError::Usage(format!("DIMWIT_PRECISION: {err}"))),
    }
}

fn run(command: Command, digits: usize) -> Result<(), CliError> {
    let fmt = |x: f64| significant(x, digits);
    match command {
        Command::Validate { behaviour } => {
            let p = formats::read_behaviour(&behaviour)?;
            let s = p.scenario();
            println!("scenario: |X|={} |Y|={} |B|={}", s.nx(), s.ny(), s.nb());
            println!(
                "max normalization deviation: {}",
                fmt(p.max_normalization_deviation())
            );
        }
        Command::Bound { behaviour } => {
            let p = formats::read_behaviour(&behaviour)?;
            let report = p.dimension_lower_bound()?;
            println!("trace norm: {}", fmt(report.trace_norm));
            println!("raw bound: {}", fmt(report.raw_bound));
            println!("dimension lower bound: {}", report.dimension_lower_bound);
        }
        Command::WitnessEval {
            behaviour,
            witness,
            dim,
        } => {
            let p = formats::read_behaviour(&behaviour)?;
            let g = formats::read_witness(&witness)?;
            let value = g.evaluate(&p)?;
            println!("inner product: {}", fmt(value));
            if let Some(d) = dim {
                let bound = g.bound(d)?;
                println!("Q_{d} bound: {}", fmt(bound));
                println!(
                    "respected: {}",
                    if value <= bound + 1e-9 { "yes" } else { "no" }
                );
            }
        }
        Command::SvdWitness { behaviour, output } => {
            let p = formats::read_behaviour(&behaviour)?;
            let g = svd_witness(&p, behaviour::DEFAULT_RANK_TOLERANCE)?;
            formats::write_file(&output, &formats::witness_document(&g))?;
        }
        Command::ClassicalMax { witness, dim, cap } => {
            let g = formats::read_witness(&witness)?;
            let (value, strategy) = classical::classical_witness_max(&g, dim, cap)?;
            println!("classical maximum (d={dim}): {}", fmt(value));
            println!("strategy: {}", formats::strategy_document(&strategy));
        }
        Command::Qrac(cmd) => run_qrac(cmd, digits)?,
        Command::Statedisc(cmd) => run_statedisc(cmd, digits)?,
        Command::Figure1 { max_n, output } => {
            let rows = statedisc::ratio_series(max_n)?;
            formats::write_file(&output, &formats::ratio_csv(&rows))?;
            println!("asymptotic ratio: {}", fmt(statedisc::asymptotic_ratio()));
        }
    }
    Ok(())
}

fn run_qrac(command: QracCommand, digits: usize) -> Result<(), CliError> {
    match command {
        QracCommand::Matrix { m, n, output } => {
            let params = qrac::RacParams::new(m, n)?;
            let witness =
                dimwit_core::Witness::new(params.scenario()?, qrac::rac_index_matrix(&params))?;
            formats::write_file(&output, &formats::witness_document(&witness))?;
        }
        QracCommand::Isometry { m, n, output } => {
            let params = qrac::RacParams::new(m, n)?;
            let witness =
                dimwit_core::Witness::new(params.scenario()?, qrac::rac_isometry(&params))?;
            formats::write_file(&output, &formats::witness_document(&witness))?;
        }
        QracCommand::Witness { m, n, output } => {
            let params = qrac::RacParams::new(m, n)?;
            let witness = qrac::rac_witness(&params)?;
            formats::write_file(&output, &formats::witness_document(&witness))?;
        }
        QracCommand::Bound { m, n, dim } => {
            let bound = qrac::rac_bound(m, n, dim)?;
            println!("{}", significant(bound, digits));
            if bound >= 1.0 {
                eprintln!("note: the bound is at least 1 and therefore vacuous");
            }
        }
        QracCommand::Model { n, output } => {
            let model = qrac::optimal_qrac_model(n)?;
            formats::write_file(&output, &formats::model_document(&model))?;
        }
    }
    Ok(())
}

fn run_statedisc(command: StatediscCommand, digits: usize) -> Result<(), CliError> {
    let fmt = |x: f64| significant(x, digits);
    match command {
        StatediscCommand::Behaviour { n, dim, output } => {
            let behaviour = if dim == 2 {
                statedisc::closed_form_behaviour(n)?
            } else {
                statedisc::discrimination_model(n, dim)?.behaviour()?
            };
            formats::write_file(&output, &formats::behaviour_document(&behaviour))?;
        }
        StatediscCommand::Witness { n, output } => {
            let witness = statedisc::discrimination_witness(n)?;
            formats::write_file(&output, &formats::witness_document(&witness))?;
        }
        StatediscCommand::Model { n, dim, output } => {
            let model = statedisc::discrimination_model(n, dim)?;
            formats::write_file(&output, &formats::model_document(&model))?;
        }
        StatediscCommand::Bounds { n, dim } => {
            println!("B_Q: {}", fmt(statedisc::quantum_bound(n)?));
            if n % 2 == 0 {
                println!("B_C: {}", fmt(statedisc::classical_bound(n)?));
            } else {
                eprintln!("note: the classical bound formula covers even N only; skipped");
            }
            println!("Q_d bound (d={dim}): {}", fmt(statedisc::qd_bound(n, dim)?));
        }
    }
    Ok(())
}
