//! `qsim`: load circuits from OpenQASM or JSON, simulate them, sample
//! counts and export renderings.
//!
//! Exit status is 0 on success, 2 for invalid input and 3 when a circuit
//! cannot be exported to the requested format.

mod document;
mod examples;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use qsim_core::{
    counts, draw_ascii, simulate, to_qasm, to_tex, to_tex_standalone, Circuit, InitialState,
    QasmDialect,
};

use document::{load, load_vector, Format};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Export(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Export(_) => 3,
        }
    }
}

impl From<qsim_core::Error> for CliError {
    fn from(e: qsim_core::Error) -> Self {
        match e {
            qsim_core::Error::UnsupportedExport { .. } => CliError::Export(e.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "qsim",
    version,
    about = "State-vector quantum circuit simulator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Circuit file (.qasm or .json)
    file: PathBuf,
    /// Override format detection by file extension
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Args)]
#[group(multiple = false)]
struct Init {
    /// Initial basis state as a bitstring, qubit 0 first (default: all zeros)
    #[arg(long)]
    init: Option<String>,
    /// Initial state vector: a JSON array of [re, im] pairs
    #[arg(long, value_name = "FILE")]
    init_vec: Option<PathBuf>,
}

impl Init {
    fn resolve(&self, circuit: &Circuit) -> Result<InitialState, CliError> {
        Ok(match (&self.init, &self.init_vec) {
            (Some(bits), _) => InitialState::Bits(bits.clone()),
            (_, Some(path)) => InitialState::Vector(load_vector(path)?),
            _ => InitialState::Bits("0".repeat(circuit.nb_qubits())),
        })
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Simulate a circuit and print every measurement branch
    Run {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        init: Init,
        /// Emit a machine-readable JSON result
        #[arg(long)]
        json: bool,
        /// Also print branch states and reduced states
        #[arg(long)]
        states: bool,
    },
    /// Sample measurement outcomes
    Counts {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        init: Init,
        #[arg(long, default_value_t = 1024)]
        shots: u64,
        #[arg(long, env = "QSIM_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Draw a text diagram
    Draw {
        #[command(flatten)]
        input: Input,
    },
    /// Export qcircuit LaTeX
    Tex {
        #[command(flatten)]
        input: Input,
        /// Wrap the rows in a compilable document
        #[arg(long)]
        standalone: bool,
    },
    /// Export OpenQASM
    Qasm {
        #[command(flatten)]
        input: Input,
        /// Emit the OPENQASM 2.0 header, include and classical register
        #[arg(long)]
        strict: bool,
    },
    /// Run a built-in example program
    Example {
        #[command(subcommand)]
        name: Example,
    },
}

#[derive(Debug, Subcommand)]
enum Example {
    /// Teleport a qubit state and print each branch's received state
    Teleport {
        /// Single-qubit state to teleport (default: (|0> + i|1>)/sqrt 2)
        #[arg(long, value_name = "FILE")]
        init_vec: Option<PathBuf>,
    },
    /// Two-qubit Grover search for |11>
    Grover,
    /// Three-qubit repetition code with an optional bit flip
    Qec {
        /// Flipped data qubit
        #[arg(long, value_enum, default_value = "0")]
        error: ErrorQubit,
        #[arg(long, value_name = "FILE")]
        init_vec: Option<PathBuf>,
    },
    /// Single-qubit state tomography from sampled X, Y and Z measurements
    Tomography {
        #[arg(long, default_value_t = 1000)]
        shots: u64,
        #[arg(long, env = "QSIM_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_name = "FILE")]
        init_vec: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum ErrorQubit {
    None,
    #[value(name = "0")]
    Q0,
    #[value(name = "1")]
    Q1,
    #[value(name = "2")]
    Q2,
}

impl ErrorQubit {
    fn qubit(self) -> Option<usize> {
        match self {
            ErrorQubit::None => None,
            ErrorQubit::Q0 => Some(0),
            ErrorQubit::Q1 => Some(1),
            ErrorQubit::Q2 => Some(2),
        }
    }
}

fn read_circuit(input: &Input) -> Result<Circuit, CliError> {
    load(&input.file, input.format)
}

fn optional_vector(
    path: &Option<PathBuf>,
) -> Result<Option<Vec<num_complex::Complex64>>, CliError> {
    path.as_deref().map(load_vector).transpose()
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn execute(command: &Command) -> Result<String, CliError> {
    match command {
        Command::Run {
            input,
            init,
            json,
            states,
        } => {
            let circuit = read_circuit(input)?;
            let result = simulate(&circuit, init.resolve(&circuit)?)?;
            if *json {
                let value = output::result_json(&result);
                Ok(with_newline(
                    serde_json::to_string(&value).expect("serializable"),
                ))
            } else {
                Ok(output::table(&result, *states))
            }
        }
        Command::Counts {
            input,
            init,
            shots,
            seed,
        } => {
            let circuit = read_circuit(input)?;
            let result = simulate(&circuit, init.resolve(&circuit)?)?;
            let map = counts(&result, *shots, *seed)?;
            Ok(map.iter().map(|(k, v)| format!("{k} {v}\n")).collect())
        }
        Command::Draw { input } => Ok(draw_ascii(&read_circuit(input)?)),
        Command::Tex { input, standalone } => {
            let circuit = read_circuit(input)?;
            let tex = if *standalone {
                to_tex_standalone(&circuit)
            } else {
                to_tex(&circuit)
            };
            Ok(with_newline(tex))
        }
        Command::Qasm { input, strict } => {
            let dialect = if *strict {
                QasmDialect::Strict
            } else {
                QasmDialect::Compact
            };
            Ok(with_newline(to_qasm(&read_circuit(input)?, dialect)?))
        }
        Command::Example { name } => match name {
            Example::Teleport { init_vec } => {
                examples::teleport(&examples::single_qubit(optional_vector(init_vec)?)?)
            }
            Example::Grover => examples::grover(),
            Example::Qec { error, init_vec } => examples::qec(
                &examples::single_qubit(optional_vector(init_vec)?)?,
                error.qubit(),
            ),
            Example::Tomography {
                shots,
                seed,
                init_vec,
            } => examples::tomography(
                &examples::single_qubit(optional_vector(init_vec)?)?,
                *shots,
                *seed,
            ),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
