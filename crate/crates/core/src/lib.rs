//! Quantum circuit construction and full state-vector simulation.
//!
//! Circuits are assembled from gates, measurements and nested blocks, then
//! simulated on an initial bitstring or vector. Mid-circuit measurements fork
//! the simulation into branches, each carrying its outcome string,
//! probability and collapsed state. Circuits can be exported to OpenQASM and
//! LaTeX (qcircuit) and drawn as text diagrams.
//!
//! ```
//! use qsim_core::{simulate, Circuit, Gate, Measurement};
//!
//! let mut circuit = Circuit::new(2).unwrap();
//! circuit.push_back(Gate::h(0)).unwrap();
//! circuit.push_back(Gate::cnot(0, 1)).unwrap();
//! circuit.push_back(Measurement::new(0)).unwrap();
//! circuit.push_back(Measurement::new(1)).unwrap();
//!
//! let result = simulate(&circuit, "00").unwrap();
//! assert_eq!(result.results(), vec!["00", "11"]);
//! ```

pub mod algorithms;
pub mod circuit;
pub mod density;
pub mod draw;
pub mod error;
pub mod gate;
mod layout;
pub mod matrix;
pub mod measure;
pub mod qasm;
pub mod simulate;
pub mod state;
pub mod tex;
pub mod unitary;

pub use circuit::{Block, Circuit, Gate, Instruction, Measurement};
pub use density::{trace_distance, DensityMatrix};
pub use draw::draw_ascii;
pub use error::{Error, ParseError, Result};
pub use gate::{gate_matrix, Basis, ControlSpec, CustomGate, GateKind};
pub use matrix::Matrix;
pub use measure::{measure, Outcome};
pub use qasm::{parse_qasm, to_qasm, QasmDialect};
pub use simulate::{
    counts, reduced_states, reduced_statevector, simulate, simulate_with, Branch, SimOptions,
    SimulationResult,
};
pub use state::{apply_gate, InitialState, StateVector};
pub use tex::{to_tex, to_tex_standalone};
pub use unitary::{circuit_unitary, circuit_unitary_with_cap};
