//! Builders for the standard worked examples: teleportation, two-qubit
//! Grover search, bit-flip repetition code and single-qubit tomography.

mod grover;
mod qec;
mod teleportation;
mod tomography;

pub use grover::{build_grover2, diffuser, oracle};
pub use qec::{build_repetition_qec, syndrome_for_error, SyndromeEntry, SYNDROME_TABLE};
pub use teleportation::{bell_pair, build_teleportation};
pub use tomography::{
    basis_probabilities, measurement_circuit, tomography_estimate, BasisProbabilities,
    TomographyCoefficients,
};
