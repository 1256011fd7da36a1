//! Dense full-register unitaries built from Kronecker products.
//!
//! A gate acting on a contiguous window is embedded as `I_l ⊗ U' ⊗ I_r`.
//! Controls are expanded as `I − P + P·(I_l ⊗ U' ⊗ I_r)` where `P` projects
//! onto the activating control pattern. Intended for testing and small
//! registers only.

use num_complex::Complex64;

use crate::circuit::{Circuit, Gate, Instruction};
use crate::error::{Error, Result};
use crate::gate::gate_matrix;
use crate::matrix::Matrix;

pub const DEFAULT_UNITARY_QUBIT_CAP: usize = 10;

fn projector(state: u8) -> Matrix {
    let mut p = Matrix::zeros(2);
    let s = usize::from(state);
    p[(s, s)] = Complex64::new(1.0, 0.0);
    p
}

/// `2^n × 2^n` matrix of a single validated gate.
pub fn embed_gate(gate: &Gate, nb_qubits: usize) -> Matrix {
    let u = gate_matrix(&gate.kind);
    let first = gate.targets[0];
    let k = gate.targets.len();
    let mut active = Matrix::identity(1);
    let mut pattern = Matrix::identity(1);
    let mut q = 0;
    while q < nb_qubits {
        if q == first {
            active = active.kron(&u);
            pattern = pattern.kron(&Matrix::identity(u.dim()));
            q += k;
            continue;
        }
        let f = match gate.controls.iter().find(|c| c.qubit == q) {
            Some(c) => projector(c.state),
            None => Matrix::identity(2),
        };
        active = active.kron(&f);
        pattern = pattern.kron(&f);
        q += 1;
    }
    if gate.controls.is_empty() {
        active
    } else {
        Matrix::identity(1 << nb_qubits).sub(&pattern).add(&active)
    }
}

/// Product of all instruction unitaries, later instructions on the left.
pub fn circuit_unitary(circuit: &Circuit) -> Result<Matrix> {
    circuit_unitary_with_cap(circuit, DEFAULT_UNITARY_QUBIT_CAP)
}

pub fn circuit_unitary_with_cap(circuit: &Circuit, max_qubits: usize) -> Result<Matrix> {
    let n = circuit.nb_qubits();
    if n > max_qubits {
        return Err(Error::ResourceLimit(format!(
            "dense unitary of {n} qubits exceeds the cap of {max_qubits}"
        )));
    }
    let flat = circuit.flattened();
    let mut total = Matrix::identity(1 << n);
    for (i, instr) in flat.instructions().iter().enumerate() {
        match instr {
            Instruction::Gate(g) => total = &embed_gate(g, n) * &total,
            _ => {
                return Err(Error::UnsupportedOperation(format!(
                    "instruction {i} is a measurement; the circuit has no unitary"
                )))
            }
        }
    }
    Ok(total)
}
