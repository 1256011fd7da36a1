use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::circuit::{Circuit, Gate, Measurement};
use crate::state::StateVector;

/// `(|00⟩ + |11⟩)/√2`.
pub fn bell_pair() -> StateVector {
    let s = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let z = Complex64::new(0.0, 0.0);
    StateVector::from_vector(vec![s, z, z, s], 2).expect("normalized")
}

/// Teleports `q0` onto `q2`, with `q1, q2` expected to hold a Bell pair.
/// Corrections are coherent: CNOT from `q1` and CZ from `q0` onto `q2`.
pub fn build_teleportation() -> Circuit {
    let mut c = Circuit::new(3).expect("3 qubits");
    c.push_back(Gate::cnot(0, 1)).unwrap();
    c.push_back(Gate::h(0)).unwrap();
    c.push_back(Measurement::new(0)).unwrap();
    c.push_back(Measurement::new(1)).unwrap();
    c.push_back(Gate::cnot(1, 2)).unwrap();
    c.push_back(Gate::cz(0, 2)).unwrap();
    c
}
