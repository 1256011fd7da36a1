//! The named example programs behind `qsim example`.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use qsim_core::algorithms::{
    bell_pair, build_grover2, build_repetition_qec, build_teleportation, syndrome_for_error,
    tomography_estimate,
};
use qsim_core::{reduced_statevector, simulate, trace_distance, DensityMatrix, StateVector};

use crate::output::{matrix, table, vector};
use crate::CliError;

/// Tolerance of the restored-state check in the error-correction example.
const RESTORE_TOLERANCE: f64 = 1e-10;

/// The single-qubit state `(|0⟩ + i|1⟩)/√2` used by default.
pub fn default_state() -> StateVector {
    StateVector::from_vector(
        vec![
            Complex64::new(FRAC_1_SQRT_2, 0.0),
            Complex64::new(0.0, FRAC_1_SQRT_2),
        ],
        1,
    )
    .expect("normalized")
}

pub fn single_qubit(amplitudes: Option<Vec<Complex64>>) -> Result<StateVector, CliError> {
    match amplitudes {
        None => Ok(default_state()),
        Some(a) => Ok(StateVector::from_vector(a, 1)?),
    }
}

pub fn teleport(v: &StateVector) -> Result<String, CliError> {
    let circuit = build_teleportation();
    let result = simulate(&circuit, v.tensor(&bell_pair()).into_amplitudes())?;
    let mut out = String::new();
    for b in result.branches() {
        let q2 = reduced_statevector(&b.state, &[0, 1], &b.outcome)?;
        out.push_str(&format!("{} {:.6}\n", b.outcome, b.probability));
        out.push_str(&format!("  q2: {}\n", vector(&q2)));
        out.push_str(&format!("  fidelity: {:.6}\n", q2.inner(v).norm()));
    }
    Ok(out)
}

pub fn grover() -> Result<String, CliError> {
    let result = simulate(&build_grover2(), "00")?;
    Ok(table(&result, false))
}

pub fn qec(v: &StateVector, error: Option<usize>) -> Result<String, CliError> {
    let circuit = build_repetition_qec(error)?;
    let ancillas = StateVector::zero(4);
    let result = simulate(&circuit, v.tensor(&ancillas).into_amplitudes())?;
    let expected = syndrome_for_error(error).expect("table is total");
    let (a, b) = (v.amplitudes()[0], v.amplitudes()[1]);
    let mut encoded = vec![Complex64::new(0.0, 0.0); 8];
    encoded[0] = a;
    encoded[7] = b;
    let encoded = StateVector::from_vector(encoded, 3)?;

    let mut out = String::new();
    let mut pass = !result.branches().is_empty();
    for br in result.branches() {
        let syndrome = StateVector::from_bitstring(&br.outcome, 2)?;
        let target = encoded.tensor(&syndrome);
        pass &= br.outcome == expected && br.state.max_abs_diff(&target) <= RESTORE_TOLERANCE;
        out.push_str(&format!(
            "syndrome {} probability {:.6}\n",
            br.outcome, br.probability
        ));
    }
    let verdict = if pass { "PASS" } else { "FAIL" };
    out.push_str(&format!("restored state check: {verdict}\n"));
    Ok(out)
}

pub fn tomography(v: &StateVector, shots: u64, seed: u64) -> Result<String, CliError> {
    let (s, estimate) = tomography_estimate(v, shots, seed)?;
    let exact = DensityMatrix::from_pure(v)?;
    let mut out = String::new();
    for (name, value) in [("S0", s.s0), ("S1", s.s1), ("S2", s.s2), ("S3", s.s3)] {
        out.push_str(&format!("{name} = {value:.6}\n"));
    }
    out.push_str("rho_est =\n");
    out.push_str(&matrix(&estimate));
    out.push_str("rho_v =\n");
    out.push_str(&matrix(&exact));
    out.push_str(&format!(
        "trace distance = {:.6}\n",
        trace_distance(&exact, &estimate)
    ));
    Ok(out)
}
