//! Single-qubit projective measurement with renormalized collapse.

use num_complex::Complex64;

use crate::error::{invalid, Result};
use crate::gate::Basis;
use crate::state::StateVector;

/// Outcomes with probability at or below this value are dropped.
pub const PRUNE_THRESHOLD: f64 = 1e-12;

/// One possible result of a measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub bit: u8,
    pub probability: f64,
    pub state: StateVector,
}

/// Probabilities of reading 0 and 1 on qubit `q` in the computational basis.
pub fn z_probabilities(state: &StateVector, q: usize) -> [f64; 2] {
    let mask = state.qubit_mask(q);
    let mut p = [0.0; 2];
    for (i, a) in state.amplitudes().iter().enumerate() {
        p[usize::from(i & mask != 0)] += a.norm_sqr();
    }
    p
}

/// Measures qubit `q` in `basis`, returning every outcome whose probability
/// exceeds [`PRUNE_THRESHOLD`], ordered by bit.
///
/// Non-computational bases apply the basis change `B`, measure in Z and apply
/// `B†` to each collapsed state, so the measured qubit is left in the
/// corresponding eigenvector of the chosen basis.
pub fn measure(state: &StateVector, q: usize, basis: &Basis) -> Result<Vec<Outcome>> {
    if q >= state.nb_qubits() {
        return invalid(format!(
            "measured qubit {q} out of range for {}-qubit state",
            state.nb_qubits()
        ));
    }
    let change = basis.change();
    let rotated;
    let working = match &change {
        Some(b) => {
            let mut s = state.clone();
            s.apply_matrix(q, b);
            rotated = s;
            &rotated
        }
        None => state,
    };

    let probs = z_probabilities(working, q);
    let mask = working.qubit_mask(q);
    let undo = change.map(|b| b.adjoint());
    let mut outcomes = Vec::with_capacity(2);
    for bit in 0..2u8 {
        let p = probs[bit as usize];
        if p <= PRUNE_THRESHOLD {
            continue;
        }
        let scale = 1.0 / p.sqrt();
        let keep = if bit == 1 { mask } else { 0 };
        let amps = working
            .amplitudes()
            .iter()
            .enumerate()
            .map(|(i, a)| {
                if i & mask == keep {
                    a * scale
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect();
        let mut collapsed = StateVector::from_raw(working.nb_qubits(), amps);
        if let Some(u) = &undo {
            collapsed.apply_matrix(q, u);
        }
        outcomes.push(Outcome {
            bit,
            probability: p,
            state: collapsed,
        });
    }
    Ok(outcomes)
}
