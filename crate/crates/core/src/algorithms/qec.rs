use crate::circuit::{Circuit, Gate, Measurement};
use crate::error::{invalid, Result};

/// Ancilla pattern `(q3, q4)` and the data qubit it identifies as flipped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SyndromeEntry {
    pub syndrome: &'static str,
    pub flipped: Option<usize>,
}

impl SyndromeEntry {
    /// Control states of the correcting MCX on `[q3, q4]`.
    pub fn control_states(&self) -> [u8; 2] {
        let b: Vec<u8> = self.syndrome.bytes().map(|b| b - b'0').collect();
        [b[0], b[1]]
    }
}

/// `q3 = q0 ⊕ q1`, `q4 = q0 ⊕ q2`.
pub const SYNDROME_TABLE: [SyndromeEntry; 4] = [
    SyndromeEntry {
        syndrome: "00",
        flipped: None,
    },
    SyndromeEntry {
        syndrome: "01",
        flipped: Some(2),
    },
    SyndromeEntry {
        syndrome: "10",
        flipped: Some(1),
    },
    SyndromeEntry {
        syndrome: "11",
        flipped: Some(0),
    },
];

/// Syndrome produced by a bit flip on `error_qubit`.
pub fn syndrome_for_error(error_qubit: Option<usize>) -> Option<&'static str> {
    SYNDROME_TABLE
        .iter()
        .find(|e| e.flipped == error_qubit)
        .map(|e| e.syndrome)
}

/// Five-qubit bit-flip repetition code: data on `q0..q2`, ancillas `q3, q4`.
/// An optional X error is injected on `error_qubit` after encoding.
pub fn build_repetition_qec(error_qubit: Option<usize>) -> Result<Circuit> {
    if let Some(q) = error_qubit {
        if q > 2 {
            return invalid(format!("error qubit {q} is not a data qubit (0, 1 or 2)"));
        }
    }
    let mut c = Circuit::new(5)?;
    c.push_back(Gate::cnot(0, 1))?;
    c.push_back(Gate::cnot(0, 2))?;
    if let Some(q) = error_qubit {
        c.push_back(Gate::x(q))?;
    }
    c.push_back(Gate::cnot(0, 3))?;
    c.push_back(Gate::cnot(1, 3))?;
    c.push_back(Gate::cnot(0, 4))?;
    c.push_back(Gate::cnot(2, 4))?;
    c.push_back(Measurement::new(3))?;
    c.push_back(Measurement::new(4))?;
    for entry in &SYNDROME_TABLE[1..] {
        let target = entry.flipped.expect("non-trivial syndrome");
        c.push_back(Gate::mcx(&[3, 4], target, &entry.control_states())?)?;
    }
    Ok(c)
}
