//! State vectors and in-place gate kernels.
//!
//! Qubit `q` of an `n`-qubit register is bit `n - 1 - q` of the basis index,
//! so `q0` is the most significant bit and the bitstring `"01"` is index 1.

use num_complex::Complex64;

use crate::circuit::Gate;
use crate::error::{invalid, Result};
use crate::gate::{gate_matrix, ControlSpec};
use crate::matrix::Matrix;

/// Tolerance on `‖v‖₂ − 1` for user-supplied initial vectors.
pub const INIT_NORM_TOLERANCE: f64 = 1e-8;

/// Initial state of a simulation: a bitstring or an explicit amplitude vector.
#[derive(Debug, Clone, PartialEq)]
pub enum InitialState {
    Bits(String),
    Vector(Vec<Complex64>),
}

impl From<&str> for InitialState {
    fn from(s: &str) -> Self {
        InitialState::Bits(s.to_string())
    }
}

impl From<String> for InitialState {
    fn from(s: String) -> Self {
        InitialState::Bits(s)
    }
}

impl From<Vec<Complex64>> for InitialState {
    fn from(v: Vec<Complex64>) -> Self {
        InitialState::Vector(v)
    }
}

impl From<&[Complex64]> for InitialState {
    fn from(v: &[Complex64]) -> Self {
        InitialState::Vector(v.to_vec())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    nb_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl StateVector {
    /// `|0…0⟩` on `nb_qubits` qubits.
    pub fn zero(nb_qubits: usize) -> Self {
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 1 << nb_qubits];
        amplitudes[0] = Complex64::new(1.0, 0.0);
        Self {
            nb_qubits,
            amplitudes,
        }
    }

    /// Basis state named by a bitstring, character `j` being qubit `j`.
    pub fn from_bitstring(bits: &str, nb_qubits: usize) -> Result<Self> {
        if bits.chars().count() != nb_qubits {
            return invalid(format!(
                "bitstring '{bits}' has length {} but the circuit has {nb_qubits} qubits",
                bits.chars().count()
            ));
        }
        let mut index = 0usize;
        for ch in bits.chars() {
            index <<= 1;
            match ch {
                '0' => {}
                '1' => index |= 1,
                other => return invalid(format!("invalid character '{other}' in bitstring")),
            }
        }
        let mut state = Self::zero(nb_qubits);
        state.amplitudes[0] = Complex64::new(0.0, 0.0);
        state.amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(state)
    }

    /// Copies `amplitudes` verbatim after checking length and normalization.
    pub fn from_vector(amplitudes: Vec<Complex64>, nb_qubits: usize) -> Result<Self> {
        if amplitudes.len() != 1usize << nb_qubits {
            return invalid(format!(
                "vector has length {} but {nb_qubits} qubits need {}",
                amplitudes.len(),
                1usize << nb_qubits
            ));
        }
        let norm = norm(&amplitudes);
        if norm.is_nan() || (norm - 1.0).abs() > INIT_NORM_TOLERANCE {
            return invalid(format!("initial vector is not normalized (norm {norm})"));
        }
        Ok(Self {
            nb_qubits,
            amplitudes,
        })
    }

    pub fn from_initial(init: &InitialState, nb_qubits: usize) -> Result<Self> {
        match init {
            InitialState::Bits(b) => Self::from_bitstring(b, nb_qubits),
            InitialState::Vector(v) => Self::from_vector(v.clone(), nb_qubits),
        }
    }

    pub(crate) fn from_raw(nb_qubits: usize, amplitudes: Vec<Complex64>) -> Self {
        debug_assert_eq!(amplitudes.len(), 1 << nb_qubits);
        Self {
            nb_qubits,
            amplitudes,
        }
    }

    pub fn nb_qubits(&self) -> usize {
        self.nb_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn into_amplitudes(self) -> Vec<Complex64> {
        self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        norm(&self.amplitudes)
    }

    /// Bit mask of qubit `q` in a basis index.
    pub fn qubit_mask(&self, q: usize) -> usize {
        1 << (self.nb_qubits - 1 - q)
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &StateVector) -> Complex64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    /// Tensor product `self ⊗ other`; `self` supplies the leading qubits.
    pub fn tensor(&self, other: &StateVector) -> StateVector {
        let amplitudes = self
            .amplitudes
            .iter()
            .flat_map(|a| other.amplitudes.iter().map(move |b| a * b))
            .collect();
        Self {
            nb_qubits: self.nb_qubits + other.nb_qubits,
            amplitudes,
        }
    }

    /// Largest amplitude-wise modulus of `self − other`.
    pub fn max_abs_diff(&self, other: &StateVector) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Applies a validated gate in place.
    pub fn apply_gate(&mut self, gate: &Gate) {
        self.apply_gate_offset(gate, 0);
    }

    /// Applies `gate` with every qubit index shifted by `offset`.
    pub(crate) fn apply_gate_offset(&mut self, gate: &Gate, offset: usize) {
        let m = gate_matrix(&gate.kind);
        let (cmask, cval) = self.control_pattern(&gate.controls, offset);
        if gate.targets.len() == 1 {
            self.apply_single(gate.targets[0] + offset, &m, cmask, cval);
        } else {
            self.apply_window(
                gate.targets[0] + offset,
                gate.targets.len(),
                &m,
                cmask,
                cval,
            );
        }
    }

    /// Applies an uncontrolled 2×2 matrix to qubit `q`.
    pub fn apply_matrix(&mut self, q: usize, m: &Matrix) {
        self.apply_single(q, m, 0, 0);
    }

    fn control_pattern(&self, controls: &[ControlSpec], offset: usize) -> (usize, usize) {
        controls.iter().fold((0, 0), |(mask, val), c| {
            let bit = self.qubit_mask(c.qubit + offset);
            (mask | bit, if c.state == 1 { val | bit } else { val })
        })
    }

    /// Pair kernel: for every index pair differing only in the target bit and
    /// whose control bits match `cval` under `cmask`, apply the 2×2 matrix.
    fn apply_single(&mut self, q: usize, m: &Matrix, cmask: usize, cval: usize) {
        let pos = self.nb_qubits - 1 - q;
        let tmask = 1usize << pos;
        let low = tmask - 1;
        let [m00, m01, m10, m11] = [m[(0, 0)], m[(0, 1)], m[(1, 0)], m[(1, 1)]];
        let half = self.amplitudes.len() >> 1;
        let amps = &mut self.amplitudes;
        for k in 0..half {
            let i = ((k & !low) << 1) | (k & low);
            if i & cmask != cval {
                continue;
            }
            let j = i | tmask;
            let (a0, a1) = (amps[i], amps[j]);
            amps[i] = m00 * a0 + m01 * a1;
            amps[j] = m10 * a0 + m11 * a1;
        }
    }

    /// Window kernel for a `2^k × 2^k` matrix on qubits `first..first + k`.
    /// Row index bit `k − 1` of the matrix corresponds to qubit `first`.
    fn apply_window(&mut self, first: usize, k: usize, m: &Matrix, cmask: usize, cval: usize) {
        let pos_lo = self.nb_qubits - first - k;
        let low = (1usize << pos_lo) - 1;
        let block = 1usize << k;
        let count = self.amplitudes.len() >> k;
        let mut gathered = vec![Complex64::new(0.0, 0.0); block];
        let amps = &mut self.amplitudes;
        for i in 0..count {
            let base = ((i & !low) << k) | (i & low);
            if base & cmask != cval {
                continue;
            }
            for (r, g) in gathered.iter_mut().enumerate() {
                *g = amps[base | (r << pos_lo)];
            }
            for (r, row) in m.rows().enumerate() {
                amps[base | (r << pos_lo)] = row.iter().zip(&gathered).map(|(a, b)| a * b).sum();
            }
        }
    }
}

fn norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Returns `U|ψ⟩` for a gate instruction, leaving the input untouched.
pub fn apply_gate(state: &StateVector, gate: &Gate) -> Result<StateVector> {
    gate.validate(state.nb_qubits())?;
    let mut out = state.clone();
    out.apply_gate(gate);
    Ok(out)
}
