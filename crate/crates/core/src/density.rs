//! Single-qubit density matrices.

use num_complex::Complex64;

use crate::error::{invalid, Result};
use crate::state::StateVector;

const HERMITIAN_TOLERANCE: f64 = 1e-10;

/// 2×2 Hermitian matrix with unit trace. Positivity is not enforced since
/// finite-shot estimates may violate it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix {
    entries: [[Complex64; 2]; 2],
}

impl DensityMatrix {
    pub fn new(entries: [[Complex64; 2]; 2]) -> Result<Self> {
        let herm = (entries[0][1] - entries[1][0].conj()).norm();
        let diag_im = entries[0][0].im.abs().max(entries[1][1].im.abs());
        if herm > HERMITIAN_TOLERANCE || diag_im > HERMITIAN_TOLERANCE {
            return invalid("density matrix is not Hermitian");
        }
        let trace = (entries[0][0] + entries[1][1]).re;
        if (trace - 1.0).abs() > HERMITIAN_TOLERANCE {
            return invalid(format!("density matrix trace is {trace}, not 1"));
        }
        Ok(Self { entries })
    }

    /// `|v⟩⟨v|` for a normalized single-qubit state.
    pub fn from_pure(v: &StateVector) -> Result<Self> {
        if v.nb_qubits() != 1 {
            return invalid("density matrices are single-qubit only");
        }
        let a = v.amplitudes();
        Self::new([
            [a[0] * a[0].conj(), a[0] * a[1].conj()],
            [a[1] * a[0].conj(), a[1] * a[1].conj()],
        ])
    }

    /// `½(s0·I + s1·X + s2·Y + s3·Z)`.
    pub fn from_pauli(s0: f64, s1: f64, s2: f64, s3: f64) -> Result<Self> {
        let c = Complex64::new;
        Self::new([
            [c((s0 + s3) / 2.0, 0.0), c(s1 / 2.0, -s2 / 2.0)],
            [c(s1 / 2.0, s2 / 2.0), c((s0 - s3) / 2.0, 0.0)],
        ])
    }

    pub fn entries(&self) -> &[[Complex64; 2]; 2] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row][col]
    }

    pub fn max_abs_diff(&self, other: &DensityMatrix) -> f64 {
        let mut m: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                m = m.max((self.entries[r][c] - other.entries[r][c]).norm());
            }
        }
        m
    }
}

/// `½ Σ σ_i(a − b)`. The difference is Hermitian, so its singular values are
/// the absolute values of its two real eigenvalues.
pub fn trace_distance(a: &DensityMatrix, b: &DensityMatrix) -> f64 {
    let d = |r: usize, c: usize| a.entries[r][c] - b.entries[r][c];
    let p = d(0, 0).re;
    let q = d(1, 1).re;
    let off = d(0, 1).norm();
    let mean = (p + q) / 2.0;
    let radius = (((p - q) / 2.0).powi(2) + off * off).sqrt();
    0.5 * ((mean + radius).abs() + (mean - radius).abs())
}
