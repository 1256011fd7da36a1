//! Gate kinds, control specifications and measurement bases.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;

use num_complex::Complex64;

use crate::error::{invalid, Result};
use crate::matrix::Matrix;

/// Maximum allowed `max |U†U − I|` for user-supplied matrices.
pub const UNITARY_TOLERANCE: f64 = 1e-10;

/// A user-defined unitary on `2^k` amplitudes with a display label.
#[derive(Debug, Clone, PartialEq)]
pub struct CustomGate {
    matrix: Matrix,
    label: String,
}

impl CustomGate {
    pub fn new(matrix: Matrix, label: impl Into<String>) -> Result<Self> {
        let dim = matrix.dim();
        if dim < 2 || !dim.is_power_of_two() {
            return invalid(format!(
                "custom gate dimension {dim} is not 2^k with k >= 1"
            ));
        }
        let defect = matrix.unitarity_defect();
        if defect.is_nan() || defect > UNITARY_TOLERANCE {
            return invalid(format!(
                "custom gate is not unitary (max |U'U - I| = {defect:e})"
            ));
        }
        Ok(Self {
            matrix,
            label: label.into(),
        })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn nb_qubits(&self) -> usize {
        self.matrix.dim().trailing_zeros() as usize
    }
}

/// The unitary part of a gate. Controls are carried separately by the
/// instruction, so CNOT is `X` with one control and CZ is `Z` with one.
#[derive(Debug, Clone, PartialEq)]
pub enum GateKind {
    H,
    X,
    Y,
    Z,
    S,
    Sdg,
    T,
    Tdg,
    /// Rotations take an angle in radians.
    Rx(f64),
    Ry(f64),
    Rz(f64),
    Custom(CustomGate),
}

impl GateKind {
    /// Number of contiguous target qubits the unitary acts on.
    pub fn nb_targets(&self) -> usize {
        match self {
            GateKind::Custom(g) => g.nb_qubits(),
            _ => 1,
        }
    }

    /// Short display name, e.g. `H`, `S†`, `RZ(1.5708)`.
    pub fn label(&self) -> String {
        match self {
            GateKind::H => "H".into(),
            GateKind::X => "X".into(),
            GateKind::Y => "Y".into(),
            GateKind::Z => "Z".into(),
            GateKind::S => "S".into(),
            GateKind::Sdg => "S†".into(),
            GateKind::T => "T".into(),
            GateKind::Tdg => "T†".into(),
            GateKind::Rx(t) => format!("RX({t:.4})"),
            GateKind::Ry(t) => format!("RY({t:.4})"),
            GateKind::Rz(t) => format!("RZ({t:.4})"),
            GateKind::Custom(g) => g.label().to_string(),
        }
    }
}

/// The standard unitary of a gate kind, without any controls.
pub fn gate_matrix(kind: &GateKind) -> Matrix {
    let c = Complex64::new;
    let zero = c(0.0, 0.0);
    let one = c(1.0, 0.0);
    match kind {
        GateKind::H => {
            let h = c(FRAC_1_SQRT_2, 0.0);
            Matrix::from_2x2(h, h, h, -h)
        }
        GateKind::X => Matrix::from_2x2(zero, one, one, zero),
        GateKind::Y => Matrix::from_2x2(zero, c(0.0, -1.0), c(0.0, 1.0), zero),
        GateKind::Z => Matrix::from_2x2(one, zero, zero, -one),
        GateKind::S => Matrix::from_2x2(one, zero, zero, c(0.0, 1.0)),
        GateKind::Sdg => Matrix::from_2x2(one, zero, zero, c(0.0, -1.0)),
        GateKind::T => Matrix::from_2x2(one, zero, zero, c(FRAC_1_SQRT_2, FRAC_1_SQRT_2)),
        GateKind::Tdg => Matrix::from_2x2(one, zero, zero, c(FRAC_1_SQRT_2, -FRAC_1_SQRT_2)),
        GateKind::Rx(t) => {
            let (s, co) = (t / 2.0).sin_cos();
            Matrix::from_2x2(c(co, 0.0), c(0.0, -s), c(0.0, -s), c(co, 0.0))
        }
        GateKind::Ry(t) => {
            let (s, co) = (t / 2.0).sin_cos();
            Matrix::from_2x2(c(co, 0.0), c(-s, 0.0), c(s, 0.0), c(co, 0.0))
        }
        GateKind::Rz(t) => {
            let (s, co) = (t / 2.0).sin_cos();
            Matrix::from_2x2(c(co, -s), zero, zero, c(co, s))
        }
        GateKind::Custom(g) => g.matrix().clone(),
    }
}

/// A control qubit and the value (0 or 1) that activates the gate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ControlSpec {
    pub qubit: usize,
    pub state: u8,
}

impl ControlSpec {
    pub fn new(qubit: usize, state: u8) -> Self {
        Self { qubit, state }
    }

    /// Control that activates on `|1⟩`.
    pub fn on(qubit: usize) -> Self {
        Self { qubit, state: 1 }
    }
}

/// Measurement basis. Measuring in a basis `B` applies the basis change,
/// measures in Z and applies its inverse to the collapsed state.
#[derive(Debug, Clone, PartialEq, Default)]
pub enum Basis {
    #[default]
    Z,
    X,
    Y,
    /// Custom 2×2 basis change mapping the basis eigenvectors onto `|0⟩`, `|1⟩`.
    Custom(Matrix),
}

impl Basis {
    pub fn custom(change: Matrix) -> Result<Self> {
        if change.dim() != 2 {
            return invalid("custom basis change must be 2x2");
        }
        let defect = change.unitarity_defect();
        if defect.is_nan() || defect > UNITARY_TOLERANCE {
            return invalid(format!(
                "custom basis change is not unitary (defect {defect:e})"
            ));
        }
        Ok(Basis::Custom(change))
    }

    /// The basis-change operator, `None` for the computational basis.
    pub fn change(&self) -> Option<Matrix> {
        match self {
            Basis::Z => None,
            Basis::X => Some(gate_matrix(&GateKind::H)),
            // H·S† maps the Y eigenvectors (|0⟩ ± i|1⟩)/√2 to |0⟩, |1⟩
            Basis::Y => Some(&gate_matrix(&GateKind::H) * &gate_matrix(&GateKind::Sdg)),
            Basis::Custom(b) => Some(b.clone()),
        }
    }

    pub fn is_z(&self) -> bool {
        matches!(self, Basis::Z)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Basis::Z => "z",
            Basis::X => "x",
            Basis::Y => "y",
            Basis::Custom(_) => "custom",
        };
        f.write_str(s)
    }
}
