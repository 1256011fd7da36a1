use crate::circuit::{Circuit, Measurement};
use crate::density::DensityMatrix;
use crate::error::{invalid, Result};
use crate::gate::Basis;
use crate::simulate::{counts, simulate};
use crate::state::StateVector;

/// Pauli-expansion coefficients of a single-qubit density matrix,
/// `ρ = ½(s0·I + s1·X + s2·Y + s3·Z)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TomographyCoefficients {
    pub s0: f64,
    pub s1: f64,
    pub s2: f64,
    pub s3: f64,
}

impl TomographyCoefficients {
    pub fn density_matrix(&self) -> Result<DensityMatrix> {
        DensityMatrix::from_pauli(self.s0, self.s1, self.s2, self.s3)
    }
}

/// Probabilities `[P(0), P(1)]` of each measurement basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisProbabilities {
    pub x: [f64; 2],
    pub y: [f64; 2],
    pub z: [f64; 2],
}

impl BasisProbabilities {
    pub fn coefficients(&self) -> TomographyCoefficients {
        TomographyCoefficients {
            s0: self.z[0] + self.z[1],
            s1: self.x[0] - self.x[1],
            s2: self.y[0] - self.y[1],
            s3: self.z[0] - self.z[1],
        }
    }
}

/// A one-qubit circuit holding a single measurement in `basis`.
pub fn measurement_circuit(basis: Basis) -> Circuit {
    let mut c = Circuit::new(1).expect("1 qubit");
    c.push_back(Measurement::with_basis(0, basis)).unwrap();
    c
}

fn check_single_qubit(v: &StateVector) -> Result<()> {
    if v.nb_qubits() != 1 {
        return invalid("tomography expects a single-qubit state");
    }
    Ok(())
}

fn bases() -> [Basis; 3] {
    [Basis::X, Basis::Y, Basis::Z]
}

/// Exact outcome probabilities of `v` in the X, Y and Z bases.
pub fn basis_probabilities(v: &StateVector) -> Result<BasisProbabilities> {
    check_single_qubit(v)?;
    let mut p = [[0.0; 2]; 3];
    for (slot, basis) in p.iter_mut().zip(bases()) {
        let res = simulate(&measurement_circuit(basis), v.amplitudes())?;
        for b in res.branches() {
            slot[usize::from(b.outcome == "1")] = b.probability;
        }
    }
    Ok(BasisProbabilities {
        x: p[0],
        y: p[1],
        z: p[2],
    })
}

/// Estimates the density matrix of `v` from `shots` simulated measurements
/// per basis. The X, Y and Z experiments are seeded with `seed`, `seed + 1`
/// and `seed + 2`.
pub fn tomography_estimate(
    v: &StateVector,
    shots: u64,
    seed: u64,
) -> Result<(TomographyCoefficients, DensityMatrix)> {
    check_single_qubit(v)?;
    if shots == 0 {
        return invalid("shots must be at least 1");
    }
    let mut tallies = [[0u64; 2]; 3];
    for (i, basis) in bases().into_iter().enumerate() {
        let res = simulate(&measurement_circuit(basis), v.amplitudes())?;
        let cnt = counts(&res, shots, seed.wrapping_add(i as u64))?;
        tallies[i] = [
            cnt.get("0").copied().unwrap_or(0),
            cnt.get("1").copied().unwrap_or(0),
        ];
    }
    let shots_f = shots as f64;
    let diff = |t: [u64; 2]| (t[0] as f64 - t[1] as f64) / shots_f;
    let [tx, ty, tz] = tallies;
    let coeffs = TomographyCoefficients {
        // integer sum first so that s0 is exactly 1
        s0: (tz[0] + tz[1]) as f64 / shots_f,
        s1: diff(tx),
        s2: diff(ty),
        s3: diff(tz),
    };
    let rho = coeffs.density_matrix()?;
    Ok((coeffs, rho))
}
