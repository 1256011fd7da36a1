//! Dense reference implementations shared by the integration tests.
//!
//! Nothing here calls the simulator's kernels: gates are embedded with
//! explicit Kronecker products, `I_l ⊗ U ⊗ I_r`, and controls with the
//! projector sum `I − P + P ⊗ U`.

#![allow(dead_code)]

use std::f64::consts::{FRAC_1_SQRT_2, PI};

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use qsim_core::{
    Basis, Circuit, ControlSpec, CustomGate, Gate, GateKind, Instruction, Matrix, Measurement,
    StateVector,
};
use rand::Rng;

pub mod invariants;

pub type Dense = DMatrix<Complex64>;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn dense2(m: [[Complex64; 2]; 2]) -> Dense {
    Dense::from_row_slice(2, 2, &[m[0][0], m[0][1], m[1][0], m[1][1]])
}

pub fn to_dense(m: &Matrix) -> Dense {
    Dense::from_row_slice(m.dim(), m.dim(), m.as_slice())
}

pub fn from_dense(d: &Dense) -> Matrix {
    let rows = (0..d.nrows())
        .map(|r| (0..d.ncols()).map(|col| d[(r, col)]).collect())
        .collect();
    Matrix::from_rows(rows).expect("square")
}

/// Textbook gate matrices, written out independently of the library.
pub fn reference_matrix(kind: &GateKind) -> Dense {
    let s = FRAC_1_SQRT_2;
    let o = c(0.0, 0.0);
    let l = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    let rot = |t: f64, p: [[Complex64; 2]; 2]| {
        let (cs, sn) = ((t / 2.0).cos(), (t / 2.0).sin());
        Dense::identity(2, 2) * c(cs, 0.0) - dense2(p) * c(0.0, sn)
    };
    match kind {
        GateKind::H => dense2([[c(s, 0.0), c(s, 0.0)], [c(s, 0.0), c(-s, 0.0)]]),
        GateKind::X => dense2([[o, l], [l, o]]),
        GateKind::Y => dense2([[o, -i], [i, o]]),
        GateKind::Z => dense2([[l, o], [o, -l]]),
        GateKind::S => dense2([[l, o], [o, i]]),
        GateKind::Sdg => dense2([[l, o], [o, -i]]),
        GateKind::T => dense2([[l, o], [o, Complex64::from_polar(1.0, PI / 4.0)]]),
        GateKind::Tdg => dense2([[l, o], [o, Complex64::from_polar(1.0, -PI / 4.0)]]),
        GateKind::Rx(t) => rot(*t, [[o, l], [l, o]]),
        GateKind::Ry(t) => rot(*t, [[o, -i], [i, o]]),
        GateKind::Rz(t) => rot(*t, [[l, o], [o, -l]]),
        GateKind::Custom(g) => to_dense(g.matrix()),
    }
}

fn kron_all(factors: &[Dense]) -> Dense {
    factors
        .iter()
        .fold(Dense::identity(1, 1), |acc, f| acc.kronecker(f))
}

/// Full `2^n × 2^n` matrix of `gate` acting on `n` qubits, qubit 0 most
/// significant.
pub fn embed(gate: &Gate, n: usize) -> Dense {
    let u = reference_matrix(&gate.kind);
    let first = gate.targets[0];
    let k = gate.targets.len();
    let mut with_u = Vec::new();
    let mut with_id = Vec::new();
    let mut q = 0;
    while q < n {
        if q == first {
            with_u.push(u.clone());
            with_id.push(Dense::identity(1 << k, 1 << k));
            q += k;
            continue;
        }
        let factor = match gate.controls.iter().find(|ctl| ctl.qubit == q) {
            Some(ctl) => {
                let mut p = Dense::zeros(2, 2);
                p[(ctl.state as usize, ctl.state as usize)] = c(1.0, 0.0);
                p
            }
            None => Dense::identity(2, 2),
        };
        with_u.push(factor.clone());
        with_id.push(factor);
        q += 1;
    }
    let dim = 1 << n;
    Dense::identity(dim, dim) - kron_all(&with_id) + kron_all(&with_u)
}

/// Product of the embedded gates of a measurement-free circuit.
pub fn circuit_matrix(circuit: &Circuit) -> Dense {
    let n = circuit.nb_qubits();
    let flat = circuit.flattened();
    let mut m = Dense::identity(1 << n, 1 << n);
    for instr in flat.instructions() {
        match instr {
            Instruction::Gate(g) => m = embed(g, n) * m,
            other => panic!("oracle cannot handle {other:?}"),
        }
    }
    m
}

/// Applies the embedded gates of a measurement-free circuit to `v` one at a
/// time, which avoids matrix-matrix products.
pub fn oracle_state(circuit: &Circuit, v: &[Complex64]) -> Vec<Complex64> {
    let n = circuit.nb_qubits();
    let mut psi = DVector::from_column_slice(v);
    for instr in circuit.flattened().instructions() {
        match instr {
            Instruction::Gate(g) => psi = embed(g, n) * psi,
            other => panic!("oracle cannot handle {other:?}"),
        }
    }
    psi.iter().copied().collect()
}

pub fn apply_dense(m: &Dense, v: &[Complex64]) -> Vec<Complex64> {
    (m * DVector::from_column_slice(v))
        .iter()
        .copied()
        .collect()
}

/// Largest entry-wise modulus of `a − b`.
pub fn dense_diff(a: &Dense, b: &Dense) -> f64 {
    (a - b).iter().map(|z| z.norm()).fold(0.0, f64::max)
}

pub fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// `|⟨a|b⟩|`, equal to 1 when the states agree up to a global phase.
pub fn fidelity(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.conj() * y)
        .sum::<Complex64>()
        .norm()
}

/// Trace norm of a 2×2 Hermitian difference through its singular values.
pub fn trace_distance_svd(a: &Dense, b: &Dense) -> f64 {
    let d = a - b;
    0.5 * d.singular_values().iter().sum::<f64>()
}

pub fn random_state<R: Rng>(rng: &mut R, n: usize) -> StateVector {
    let raw: Vec<Complex64> = (0..1usize << n)
        .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm = raw.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let amps = raw.into_iter().map(|z| z / norm).collect();
    StateVector::from_vector(amps, n).expect("normalized")
}

pub fn random_unitary<R: Rng>(rng: &mut R, dim: usize) -> Matrix {
    let a = Dense::from_fn(dim, dim, |_, _| {
        c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    from_dense(&a.qr().q())
}

fn random_angle<R: Rng>(rng: &mut R) -> f64 {
    rng.gen_range(-2.0 * PI..2.0 * PI)
}

/// A random single-qubit kind, custom unitaries included.
pub fn random_kind<R: Rng>(rng: &mut R) -> GateKind {
    match rng.gen_range(0..12) {
        0 => GateKind::H,
        1 => GateKind::X,
        2 => GateKind::Y,
        3 => GateKind::Z,
        4 => GateKind::S,
        5 => GateKind::Sdg,
        6 => GateKind::T,
        7 => GateKind::Tdg,
        8 => GateKind::Rx(random_angle(rng)),
        9 => GateKind::Ry(random_angle(rng)),
        10 => GateKind::Rz(random_angle(rng)),
        _ => GateKind::Custom(CustomGate::new(random_unitary(rng, 2), "U").unwrap()),
    }
}

/// A random gate from the full set: standard and custom single-qubit gates,
/// two-qubit custom windows, and up to three controls of either polarity.
pub fn random_gate<R: Rng>(rng: &mut R, n: usize) -> Gate {
    let two_target = n >= 2 && rng.gen_bool(0.15);
    let (kind, targets) = if two_target {
        let t = rng.gen_range(0..n - 1);
        let u = CustomGate::new(random_unitary(rng, 4), "U2").unwrap();
        (GateKind::Custom(u), vec![t, t + 1])
    } else {
        (random_kind(rng), vec![rng.gen_range(0..n)])
    };
    let mut free: Vec<usize> = (0..n).filter(|q| !targets.contains(q)).collect();
    let nb_controls = rng.gen_range(0..=free.len().min(3));
    let mut controls = Vec::new();
    for _ in 0..nb_controls {
        let q = free.swap_remove(rng.gen_range(0..free.len()));
        controls.push(ControlSpec::new(q, rng.gen_range(0..=1)));
    }
    Gate::new(kind, targets, controls)
}

pub fn random_circuit<R: Rng>(rng: &mut R, n: usize, depth: usize) -> Circuit {
    let mut circuit = Circuit::new(n).unwrap();
    for _ in 0..depth {
        circuit.push_back(random_gate(rng, n)).unwrap();
    }
    circuit
}

/// A random circuit restricted to what OpenQASM export supports.
pub fn random_exportable_circuit<R: Rng>(rng: &mut R, n: usize, depth: usize) -> Circuit {
    let mut circuit = Circuit::new(n).unwrap();
    for _ in 0..depth {
        let choice = rng.gen_range(0..14);
        let instr: Instruction = match choice {
            0..=10 => {
                let mut kind = random_kind(rng);
                while matches!(kind, GateKind::Custom(_)) {
                    kind = random_kind(rng);
                }
                Gate::single(kind, rng.gen_range(0..n)).into()
            }
            11 if n >= 2 => {
                let (a, b) = distinct_pair(rng, n);
                if rng.gen_bool(0.5) {
                    Gate::cnot(a, b).into()
                } else {
                    Gate::cz(a, b).into()
                }
            }
            12 if n >= 3 => {
                let (a, b) = distinct_pair(rng, n);
                let t = (0..n).find(|q| *q != a && *q != b).unwrap();
                Gate::mcx(&[a, b], t, &[1, 1]).unwrap().into()
            }
            _ => Measurement::new(rng.gen_range(0..n)).into(),
        };
        circuit.push_back(instr).unwrap();
    }
    circuit
}

fn distinct_pair<R: Rng>(rng: &mut R, n: usize) -> (usize, usize) {
    let a = rng.gen_range(0..n);
    let mut b = rng.gen_range(0..n - 1);
    if b >= a {
        b += 1;
    }
    (a, b)
}

pub fn random_basis<R: Rng>(rng: &mut R) -> Basis {
    match rng.gen_range(0..4) {
        0 => Basis::Z,
        1 => Basis::X,
        2 => Basis::Y,
        _ => Basis::custom(random_unitary(rng, 2)).unwrap(),
    }
}

/// The library's basis-change matrix, with X and Y written out here.
pub fn reference_basis_change(basis: &Basis) -> Dense {
    let s = FRAC_1_SQRT_2;
    match basis {
        Basis::Z => Dense::identity(2, 2),
        Basis::X => reference_matrix(&GateKind::H),
        // H·S†
        Basis::Y => dense2([[c(s, 0.0), c(0.0, -s)], [c(s, 0.0), c(0.0, s)]]),
        Basis::Custom(m) => to_dense(m),
    }
}
