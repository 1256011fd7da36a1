//! Branching simulation of circuits with mid-circuit measurements.
//!
//! Every measurement splits each live branch into one branch per outcome with
//! nonzero probability. Gates apply to every live branch independently. The
//! result lists all final branches ordered lexicographically by outcome.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuit::{Circuit, Instruction};
use crate::error::{invalid, Error, Result};
use crate::gate::Basis;
use crate::measure::{measure, PRUNE_THRESHOLD};
use crate::state::{InitialState, StateVector};

/// Largest slice-external probability mass tolerated by [`reduced_statevector`].
pub const SLICE_TOLERANCE: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SimOptions {
    /// Maximum number of live branches before the simulation gives up.
    pub max_branches: usize,
}

impl Default for SimOptions {
    fn default() -> Self {
        Self {
            max_branches: 1 << 16,
        }
    }
}

/// One measurement trajectory.
#[derive(Debug, Clone, PartialEq)]
pub struct Branch {
    /// One character per executed measurement, in execution order.
    pub outcome: String,
    pub probability: f64,
    /// Full collapsed state; measured qubits stay in the register.
    pub state: StateVector,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SimulationResult {
    nb_qubits: usize,
    branches: Vec<Branch>,
    measured: Vec<(usize, Basis)>,
    reduced: Vec<Option<StateVector>>,
    terminal: bool,
}

impl SimulationResult {
    pub fn nb_qubits(&self) -> usize {
        self.nb_qubits
    }

    pub fn branches(&self) -> &[Branch] {
        &self.branches
    }

    pub fn results(&self) -> Vec<&str> {
        self.branches.iter().map(|b| b.outcome.as_str()).collect()
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.branches.iter().map(|b| b.probability).collect()
    }

    pub fn states(&self) -> Vec<&StateVector> {
        self.branches.iter().map(|b| &b.state).collect()
    }

    /// Measured qubits and their bases, in execution order.
    pub fn measured_qubits(&self) -> &[(usize, Basis)] {
        &self.measured
    }

    /// Per-branch state of the unmeasured qubits, present only when every
    /// measured qubit was measured once and never touched afterwards.
    pub fn reduced_states(&self) -> &[Option<StateVector>] {
        &self.reduced
    }

    /// True when no measured qubit is measured again or acted on by a later gate.
    pub fn measurements_are_terminal(&self) -> bool {
        self.terminal
    }
}

/// Simulates `circuit` from `initial` with default options.
pub fn simulate(circuit: &Circuit, initial: impl Into<InitialState>) -> Result<SimulationResult> {
    simulate_with(circuit, initial, SimOptions::default())
}

pub fn simulate_with(
    circuit: &Circuit,
    initial: impl Into<InitialState>,
    options: SimOptions,
) -> Result<SimulationResult> {
    let n = circuit.nb_qubits();
    let state = StateVector::from_initial(&initial.into(), n)?;
    let mut run = Run {
        branches: vec![Branch {
            outcome: String::new(),
            probability: 1.0,
            state,
        }],
        measured: Vec::new(),
        is_measured: vec![false; n],
        terminal: true,
        options,
    };
    run.execute(circuit, 0)?;

    let Run {
        mut branches,
        measured,
        terminal,
        ..
    } = run;
    branches.sort_by(|a, b| a.outcome.cmp(&b.outcome));
    let mut result = SimulationResult {
        nb_qubits: n,
        branches,
        measured,
        reduced: Vec::new(),
        terminal,
    };
    result.reduced = match reduced_states(&result) {
        Ok(states) => states.into_iter().map(Some).collect(),
        Err(_) => vec![None; result.branches.len()],
    };
    Ok(result)
}

struct Run {
    branches: Vec<Branch>,
    measured: Vec<(usize, Basis)>,
    is_measured: Vec<bool>,
    terminal: bool,
    options: SimOptions,
}

impl Run {
    fn execute(&mut self, circuit: &Circuit, offset: usize) -> Result<()> {
        for instr in circuit.instructions() {
            match instr {
                Instruction::Gate(g) => {
                    if g.qubits().any(|q| self.is_measured[q + offset]) {
                        self.terminal = false;
                    }
                    for b in &mut self.branches {
                        b.state.apply_gate_offset(g, offset);
                    }
                }
                Instruction::Measurement(m) => {
                    let q = m.qubit + offset;
                    if self.is_measured[q] {
                        self.terminal = false;
                    }
                    self.is_measured[q] = true;
                    self.measured.push((q, m.basis.clone()));
                    self.split(q, &m.basis)?;
                }
                Instruction::Block(b) => self.execute(&b.circuit, offset + b.offset)?,
            }
        }
        Ok(())
    }

    fn split(&mut self, q: usize, basis: &Basis) -> Result<()> {
        let mut next = Vec::with_capacity(self.branches.len() * 2);
        for branch in self.branches.drain(..) {
            for o in measure(&branch.state, q, basis)? {
                let probability = branch.probability * o.probability;
                if probability <= PRUNE_THRESHOLD {
                    continue;
                }
                let mut outcome = branch.outcome.clone();
                outcome.push(if o.bit == 1 { '1' } else { '0' });
                next.push(Branch {
                    outcome,
                    probability,
                    state: o.state,
                });
            }
        }
        if next.len() > self.options.max_branches {
            return Err(Error::ResourceLimit(format!(
                "{} live branches exceed the limit of {}",
                next.len(),
                self.options.max_branches
            )));
        }
        self.branches = next;
        Ok(())
    }
}

/// Samples `shots` outcomes from the branch distribution.
///
/// Uses ChaCha8 seeded from `seed` and inverse-CDF sampling over the
/// lexicographically ordered outcomes, so counts are reproducible across
/// platforms. Every branch outcome appears in the map, possibly with count 0.
pub fn counts(result: &SimulationResult, shots: u64, seed: u64) -> Result<BTreeMap<String, u64>> {
    if shots == 0 {
        return invalid("shots must be at least 1");
    }
    if result.measured.is_empty() {
        return Err(Error::UnsupportedOperation(
            "counts requires at least one measurement".into(),
        ));
    }
    let mut cdf = Vec::with_capacity(result.branches.len());
    let mut acc = 0.0;
    for b in &result.branches {
        acc += b.probability;
        cdf.push(acc);
    }
    let total = acc;
    let mut tally = vec![0u64; cdf.len()];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..shots {
        let u = rng.gen::<f64>() * total;
        let idx = cdf.partition_point(|&c| c <= u).min(cdf.len() - 1);
        tally[idx] += 1;
    }
    Ok(result
        .branches
        .iter()
        .zip(tally)
        .map(|(b, n)| (b.outcome.clone(), n))
        .collect())
}

/// State of the qubits not listed in `known`, assuming `known[i]` is in the
/// computational basis state `outcome[i]`.
///
/// Fails with [`Error::InvalidState`] if more than [`SLICE_TOLERANCE`] of the
/// probability mass lies outside the slice fixed by `outcome`.
pub fn reduced_statevector(
    state: &StateVector,
    known: &[usize],
    outcome: &str,
) -> Result<StateVector> {
    let n = state.nb_qubits();
    let bits: Vec<char> = outcome.chars().collect();
    if bits.len() != known.len() {
        return invalid(format!(
            "{} known qubits but outcome '{outcome}' has {} bits",
            known.len(),
            bits.len()
        ));
    }
    let mut is_known = vec![false; n];
    let (mut mask, mut value) = (0usize, 0usize);
    for (&q, &b) in known.iter().zip(&bits) {
        if q >= n {
            return invalid(format!("known qubit {q} out of range"));
        }
        if std::mem::replace(&mut is_known[q], true) {
            return invalid(format!("known qubit {q} listed twice"));
        }
        let bit = state.qubit_mask(q);
        mask |= bit;
        match b {
            '0' => {}
            '1' => value |= bit,
            other => return invalid(format!("invalid outcome character '{other}'")),
        }
    }
    let free: Vec<usize> = (0..n).filter(|&q| !is_known[q]).collect();
    if free.is_empty() {
        return invalid("no qubits remain after fixing the known qubits");
    }

    let amps = state.amplitudes();
    let outside: f64 = amps
        .iter()
        .enumerate()
        .filter(|(i, _)| i & mask != value)
        .map(|(_, a)| a.norm_sqr())
        .sum();
    if outside > SLICE_TOLERANCE {
        return Err(Error::InvalidState(format!(
            "state has probability {outside:e} outside the slice fixed by '{outcome}'"
        )));
    }

    let free_masks: Vec<usize> = free.iter().map(|&q| state.qubit_mask(q)).collect();
    let m = free.len();
    let sub: Vec<_> = (0..1usize << m)
        .map(|j| {
            let idx = free_masks
                .iter()
                .enumerate()
                .filter(|(k, _)| j >> (m - 1 - k) & 1 == 1)
                .fold(value, |acc, (_, &fm)| acc | fm);
            amps[idx]
        })
        .collect();
    let norm = sub.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(Error::InvalidState(format!(
            "state has no amplitude in the slice fixed by '{outcome}'"
        )));
    }
    Ok(StateVector::from_raw(
        m,
        sub.into_iter().map(|a| a / norm).collect(),
    ))
}

/// Reduced state of the unmeasured qubits for every branch of `result`.
///
/// Qubits measured in a non-computational basis are rotated back by their
/// basis change before slicing, so the outcome bit names the eigenvector.
pub fn reduced_states(result: &SimulationResult) -> Result<Vec<StateVector>> {
    let known: Vec<usize> = result.measured.iter().map(|(q, _)| *q).collect();
    let mut distinct = known.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() >= result.nb_qubits {
        return invalid("every qubit is measured; no reduced state exists");
    }
    if !result.terminal {
        return invalid(
            "reduced states require each measured qubit to be measured once and not acted on afterwards",
        );
    }
    result
        .branches
        .iter()
        .map(|b| {
            let mut state = b.state.clone();
            for (q, basis) in &result.measured {
                if let Some(change) = basis.change() {
                    state.apply_matrix(*q, &change);
                }
            }
            reduced_statevector(&state, &known, &b.outcome)
        })
        .collect()
}
