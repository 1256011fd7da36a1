//! Seed-driven property checks, shared by the proptest suite and the
//! acceptance target.

use proptest::prelude::*;
use proptest::test_runner::TestCaseError;
use qsim_core::measure::z_probabilities;
use qsim_core::{
    apply_gate, counts, draw_ascii, measure, parse_qasm, reduced_statevector, simulate, to_qasm,
    Circuit, CustomGate, Gate, GateKind, Measurement, QasmDialect, StateVector,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;

pub type CheckResult = Result<(), TestCaseError>;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random gates interleaved with measurements in random bases.
pub fn random_measured_circuit<R: Rng>(rng: &mut R, n: usize, depth: usize) -> Circuit {
    let mut circuit = Circuit::new(n).unwrap();
    for _ in 0..depth {
        if rng.gen_bool(0.3) {
            let basis = random_basis(rng);
            circuit
                .push_back(Measurement::with_basis(rng.gen_range(0..n), basis))
                .unwrap();
        } else {
            circuit.push_back(random_gate(rng, n)).unwrap();
        }
    }
    circuit
}

pub fn norm_preservation(seed: u64, n: usize) -> CheckResult {
    let mut r = rng(seed);
    let psi = random_state(&mut r, n);
    let gate = random_gate(&mut r, n);
    let out = apply_gate(&psi, &gate).unwrap();
    prop_assert!((out.norm() - 1.0).abs() <= 1e-12, "{gate:?}");
    Ok(())
}

pub fn branch_probability_sum(seed: u64, n: usize) -> CheckResult {
    let mut r = rng(seed);
    let circuit = random_measured_circuit(&mut r, n, 10);
    let psi = random_state(&mut r, n);
    let res = simulate(&circuit, psi.amplitudes()).unwrap();
    let total: f64 = res.probabilities().iter().sum();
    prop_assert!((total - 1.0).abs() <= 1e-10, "total {total}");
    for b in res.branches() {
        prop_assert!((b.state.norm() - 1.0).abs() <= 1e-10);
    }
    let mut outcomes = res.results();
    let sorted = {
        let mut s = outcomes.clone();
        s.sort_unstable();
        s
    };
    prop_assert_eq!(&outcomes, &sorted);
    outcomes.dedup();
    prop_assert_eq!(outcomes.len(), res.branches().len());
    Ok(())
}

pub fn collapse_idempotence(seed: u64, n: usize) -> CheckResult {
    let mut r = rng(seed);
    let psi = random_state(&mut r, n);
    let q = r.gen_range(0..n);
    let basis = random_basis(&mut r);
    for first in measure(&psi, q, &basis).unwrap() {
        let again = measure(&first.state, q, &basis).unwrap();
        prop_assert_eq!(again.len(), 1);
        prop_assert_eq!(again[0].bit, first.bit);
        prop_assert!((again[0].probability - 1.0).abs() <= 1e-12);
        prop_assert!(max_abs_diff(again[0].state.amplitudes(), first.state.amplitudes()) <= 1e-12);
    }
    Ok(())
}

pub fn counts_determinism(seed: u64, shots: u64) -> CheckResult {
    let mut r = rng(seed);
    let n = r.gen_range(1..=4);
    let mut circuit = random_measured_circuit(&mut r, n, 8);
    circuit.push_back(Measurement::new(0)).unwrap();
    let psi = random_state(&mut r, n);
    let res = simulate(&circuit, psi.amplitudes()).unwrap();
    let sample_seed = r.gen();
    let a = counts(&res, shots, sample_seed).unwrap();
    let b = counts(&res, shots, sample_seed).unwrap();
    prop_assert_eq!(&a, &b);
    prop_assert_eq!(a.values().sum::<u64>(), shots);
    let keys: Vec<&str> = a.keys().map(String::as_str).collect();
    prop_assert_eq!(keys, res.results());
    Ok(())
}

/// Embeds `free` into a larger state with the `known` qubits fixed to
/// `outcome`, then checks that slicing recovers it.
pub fn reduced_state_consistency(seed: u64, n: usize) -> CheckResult {
    let mut r = rng(seed);
    let mut qubits: Vec<usize> = (0..n).collect();
    let nb_known = r.gen_range(1..n);
    let mut known = Vec::new();
    for _ in 0..nb_known {
        known.push(qubits.swap_remove(r.gen_range(0..qubits.len())));
    }
    qubits.sort_unstable();
    let free_qubits = qubits;
    let outcome: String = (0..nb_known)
        .map(|_| if r.gen_bool(0.5) { '1' } else { '0' })
        .collect();
    let free = random_state(&mut r, free_qubits.len());

    let mut full = vec![c(0.0, 0.0); 1 << n];
    for (fi, &amp) in free.amplitudes().iter().enumerate() {
        let mut index = 0usize;
        for (k, &q) in free_qubits.iter().enumerate() {
            let bit = (fi >> (free_qubits.len() - 1 - k)) & 1;
            index |= bit << (n - 1 - q);
        }
        for (k, &q) in known.iter().enumerate() {
            let bit = usize::from(outcome.as_bytes()[k] == b'1');
            index |= bit << (n - 1 - q);
        }
        full[index] = amp;
    }
    let full = StateVector::from_vector(full, n).unwrap();
    let got = reduced_statevector(&full, &known, &outcome).unwrap();
    prop_assert!((fidelity(got.amplitudes(), free.amplitudes()) - 1.0).abs() <= 1e-12);
    prop_assert!(max_abs_diff(got.amplitudes(), free.amplitudes()) <= 1e-12);

    // a different outcome on a product state is an inconsistent slice
    let mut flipped = outcome.into_bytes();
    flipped[0] ^= 1;
    let flipped = String::from_utf8(flipped).unwrap();
    prop_assert!(reduced_statevector(&full, &known, &flipped).is_err());
    Ok(())
}

/// Reduced states of a simulation with terminal Z measurements tensor back
/// into the branch states.
pub fn simulated_reduced_states(seed: u64, n: usize) -> CheckResult {
    let mut r = rng(seed);
    let circuit_gates = random_circuit(&mut r, n, 8);
    let mut circuit = circuit_gates.clone();
    let m = r.gen_range(1..n);
    // measure the leading qubits so that the tensor order is simple
    for q in 0..m {
        circuit.push_back(Measurement::new(q)).unwrap();
    }
    let psi = random_state(&mut r, n);
    let res = simulate(&circuit, psi.amplitudes()).unwrap();
    let reduced = qsim_core::reduced_states(&res).unwrap();
    for (b, red) in res.branches().iter().zip(&reduced) {
        let fixed = StateVector::from_bitstring(&b.outcome, m).unwrap();
        let rebuilt = fixed.tensor(red);
        prop_assert!(max_abs_diff(rebuilt.amplitudes(), b.state.amplitudes()) <= 1e-12);
    }
    Ok(())
}

pub fn basis_round_trip(seed: u64, n: usize) -> CheckResult {
    let mut r = rng(seed);
    let psi = random_state(&mut r, n);
    let q = r.gen_range(0..n);
    let basis = random_basis(&mut r);
    let b = reference_basis_change(&basis);
    let rotated = Gate::single(
        GateKind::Custom(CustomGate::new(from_dense(&b), "B").unwrap()),
        q,
    );
    let turned = oracle_state(&single_gate_circuit(n, rotated), psi.amplitudes());
    let turned = StateVector::from_vector(turned, n).unwrap();
    let want = z_probabilities(&turned, q);
    let mut got = [0.0; 2];
    for o in measure(&psi, q, &basis).unwrap() {
        got[o.bit as usize] = o.probability;
    }
    for bit in 0..2 {
        // outcomes below the prune threshold are absent
        prop_assert!((got[bit] - want[bit]).abs() <= 1e-12, "{got:?} vs {want:?}");
    }
    Ok(())
}

fn single_gate_circuit(n: usize, gate: Gate) -> Circuit {
    let mut c = Circuit::new(n).unwrap();
    c.push_back(gate).unwrap();
    c
}

pub fn block_invariance(seed: u64, n: usize) -> CheckResult {
    let mut r = rng(seed);
    let inner = random_measured_circuit(&mut r, n, 8);
    let mut sub = inner.clone();
    sub.as_block("blk");
    let mut wrapped = Circuit::new(n).unwrap();
    wrapped.push_back_block(sub, 0).unwrap();
    let psi = random_state(&mut r, n);
    let a = simulate(&inner, psi.amplitudes()).unwrap();
    let b = simulate(&wrapped, psi.amplitudes()).unwrap();
    prop_assert_eq!(a.results(), b.results());
    for (x, y) in a.branches().iter().zip(b.branches()) {
        prop_assert!((x.probability - y.probability).abs() <= 1e-12);
        prop_assert!(max_abs_diff(x.state.amplitudes(), y.state.amplitudes()) <= 1e-12);
    }
    Ok(())
}

pub fn qasm_round_trip(seed: u64, n: usize) -> CheckResult {
    let mut r = rng(seed);
    let circuit = random_exportable_circuit(&mut r, n, 12);
    for dialect in [QasmDialect::Compact, QasmDialect::Strict] {
        let text = to_qasm(&circuit, dialect).unwrap();
        let back = parse_qasm(&text).unwrap();
        prop_assert_eq!(&back, &circuit, "{}", text);
    }
    let back = parse_qasm(&to_qasm(&circuit, QasmDialect::Compact).unwrap()).unwrap();
    let psi = random_state(&mut r, n);
    let a = simulate(&circuit, psi.amplitudes()).unwrap();
    let b = simulate(&back, psi.amplitudes()).unwrap();
    prop_assert_eq!(a.results(), b.results());
    for (x, y) in a.branches().iter().zip(b.branches()) {
        prop_assert!((x.probability - y.probability).abs() <= 1e-12);
        prop_assert!(max_abs_diff(x.state.amplitudes(), y.state.amplitudes()) <= 1e-12);
    }
    Ok(())
}

pub fn draw_width(seed: u64, n: usize) -> CheckResult {
    let mut r = rng(seed);
    let mut circuit = random_measured_circuit(&mut r, n, 10);
    if n >= 2 {
        let mut sub = random_circuit(&mut r, 2, 3);
        sub.as_block("sub");
        circuit.push_back_block(sub, r.gen_range(0..n - 1)).unwrap();
    }
    let text = draw_ascii(&circuit);
    let widths: Vec<usize> = text.lines().map(|l| l.chars().count()).collect();
    prop_assert_eq!(widths.len(), 3 * n);
    prop_assert!(widths.iter().all(|&w| w == widths[0]), "{}", text);
    Ok(())
}
