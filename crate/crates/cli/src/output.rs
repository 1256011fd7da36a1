//! Human-readable and JSON renderings of simulation results.

use num_complex::Complex64;
use qsim_core::{DensityMatrix, SimulationResult, StateVector};
use serde_json::{json, Value};

/// Formats `z` as `a + bi` with four decimals, printing values that round to
/// zero without a minus sign.
pub fn complex(z: Complex64) -> String {
    let clean = |x: f64| if x.abs() < 5e-5 { 0.0 } else { x };
    let (re, im) = (clean(z.re), clean(z.im));
    let sign = if im < 0.0 { '-' } else { '+' };
    format!("{re:.4} {sign} {:.4}i", im.abs())
}

pub fn vector(v: &StateVector) -> String {
    v.amplitudes()
        .iter()
        .map(|&z| complex(z))
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn matrix(rho: &DensityMatrix) -> String {
    rho.entries()
        .iter()
        .map(|row| format!("  [{}, {}]\n", complex(row[0]), complex(row[1])))
        .collect()
}

/// Outcome label for display; circuits without measurements have a single
/// unlabelled branch.
pub fn outcome(s: &str) -> &str {
    if s.is_empty() {
        "-"
    } else {
        s
    }
}

pub fn table(result: &SimulationResult, states: bool) -> String {
    let mut out = String::new();
    for (i, b) in result.branches().iter().enumerate() {
        out.push_str(&format!("{} {:.6}\n", outcome(&b.outcome), b.probability));
        if states {
            out.push_str(&format!("  state: {}\n", vector(&b.state)));
            if let Some(Some(r)) = result.reduced_states().get(i) {
                out.push_str(&format!("  reduced: {}\n", vector(r)));
            }
        }
    }
    out
}

fn pairs(v: &StateVector) -> Value {
    Value::Array(v.amplitudes().iter().map(|z| json!([z.re, z.im])).collect())
}

pub fn result_json(result: &SimulationResult) -> Value {
    let measured: Vec<Value> = result
        .measured_qubits()
        .iter()
        .map(|(q, b)| json!({"qubit": q, "basis": b.to_string()}))
        .collect();
    let branches: Vec<Value> = result
        .branches()
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let reduced = match result.reduced_states().get(i) {
                Some(Some(r)) => pairs(r),
                _ => Value::Null,
            };
            json!({
                "outcome": b.outcome,
                "probability": b.probability,
                "state": pairs(&b.state),
                "reduced_state": reduced,
            })
        })
        .collect();
    json!({
        "qubits": result.nb_qubits(),
        "measured": measured,
        "branches": branches,
    })
}
