use crate::circuit::{Circuit, Gate, Measurement};

/// Phase flip of the marked state `|11⟩`.
pub fn oracle() -> Circuit {
    let mut c = Circuit::new(2).expect("2 qubits");
    c.push_back(Gate::cz(0, 1)).unwrap();
    c
}

/// Reflection about the uniform superposition.
pub fn diffuser() -> Circuit {
    let mut c = Circuit::new(2).expect("2 qubits");
    for g in [
        Gate::h(0),
        Gate::h(1),
        Gate::z(0),
        Gate::z(1),
        Gate::cz(0, 1),
        Gate::h(0),
        Gate::h(1),
    ] {
        c.push_back(g).unwrap();
    }
    c
}

/// One Grover iteration over two qubits followed by measurement of both.
/// Oracle and diffuser are nested as blocks drawn as labeled boxes.
pub fn build_grover2() -> Circuit {
    let mut oracle = oracle();
    oracle.as_block("oracle");
    let mut diffuser = diffuser();
    diffuser.as_block("diffuser");

    let mut gc = Circuit::new(2).expect("2 qubits");
    gc.push_back(Gate::h(0)).unwrap();
    gc.push_back(Gate::h(1)).unwrap();
    gc.push_back_block(oracle, 0).unwrap();
    gc.push_back_block(diffuser, 0).unwrap();
    gc.push_back(Measurement::new(0)).unwrap();
    gc.push_back(Measurement::new(1)).unwrap();
    gc
}
