//! Circuit container and its instructions.
//!
//! A [`Circuit`] is built by appending instructions in order. Every
//! instruction is validated when it is appended, so a constructed circuit can
//! always be simulated without index errors.

use std::collections::HashSet;

use crate::error::{invalid, Result};
use crate::gate::{Basis, ControlSpec, GateKind};

/// A unitary gate on one or more contiguous target qubits, optionally
/// conditioned on control qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct Gate {
    pub kind: GateKind,
    pub targets: Vec<usize>,
    pub controls: Vec<ControlSpec>,
}

impl Gate {
    pub fn new(kind: GateKind, targets: Vec<usize>, controls: Vec<ControlSpec>) -> Self {
        Self {
            kind,
            targets,
            controls,
        }
    }

    pub fn single(kind: GateKind, target: usize) -> Self {
        Self::new(kind, vec![target], Vec::new())
    }

    pub fn h(q: usize) -> Self {
        Self::single(GateKind::H, q)
    }

    pub fn x(q: usize) -> Self {
        Self::single(GateKind::X, q)
    }

    pub fn y(q: usize) -> Self {
        Self::single(GateKind::Y, q)
    }

    pub fn z(q: usize) -> Self {
        Self::single(GateKind::Z, q)
    }

    pub fn cnot(control: usize, target: usize) -> Self {
        Self::new(GateKind::X, vec![target], vec![ControlSpec::on(control)])
    }

    pub fn cz(control: usize, target: usize) -> Self {
        Self::new(GateKind::Z, vec![target], vec![ControlSpec::on(control)])
    }

    /// Multi-controlled X. `states[i]` is the activating value of
    /// `controls[i]`; control order is preserved.
    pub fn mcx(controls: &[usize], target: usize, states: &[u8]) -> Result<Self> {
        if controls.len() != states.len() {
            return invalid(format!(
                "mcx has {} controls but {} control states",
                controls.len(),
                states.len()
            ));
        }
        let controls = controls
            .iter()
            .zip(states)
            .map(|(&q, &s)| ControlSpec::new(q, s))
            .collect();
        Ok(Self::new(GateKind::X, vec![target], controls))
    }

    /// All qubits touched by the gate.
    pub fn qubits(&self) -> impl Iterator<Item = usize> + '_ {
        self.targets
            .iter()
            .copied()
            .chain(self.controls.iter().map(|c| c.qubit))
    }

    pub fn validate(&self, nb_qubits: usize) -> Result<()> {
        let k = self.kind.nb_targets();
        if self.targets.len() != k {
            return invalid(format!(
                "gate {} expects {k} target(s), got {}",
                self.kind.label(),
                self.targets.len()
            ));
        }
        if self.targets.windows(2).any(|w| w[1] != w[0] + 1) {
            return invalid("multi-qubit gate targets must be contiguous and ascending");
        }
        for c in &self.controls {
            if c.state > 1 {
                return invalid(format!("control state {} is not 0 or 1", c.state));
            }
        }
        let mut seen = HashSet::new();
        for q in self.qubits() {
            if q >= nb_qubits {
                return invalid(format!(
                    "qubit index {q} out of range for {nb_qubits}-qubit circuit"
                ));
            }
            if !seen.insert(q) {
                return invalid(format!("qubit {q} used more than once in one gate"));
            }
        }
        Ok(())
    }

    fn shifted(&self, offset: usize) -> Self {
        Self {
            kind: self.kind.clone(),
            targets: self.targets.iter().map(|t| t + offset).collect(),
            controls: self
                .controls
                .iter()
                .map(|c| ControlSpec::new(c.qubit + offset, c.state))
                .collect(),
        }
    }
}

/// Single-qubit measurement in a given basis.
#[derive(Debug, Clone, PartialEq)]
pub struct Measurement {
    pub qubit: usize,
    pub basis: Basis,
}

impl Measurement {
    /// Computational-basis measurement.
    pub fn new(qubit: usize) -> Self {
        Self {
            qubit,
            basis: Basis::Z,
        }
    }

    pub fn with_basis(qubit: usize, basis: Basis) -> Self {
        Self { qubit, basis }
    }
}

/// A nested circuit whose qubit `k` is the parent's qubit `k + offset`.
#[derive(Debug, Clone, PartialEq)]
pub struct Block {
    pub circuit: Circuit,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Instruction {
    Gate(Gate),
    Measurement(Measurement),
    Block(Block),
}

impl Instruction {
    pub fn validate(&self, nb_qubits: usize) -> Result<()> {
        match self {
            Instruction::Gate(g) => g.validate(nb_qubits),
            Instruction::Measurement(m) => {
                if m.qubit >= nb_qubits {
                    return invalid(format!(
                        "measured qubit {} out of range for {nb_qubits}-qubit circuit",
                        m.qubit
                    ));
                }
                Ok(())
            }
            Instruction::Block(b) => {
                if b.offset + b.circuit.nb_qubits() > nb_qubits {
                    return invalid(format!(
                        "{}-qubit block at offset {} does not fit in {nb_qubits} qubits",
                        b.circuit.nb_qubits(),
                        b.offset
                    ));
                }
                Ok(())
            }
        }
    }
}

impl From<Gate> for Instruction {
    fn from(g: Gate) -> Self {
        Instruction::Gate(g)
    }
}

impl From<Measurement> for Instruction {
    fn from(m: Measurement) -> Self {
        Instruction::Measurement(m)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Circuit {
    nb_qubits: usize,
    instructions: Vec<Instruction>,
    draw_as_block: bool,
    label: String,
}

impl Circuit {
    pub fn new(nb_qubits: usize) -> Result<Self> {
        if nb_qubits == 0 {
            return invalid("a circuit needs at least one qubit");
        }
        Ok(Self {
            nb_qubits,
            instructions: Vec::new(),
            draw_as_block: false,
            label: String::new(),
        })
    }

    pub fn nb_qubits(&self) -> usize {
        self.nb_qubits
    }

    pub fn instructions(&self) -> &[Instruction] {
        &self.instructions
    }

    pub fn len(&self) -> usize {
        self.instructions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.instructions.is_empty()
    }

    /// Appends an instruction after validating it against this circuit.
    pub fn push_back(&mut self, instr: impl Into<Instruction>) -> Result<()> {
        let instr = instr.into();
        instr.validate(self.nb_qubits)?;
        self.instructions.push(instr);
        Ok(())
    }

    /// Appends `sub` as a block acting on qubits `offset..offset + sub.nb_qubits()`.
    pub fn push_back_block(&mut self, sub: Circuit, offset: usize) -> Result<()> {
        self.push_back(Instruction::Block(Block {
            circuit: sub,
            offset,
        }))
    }

    /// Marks the circuit to be drawn as a single labeled box when nested.
    pub fn as_block(&mut self, label: impl Into<String>) {
        self.draw_as_block = true;
        self.label = label.into();
    }

    pub fn un_block(&mut self) {
        self.draw_as_block = false;
        self.label.clear();
    }

    pub fn draw_as_block(&self) -> bool {
        self.draw_as_block
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn has_measurements(&self) -> bool {
        self.instructions.iter().any(|i| match i {
            Instruction::Measurement(_) => true,
            Instruction::Block(b) => b.circuit.has_measurements(),
            Instruction::Gate(_) => false,
        })
    }

    /// Copy of the circuit with every block inlined at its offset.
    pub fn flattened(&self) -> Circuit {
        let mut out = Circuit {
            nb_qubits: self.nb_qubits,
            instructions: Vec::with_capacity(self.instructions.len()),
            draw_as_block: false,
            label: String::new(),
        };
        self.flatten_into(0, &mut out.instructions);
        out
    }

    fn flatten_into(&self, offset: usize, out: &mut Vec<Instruction>) {
        for instr in &self.instructions {
            match instr {
                Instruction::Gate(g) => out.push(Instruction::Gate(g.shifted(offset))),
                Instruction::Measurement(m) => out.push(Instruction::Measurement(Measurement {
                    qubit: m.qubit + offset,
                    basis: m.basis.clone(),
                })),
                Instruction::Block(b) => b.circuit.flatten_into(offset + b.offset, out),
            }
        }
    }
}
