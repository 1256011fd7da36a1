//! Column layout shared by the text and LaTeX renderers.
//!
//! Each instruction gets its own column, except that a run of consecutive
//! uncontrolled single-qubit gates and measurements on distinct qubits
//! shares one. Blocks marked for block drawing occupy a single column; other
//! blocks are expanded in place.

use crate::circuit::{Circuit, Gate, Instruction};
use crate::gate::{Basis, GateKind};

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Cell {
    Idle,
    Box {
        label: String,
        tex: String,
    },
    /// Row `row` of a box spanning `height` consecutive qubits.
    Multi {
        label: String,
        tex: String,
        row: usize,
        height: usize,
    },
    Control(u8),
    /// The ⊕ target of a controlled X.
    Target,
    Meter(Basis),
}

#[derive(Debug, Clone)]
pub(crate) struct Column {
    pub cells: Vec<Cell>,
    /// Rows spanned by the vertical connector of a controlled gate.
    pub span: Option<(usize, usize)>,
    /// First and last target rows, for controlled gates.
    pub targets: Option<(usize, usize)>,
    packable: bool,
}

impl Column {
    fn new(n: usize) -> Self {
        Self {
            cells: vec![Cell::Idle; n],
            span: None,
            targets: None,
            packable: false,
        }
    }

    pub fn in_span(&self, row: usize) -> bool {
        self.span.is_some_and(|(a, b)| a <= row && row <= b)
    }

    /// Row the connector leaving a control at `row` points to: the nearest
    /// occupied row in the direction of the target.
    pub fn control_link(&self, row: usize) -> isize {
        let (first, _) = self.targets.expect("controlled column");
        let occupied = |r: &usize| self.cells[*r] != Cell::Idle;
        let next = if first > row {
            (row + 1..self.cells.len()).find(occupied)
        } else {
            (0..row).rev().find(occupied)
        };
        next.map_or(0, |r| r as isize - row as isize)
    }
}

pub(crate) fn layout(circuit: &Circuit) -> Vec<Column> {
    let mut cols = Vec::new();
    push_columns(circuit, 0, circuit.nb_qubits(), &mut cols);
    cols
}

fn push_columns(circuit: &Circuit, offset: usize, n: usize, cols: &mut Vec<Column>) {
    for instr in circuit.instructions() {
        match instr {
            Instruction::Gate(g) if g.controls.is_empty() && g.targets.len() == 1 => {
                let cell = Cell::Box {
                    label: g.kind.label(),
                    tex: tex_label(&g.kind),
                };
                pack(cols, g.targets[0] + offset, cell, n);
            }
            Instruction::Gate(g) => cols.push(gate_column(g, offset, n)),
            Instruction::Measurement(m) => {
                pack(cols, m.qubit + offset, Cell::Meter(m.basis.clone()), n);
            }
            Instruction::Block(b) if b.circuit.draw_as_block() => {
                let mut c = Column::new(n);
                let height = b.circuit.nb_qubits();
                let label = b.circuit.label().to_string();
                let tex = format!("\\mathrm{{{label}}}");
                for row in 0..height {
                    c.cells[offset + b.offset + row] = Cell::Multi {
                        label: label.clone(),
                        tex: tex.clone(),
                        row,
                        height,
                    };
                }
                cols.push(c);
            }
            Instruction::Block(b) => push_columns(&b.circuit, offset + b.offset, n, cols),
        }
    }
}

/// Places a single-qubit cell in the trailing packable column if its row is
/// free there, otherwise opens a new packable column.
fn pack(cols: &mut Vec<Column>, q: usize, cell: Cell, n: usize) {
    match cols.last_mut() {
        Some(c) if c.packable && c.cells[q] == Cell::Idle => c.cells[q] = cell,
        _ => {
            let mut c = Column::new(n);
            c.cells[q] = cell;
            c.packable = true;
            cols.push(c);
        }
    }
}

fn gate_column(g: &Gate, offset: usize, n: usize) -> Column {
    let mut c = Column::new(n);
    let first = g.targets[0] + offset;
    let last = g.targets[g.targets.len() - 1] + offset;
    if g.targets.len() > 1 {
        let label = g.kind.label();
        for (row, q) in (first..=last).enumerate() {
            c.cells[q] = Cell::Multi {
                label: label.clone(),
                tex: label.clone(),
                row,
                height: g.targets.len(),
            };
        }
    } else if g.kind == GateKind::X && !g.controls.is_empty() {
        c.cells[first] = Cell::Target;
    } else {
        c.cells[first] = Cell::Box {
            label: g.kind.label(),
            tex: tex_label(&g.kind),
        };
    }
    if !g.controls.is_empty() {
        let mut lo = first;
        let mut hi = last;
        for ctl in &g.controls {
            let q = ctl.qubit + offset;
            c.cells[q] = Cell::Control(ctl.state);
            lo = lo.min(q);
            hi = hi.max(q);
        }
        c.span = Some((lo, hi));
        c.targets = Some((first, last));
    }
    c
}

fn tex_label(kind: &GateKind) -> String {
    match kind {
        GateKind::Sdg => "S^\\dagger".into(),
        GateKind::Tdg => "T^\\dagger".into(),
        GateKind::Rx(t) => format!("R_X({t:.4})"),
        GateKind::Ry(t) => format!("R_Y({t:.4})"),
        GateKind::Rz(t) => format!("R_Z({t:.4})"),
        other => other.label(),
    }
}
