//! LaTeX export using the `qcircuit` package.

use crate::circuit::Circuit;
use crate::gate::Basis;
use crate::layout::{layout, Cell, Column};

fn cell_tex(col: &Column, row: usize) -> String {
    match &col.cells[row] {
        Cell::Idle => "\\qw".into(),
        Cell::Box { tex, .. } => format!("\\gate{{{tex}}}"),
        Cell::Multi {
            tex,
            row: 0,
            height,
            ..
        } => format!("\\multigate{{{}}}{{{tex}}}", height - 1),
        Cell::Multi { tex, .. } => format!("\\ghost{{{tex}}}"),
        Cell::Control(state) => {
            let name = if *state == 1 { "ctrl" } else { "ctrlo" };
            format!("\\{name}{{{}}}", col.control_link(row))
        }
        Cell::Target => "\\targ".into(),
        Cell::Meter(Basis::Z) => "\\meter".into(),
        Cell::Meter(Basis::X) => "\\meterB{X}".into(),
        Cell::Meter(Basis::Y) => "\\meterB{Y}".into(),
        Cell::Meter(Basis::Custom(_)) => "\\meterB{B}".into(),
    }
}

/// qcircuit rows for `circuit`, one line per qubit, without a preamble.
pub fn to_tex(circuit: &Circuit) -> String {
    let cols = layout(circuit);
    let mut out = String::new();
    for row in 0..circuit.nb_qubits() {
        out.push_str(&format!("\\lstick{{q_{{{row}}}}}"));
        for col in &cols {
            out.push_str(" & ");
            out.push_str(&cell_tex(col, row));
        }
        out.push_str(" & \\qw \\\\\n");
    }
    out
}

/// A compilable document wrapping [`to_tex`].
pub fn to_tex_standalone(circuit: &Circuit) -> String {
    format!(
        "\\documentclass[border=2pt]{{standalone}}\n\
         \\usepackage[braket]{{qcircuit}}\n\
         \\begin{{document}}\n\
         \\Qcircuit @C=1em @R=.7em {{\n\
         {}}}\n\
         \\end{{document}}\n",
        to_tex(circuit)
    )
}
