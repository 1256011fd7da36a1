//! Text diagrams drawn with Unicode box characters.
//!
//! Each qubit is a band of three lines. Gates and measurements are boxes on
//! the middle line, controls are `●` (on 1) or `○` (on 0), a controlled X
//! target is `⊕`, and `┃` connects the rows of a controlled gate.

use crate::circuit::Circuit;
use crate::gate::Basis;
use crate::layout::{layout, Cell, Column};

const WIRE: char = '━';

fn meter_label(basis: &Basis) -> String {
    match basis {
        Basis::Z => "M".into(),
        Basis::X => "MX".into(),
        Basis::Y => "MY".into(),
        Basis::Custom(_) => "MB".into(),
    }
}

/// Width and connector position of a cell's glyph.
fn extent(cell: &Cell) -> Option<(usize, usize)> {
    let boxed = |label: &str| {
        let w = label.chars().count() + 2;
        (w, (w - 1) / 2)
    };
    match cell {
        Cell::Idle => None,
        Cell::Box { label, .. } | Cell::Multi { label, .. } => Some(boxed(label)),
        Cell::Meter(b) => Some(boxed(&meter_label(b))),
        Cell::Control(_) | Cell::Target => Some((1, 0)),
    }
}

struct Band {
    top: String,
    mid: String,
    bot: String,
}

fn render_cell(col: &Column, row: usize, left: usize, width: usize) -> Band {
    let cell = &col.cells[row];
    let (span_lo, span_hi) = col.span.unwrap_or((usize::MAX, 0));
    let from_above = col.in_span(row) && row > span_lo;
    let to_below = col.in_span(row) && row < span_hi;

    let mut top: Vec<char> = vec![' '; width];
    let mut mid: Vec<char> = vec![WIRE; width];
    let mut bot: Vec<char> = vec![' '; width];

    let place = |line: &mut Vec<char>, start: usize, s: &str| {
        for (i, ch) in s.chars().enumerate() {
            line[start + i] = ch;
        }
    };

    match cell {
        Cell::Idle => {
            if col.in_span(row) {
                top[left] = '┃';
                mid[left] = '╋';
                bot[left] = '┃';
            }
        }
        Cell::Control(_) | Cell::Target => {
            mid[left] = match cell {
                Cell::Control(1) => '●',
                Cell::Control(_) => '○',
                _ => '⊕',
            };
            if from_above {
                top[left] = '┃';
            }
            if to_below {
                bot[left] = '┃';
            }
        }
        Cell::Box { .. } | Cell::Meter(_) | Cell::Multi { .. } => {
            let text = match cell {
                Cell::Meter(b) => meter_label(b),
                Cell::Box { label, .. } | Cell::Multi { label, .. } => label.clone(),
                _ => unreachable!(),
            };
            let inner = text.chars().count();
            let (w, c) = extent(cell).expect("occupied cell");
            let start = left - c;
            let (first, last, show) = match cell {
                Cell::Multi { row, height, .. } => (*row == 0, *row + 1 == *height, *row == 0),
                _ => (true, true, true),
            };
            let bar = "━".repeat(inner);
            let gap = " ".repeat(inner);
            if first {
                place(&mut top, start, &format!("┏{bar}┓"));
                if from_above {
                    top[left] = '┻';
                }
            } else {
                place(&mut top, start, &format!("┃{gap}┃"));
            }
            let body = if show { text } else { gap.clone() };
            place(&mut mid, start, &format!("┃{body}┃"));
            if last {
                place(&mut bot, start, &format!("┗{bar}┛"));
                if to_below {
                    bot[start + c] = '┳';
                }
            } else {
                place(&mut bot, start, &format!("┃{gap}┃"));
            }
            debug_assert!(start + w <= width);
        }
    }
    Band {
        top: top.into_iter().collect(),
        mid: mid.into_iter().collect(),
        bot: bot.into_iter().collect(),
    }
}

/// Renders `circuit` as a text diagram; every line has the same width.
pub fn draw_ascii(circuit: &Circuit) -> String {
    let n = circuit.nb_qubits();
    let labels: Vec<String> = (0..n).map(|q| format!("q{q}: ")).collect();
    let label_width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    let mut bands: Vec<Band> = labels
        .iter()
        .map(|l| Band {
            top: " ".repeat(label_width),
            mid: format!("{l:<label_width$}"),
            bot: " ".repeat(label_width),
        })
        .collect();

    for col in layout(circuit) {
        let mut left = 0;
        let mut right = 0;
        for cell in &col.cells {
            if let Some((w, c)) = extent(cell) {
                left = left.max(c);
                right = right.max(w - 1 - c);
            }
        }
        let width = left + 1 + right;
        for (row, band) in bands.iter_mut().enumerate() {
            let cell = render_cell(&col, row, left, width);
            band.top.push(' ');
            band.top.push_str(&cell.top);
            band.mid.push(WIRE);
            band.mid.push_str(&cell.mid);
            band.bot.push(' ');
            band.bot.push_str(&cell.bot);
        }
    }

    let mut out = String::new();
    for mut band in bands {
        band.top.push(' ');
        band.mid.push(WIRE);
        band.bot.push(' ');
        for line in [band.top, band.mid, band.bot] {
            out.push_str(&line);
            out.push('\n');
        }
    }
    out
}
