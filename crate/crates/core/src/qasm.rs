//! OpenQASM 2 export and import for the supported gate subset.
//!
//! Export covers `h x y z s sdg t tdg rx ry rz cx cz ccx` and computational
//! basis measurements. Blocks are inlined at their offsets. The parser reads
//! the same subset back, ignoring the `OPENQASM` and `include` headers and
//! accepting simple arithmetic on `pi` in gate arguments.

use crate::circuit::{Circuit, Gate, Instruction, Measurement};
use crate::error::{Error, ParseError, Result};
use crate::gate::{ControlSpec, GateKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QasmDialect {
    /// `qreg` declaration followed by bare `measure q[i];` statements.
    #[default]
    Compact,
    /// Valid OpenQASM 2.0: version header, include, `creg c[n]` and
    /// `measure q[i] -> c[i];`.
    Strict,
}

/// Serializes `circuit`. Fails with [`Error::UnsupportedExport`] naming the
/// index (after block inlining) of the first instruction QASM 2 cannot express.
pub fn to_qasm(circuit: &Circuit, dialect: QasmDialect) -> Result<String> {
    let n = circuit.nb_qubits();
    let mut lines = Vec::new();
    if dialect == QasmDialect::Strict {
        lines.push("OPENQASM 2.0;".to_string());
        lines.push("include \"qelib1.inc\";".to_string());
    }
    lines.push(format!("qreg q[{n}];"));
    if dialect == QasmDialect::Strict {
        lines.push(format!("creg c[{n}];"));
    }
    for (index, instr) in circuit.flattened().instructions().iter().enumerate() {
        let unsupported = |reason: &str| Error::UnsupportedExport {
            index,
            reason: reason.to_string(),
        };
        match instr {
            Instruction::Gate(g) => lines.push(gate_statement(g).map_err(|r| unsupported(&r))?),
            Instruction::Measurement(m) => {
                if !m.basis.is_z() {
                    return Err(unsupported(&format!(
                        "measurement in the {} basis has no QASM form",
                        m.basis
                    )));
                }
                lines.push(match dialect {
                    QasmDialect::Compact => format!("measure q[{}];", m.qubit),
                    QasmDialect::Strict => format!("measure q[{0}] -> c[{0}];", m.qubit),
                });
            }
            Instruction::Block(_) => unreachable!("blocks are inlined"),
        }
    }
    Ok(lines.join("\n"))
}

fn gate_statement(g: &Gate) -> std::result::Result<String, String> {
    if g.controls.iter().any(|c| c.state == 0) {
        return Err("control on |0> has no QASM form".into());
    }
    let name = match (&g.kind, g.controls.len()) {
        (GateKind::Custom(c), _) => return Err(format!("custom gate '{}'", c.label())),
        (GateKind::X, 1) => "cx".to_string(),
        (GateKind::Z, 1) => "cz".to_string(),
        (GateKind::X, 2) => "ccx".to_string(),
        (kind, 0) => match kind {
            GateKind::H => "h".into(),
            GateKind::X => "x".into(),
            GateKind::Y => "y".into(),
            GateKind::Z => "z".into(),
            GateKind::S => "s".into(),
            GateKind::Sdg => "sdg".into(),
            GateKind::T => "t".into(),
            GateKind::Tdg => "tdg".into(),
            GateKind::Rx(t) => format!("rx({t})"),
            GateKind::Ry(t) => format!("ry({t})"),
            GateKind::Rz(t) => format!("rz({t})"),
            GateKind::Custom(_) => unreachable!(),
        },
        (kind, k) => {
            return Err(format!(
                "{} with {k} control(s) has no QASM form",
                kind.label()
            ))
        }
    };
    let args: Vec<String> = g
        .qubits_in_call_order()
        .map(|q| format!("q[{q}]"))
        .collect();
    Ok(format!("{name} {};", args.join(", ")))
}

impl Gate {
    /// Controls first, then targets; the operand order of QASM statements.
    fn qubits_in_call_order(&self) -> impl Iterator<Item = usize> + '_ {
        self.controls
            .iter()
            .map(|c| c.qubit)
            .chain(self.targets.iter().copied())
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Number(f64),
    Str(String),
    Sym(&'static str),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn perr<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse(ParseError {
        line,
        column,
        message: message.into(),
    }))
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let ch = chars[i];
        let (tl, tc) = (line, col);
        let advance = |i: &mut usize, col: &mut usize, k: usize| {
            *i += k;
            *col += k;
        };
        match ch {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => advance(&mut i, &mut col, 1),
            '/' if chars.get(i + 1) == Some(&'/') => {
                while i < chars.len() && chars[i] != '\n' {
                    advance(&mut i, &mut col, 1);
                }
            }
            '-' if chars.get(i + 1) == Some(&'>') => {
                tokens.push(Token {
                    tok: Tok::Sym("->"),
                    line: tl,
                    column: tc,
                });
                advance(&mut i, &mut col, 2);
            }
            ';' | ',' | '[' | ']' | '(' | ')' | '+' | '-' | '*' | '/' => {
                let sym = match ch {
                    ';' => ";",
                    ',' => ",",
                    '[' => "[",
                    ']' => "]",
                    '(' => "(",
                    ')' => ")",
                    '+' => "+",
                    '-' => "-",
                    '*' => "*",
                    _ => "/",
                };
                tokens.push(Token {
                    tok: Tok::Sym(sym),
                    line: tl,
                    column: tc,
                });
                advance(&mut i, &mut col, 1);
            }
            '"' => {
                let start = i + 1;
                let mut j = start;
                while j < chars.len() && chars[j] != '"' && chars[j] != '\n' {
                    j += 1;
                }
                if chars.get(j) != Some(&'"') {
                    return perr(tl, tc, "unterminated string");
                }
                let s: String = chars[start..j].iter().collect();
                tokens.push(Token {
                    tok: Tok::Str(s),
                    line: tl,
                    column: tc,
                });
                let k = j + 1 - i;
                advance(&mut i, &mut col, k);
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                let s: String = chars[i..j].iter().collect();
                tokens.push(Token {
                    tok: Tok::Ident(s),
                    line: tl,
                    column: tc,
                });
                let k = j - i;
                advance(&mut i, &mut col, k);
            }
            c if c.is_ascii_digit() || c == '.' => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_ascii_digit() || chars[j] == '.') {
                    j += 1;
                }
                if j < chars.len() && (chars[j] == 'e' || chars[j] == 'E') {
                    let mut k = j + 1;
                    if k < chars.len() && (chars[k] == '+' || chars[k] == '-') {
                        k += 1;
                    }
                    if k < chars.len() && chars[k].is_ascii_digit() {
                        while k < chars.len() && chars[k].is_ascii_digit() {
                            k += 1;
                        }
                        j = k;
                    }
                }
                let s: String = chars[i..j].iter().collect();
                let Ok(v) = s.parse::<f64>() else {
                    return perr(tl, tc, format!("malformed number '{s}'"));
                };
                tokens.push(Token {
                    tok: Tok::Number(v),
                    line: tl,
                    column: tc,
                });
                let k = j - i;
                advance(&mut i, &mut col, k);
            }
            other => return perr(tl, tc, format!("unexpected character '{other}'")),
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    eof: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn location(&self) -> (usize, usize) {
        self.peek().map_or(self.eof, |t| (t.line, t.column))
    }

    fn next(&mut self) -> Result<Token> {
        match self.tokens.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t.clone())
            }
            None => perr(self.eof.0, self.eof.1, "unexpected end of input"),
        }
    }

    fn eat(&mut self, sym: &str) -> bool {
        if matches!(self.peek(), Some(Token { tok: Tok::Sym(s), .. }) if *s == sym) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, sym: &str) -> Result<()> {
        let (line, column) = self.location();
        if self.eat(sym) {
            Ok(())
        } else {
            perr(line, column, format!("expected '{sym}'"))
        }
    }

    fn ident(&mut self) -> Result<String> {
        let t = self.next()?;
        match t.tok {
            Tok::Ident(s) => Ok(s),
            _ => perr(t.line, t.column, "expected identifier"),
        }
    }

    fn index(&mut self) -> Result<(usize, Token)> {
        let t = self.next()?;
        match t.tok {
            Tok::Number(v) if v >= 0.0 && v.fract() == 0.0 => Ok((v as usize, t)),
            _ => perr(t.line, t.column, "expected a non-negative integer index"),
        }
    }

    /// `name[index]`, returning the index and the token it came from.
    fn register_arg(&mut self) -> Result<(String, usize, Token)> {
        let name = self.ident()?;
        self.expect("[")?;
        let (idx, tok) = self.index()?;
        self.expect("]")?;
        Ok((name, idx, tok))
    }

    fn expr(&mut self) -> Result<f64> {
        let mut v = self.term()?;
        loop {
            if self.eat("+") {
                v += self.term()?;
            } else if self.eat("-") {
                v -= self.term()?;
            } else {
                return Ok(v);
            }
        }
    }

    fn term(&mut self) -> Result<f64> {
        let mut v = self.factor()?;
        loop {
            if self.eat("*") {
                v *= self.factor()?;
            } else if self.eat("/") {
                v /= self.factor()?;
            } else {
                return Ok(v);
            }
        }
    }

    fn factor(&mut self) -> Result<f64> {
        if self.eat("-") {
            return Ok(-self.factor()?);
        }
        if self.eat("(") {
            let v = self.expr()?;
            self.expect(")")?;
            return Ok(v);
        }
        let t = self.next()?;
        match t.tok {
            Tok::Number(v) => Ok(v),
            Tok::Ident(ref s) if s == "pi" => Ok(std::f64::consts::PI),
            _ => perr(t.line, t.column, "expected a number or 'pi'"),
        }
    }
}

struct Register {
    name: String,
    size: usize,
}

/// Parses the supported QASM subset into a circuit.
pub fn parse_qasm(text: &str) -> Result<Circuit> {
    let tokens = lex(text)?;
    let eof_line = text.lines().count().max(1);
    let eof_col = text.lines().last().map_or(1, |l| l.chars().count() + 1);
    let mut p = Parser {
        tokens,
        pos: 0,
        eof: (eof_line, eof_col),
    };
    let mut qreg: Option<Register> = None;
    let mut circuit: Option<Circuit> = None;

    while let Some(start) = p.peek().cloned() {
        let keyword = p.ident()?;
        match keyword.as_str() {
            "OPENQASM" => {
                p.next()?;
                p.expect(";")?;
            }
            "include" => {
                let t = p.next()?;
                if !matches!(t.tok, Tok::Str(_)) {
                    return perr(t.line, t.column, "expected a quoted file name");
                }
                p.expect(";")?;
            }
            "qreg" => {
                let (name, size, tok) = p.register_arg()?;
                p.expect(";")?;
                if qreg.is_some() {
                    return perr(start.line, start.column, "only one qreg is supported");
                }
                if size == 0 {
                    return perr(tok.line, tok.column, "qreg size must be positive");
                }
                circuit = Some(Circuit::new(size)?);
                qreg = Some(Register { name, size });
            }
            "creg" => {
                p.register_arg()?;
                p.expect(";")?;
            }
            _ => {
                let (Some(reg), Some(circ)) = (qreg.as_ref(), circuit.as_mut()) else {
                    return perr(
                        start.line,
                        start.column,
                        "statement before qreg declaration",
                    );
                };
                let instr = statement(&mut p, &keyword, &start, reg)?;
                if let Err(e) = circ.push_back(instr) {
                    return perr(start.line, start.column, e.to_string());
                }
            }
        }
    }
    match circuit {
        Some(c) => Ok(c),
        None => perr(p.eof.0, p.eof.1, "missing qreg declaration"),
    }
}

fn statement(p: &mut Parser, keyword: &str, start: &Token, reg: &Register) -> Result<Instruction> {
    let qubit = |p: &mut Parser| -> Result<usize> {
        let (name, idx, tok) = p.register_arg()?;
        if name != reg.name {
            return perr(
                tok.line,
                tok.column,
                format!("unknown quantum register '{name}'"),
            );
        }
        if idx >= reg.size {
            return perr(
                tok.line,
                tok.column,
                format!("index {idx} out of range for qreg of size {}", reg.size),
            );
        }
        Ok(idx)
    };

    if keyword == "measure" {
        let q = qubit(p)?;
        if p.eat("->") {
            p.register_arg()?;
        }
        p.expect(";")?;
        return Ok(Measurement::new(q).into());
    }

    let (kind, nb_controls, has_param): (fn(f64) -> GateKind, usize, bool) = match keyword {
        "h" => (|_| GateKind::H, 0, false),
        "x" => (|_| GateKind::X, 0, false),
        "y" => (|_| GateKind::Y, 0, false),
        "z" => (|_| GateKind::Z, 0, false),
        "s" => (|_| GateKind::S, 0, false),
        "sdg" => (|_| GateKind::Sdg, 0, false),
        "t" => (|_| GateKind::T, 0, false),
        "tdg" => (|_| GateKind::Tdg, 0, false),
        "rx" => (GateKind::Rx, 0, true),
        "ry" => (GateKind::Ry, 0, true),
        "rz" => (GateKind::Rz, 0, true),
        "cx" => (|_| GateKind::X, 1, false),
        "cz" => (|_| GateKind::Z, 1, false),
        "ccx" => (|_| GateKind::X, 2, false),
        other => return perr(start.line, start.column, format!("unknown gate '{other}'")),
    };
    let theta = if has_param {
        p.expect("(")?;
        let v = p.expr()?;
        p.expect(")")?;
        v
    } else {
        0.0
    };
    let mut qubits = vec![qubit(p)?];
    while p.eat(",") {
        qubits.push(qubit(p)?);
    }
    p.expect(";")?;
    if qubits.len() != nb_controls + 1 {
        return perr(
            start.line,
            start.column,
            format!(
                "gate '{keyword}' takes {} qubit argument(s), got {}",
                nb_controls + 1,
                qubits.len()
            ),
        );
    }
    let target = qubits.pop().expect("at least one qubit");
    let controls = qubits.into_iter().map(ControlSpec::on).collect();
    Ok(Gate::new(kind(theta), vec![target], controls).into())
}
