//! Circuit documents: the JSON schema and loading from QASM or JSON files.

use std::path::Path;

use num_complex::Complex64;
use qsim_core::{
    parse_qasm, Basis, Circuit, ControlSpec, CustomGate, Gate, GateKind, Instruction, Matrix,
    Measurement,
};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Qasm,
    Json,
}

impl Format {
    pub fn detect(path: &Path) -> Result<Self, CliError> {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("qasm") => Ok(Format::Qasm),
            Some(e) if e.eq_ignore_ascii_case("json") => Ok(Format::Json),
            _ => Err(CliError::Input(format!(
                "cannot infer the format of {}; pass --format qasm|json",
                path.display()
            ))),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircuitDocument {
    pub qubits: usize,
    #[serde(default)]
    pub instructions: Vec<InstructionDoc>,
}

#[derive(Debug)]
pub enum InstructionDoc {
    Gate(GateDoc),
    Measure(MeasureDoc),
    Block(BlockDoc),
}

// Dispatch on the distinguishing key so that errors name the offending field
// instead of "did not match any variant".
impl<'de> Deserialize<'de> for InstructionDoc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let value = serde_json::Value::deserialize(d)?;
        let obj = value
            .as_object()
            .ok_or_else(|| D::Error::custom("instruction must be an object"))?;
        let parsed = if obj.contains_key("gate") {
            serde_json::from_value(value).map(InstructionDoc::Gate)
        } else if obj.contains_key("measure") {
            serde_json::from_value(value).map(InstructionDoc::Measure)
        } else if obj.contains_key("block") {
            serde_json::from_value(value).map(InstructionDoc::Block)
        } else {
            return Err(D::Error::custom(
                "instruction needs one of \"gate\", \"measure\" or \"block\"",
            ));
        };
        parsed.map_err(D::Error::custom)
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GateDoc {
    pub gate: String,
    pub targets: Vec<usize>,
    #[serde(default)]
    pub controls: Vec<ControlDoc>,
    pub theta: Option<f64>,
    /// Row-major `[re, im]` entries of a `unitary` gate.
    pub matrix: Option<Vec<Vec<[f64; 2]>>>,
    pub label: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ControlDoc {
    pub qubit: usize,
    #[serde(default = "one")]
    pub state: u8,
}

fn one() -> u8 {
    1
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasureDoc {
    pub measure: MeasureBody,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasureBody {
    pub qubit: usize,
    #[serde(default)]
    pub basis: BasisDoc,
}

#[derive(Debug, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisDoc {
    #[default]
    Z,
    X,
    Y,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockDoc {
    pub block: BlockBody,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockBody {
    pub circuit: CircuitDocument,
    #[serde(default)]
    pub offset: usize,
    /// When present the block is drawn as a single labelled box.
    pub label: Option<String>,
}

fn input(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

impl GateDoc {
    fn kind(&self) -> Result<GateKind, CliError> {
        let theta = || {
            self.theta
                .ok_or_else(|| input(format!("gate '{}' needs \"theta\"", self.gate)))
        };
        let kind = match self.gate.to_ascii_lowercase().as_str() {
            "h" => GateKind::H,
            "x" | "cx" | "cnot" | "mcx" => GateKind::X,
            "y" => GateKind::Y,
            "z" | "cz" => GateKind::Z,
            "s" => GateKind::S,
            "sdg" => GateKind::Sdg,
            "t" => GateKind::T,
            "tdg" => GateKind::Tdg,
            "rx" => GateKind::Rx(theta()?),
            "ry" => GateKind::Ry(theta()?),
            "rz" => GateKind::Rz(theta()?),
            "unitary" => {
                let rows = self
                    .matrix
                    .as_ref()
                    .ok_or_else(|| input("gate 'unitary' needs \"matrix\""))?;
                let rows: Vec<Vec<Complex64>> = rows
                    .iter()
                    .map(|r| r.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
                    .collect();
                let m = Matrix::from_rows(rows).ok_or_else(|| input("matrix must be square"))?;
                let label = self.label.clone().unwrap_or_else(|| "U".into());
                GateKind::Custom(CustomGate::new(m, label).map_err(|e| input(e.to_string()))?)
            }
            other => return Err(input(format!("unknown gate '{other}'"))),
        };
        let controlled = matches!(self.gate.as_str(), "cx" | "cnot" | "mcx" | "cz");
        if controlled && self.controls.is_empty() {
            return Err(input(format!("gate '{}' needs \"controls\"", self.gate)));
        }
        Ok(kind)
    }
}

impl CircuitDocument {
    pub fn to_circuit(&self) -> Result<Circuit, CliError> {
        let mut c = Circuit::new(self.qubits).map_err(|e| input(e.to_string()))?;
        for (i, doc) in self.instructions.iter().enumerate() {
            let instr = match doc {
                InstructionDoc::Gate(g) => {
                    let controls = g
                        .controls
                        .iter()
                        .map(|c| ControlSpec::new(c.qubit, c.state))
                        .collect();
                    Instruction::Gate(Gate::new(g.kind()?, g.targets.clone(), controls))
                }
                InstructionDoc::Measure(m) => {
                    let basis = match m.measure.basis {
                        BasisDoc::Z => Basis::Z,
                        BasisDoc::X => Basis::X,
                        BasisDoc::Y => Basis::Y,
                    };
                    Instruction::Measurement(Measurement::with_basis(m.measure.qubit, basis))
                }
                InstructionDoc::Block(b) => {
                    let mut sub = b.block.circuit.to_circuit()?;
                    if let Some(label) = &b.block.label {
                        sub.as_block(label.clone());
                    }
                    c.push_back_block(sub, b.block.offset)
                        .map_err(|e| input(format!("instruction {i}: {e}")))?;
                    continue;
                }
            };
            c.push_back(instr)
                .map_err(|e| input(format!("instruction {i}: {e}")))?;
        }
        Ok(c)
    }
}

pub fn parse_json(text: &str) -> Result<Circuit, CliError> {
    let doc: CircuitDocument =
        serde_json::from_str(text).map_err(|e| input(format!("invalid circuit document: {e}")))?;
    doc.to_circuit()
}

pub fn load(path: &Path, format: Option<Format>) -> Result<Circuit, CliError> {
    let format = match format {
        Some(f) => f,
        None => Format::detect(path)?,
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| input(format!("cannot read {}: {e}", path.display())))?;
    match format {
        Format::Qasm => parse_qasm(&text).map_err(|e| input(e.to_string())),
        Format::Json => parse_json(&text),
    }
}

/// Reads an initial state vector stored as a JSON array of `[re, im]` pairs.
pub fn load_vector(path: &Path) -> Result<Vec<Complex64>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| input(format!("cannot read {}: {e}", path.display())))?;
    let pairs: Vec<[f64; 2]> = serde_json::from_str(&text)
        .map_err(|e| input(format!("invalid state vector file: {e}")))?;
    Ok(pairs
        .into_iter()
        .map(|[re, im]| Complex64::new(re, im))
        .collect())
}
