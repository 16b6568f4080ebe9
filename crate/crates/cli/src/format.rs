//! State files and JSON number formatting.

use std::path::Path;

use majorana::{state_from_roots, RiemannPoint, SymmetricState};
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Dicke,
    Majorana,
}

/// A point entry: `[re, im]` or the token `"inf"`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointEntry {
    Finite([f64; 2]),
    Token(String),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub n: usize,
    pub basis: Basis,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amplitudes: Option<Vec<[f64; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub points: Option<Vec<PointEntry>>,
}

/// A parsed input: the state plus its roots. For Majorana input the roots
/// are the supplied points, not recomputed ones.
pub struct Input {
    pub basis: Basis,
    pub state: SymmetricState,
    pub roots: Vec<RiemannPoint>,
}

impl Input {
    pub fn n(&self) -> usize {
        self.state.n()
    }
}

pub fn read_input(path: &Path) -> Result<Input, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    parse_input(&text)
}

pub fn parse_input(text: &str) -> Result<Input, CliError> {
    let file: StateFile = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    if file.n == 0 {
        return Err(CliError::Parse("n must be positive".into()));
    }
    match (file.basis, file.amplitudes, file.points) {
        (Basis::Dicke, Some(amps), None) => {
            if amps.len() != file.n + 1 {
                return Err(CliError::Parse(format!(
                    "expected {} amplitudes for n = {}, got {}",
                    file.n + 1,
                    file.n,
                    amps.len()
                )));
            }
            let amps: Vec<C64> = amps.iter().map(|&z| complex(z)).collect::<Result<_, _>>()?;
            let state = SymmetricState::from_dicke(file.n, &amps).map_err(|e| CliError::Parse(e.to_string()))?;
            let roots = majorana::roots_of(&state)?;
            Ok(Input {
                basis: Basis::Dicke,
                state,
                roots,
            })
        }
        (Basis::Majorana, None, Some(points)) => {
            if points.len() != file.n {
                return Err(CliError::Parse(format!(
                    "expected {} points for n = {}, got {}",
                    file.n,
                    file.n,
                    points.len()
                )));
            }
            let roots: Vec<RiemannPoint> = points.iter().map(point).collect::<Result<_, _>>()?;
            let state = state_from_roots(&roots).map_err(|e| CliError::Parse(e.to_string()))?;
            Ok(Input {
                basis: Basis::Majorana,
                state,
                roots,
            })
        }
        (Basis::Dicke, _, _) => Err(CliError::Parse("dicke input needs exactly `amplitudes`".into())),
        (Basis::Majorana, _, _) => Err(CliError::Parse("majorana input needs exactly `points`".into())),
    }
}

fn complex([re, im]: [f64; 2]) -> Result<C64, CliError> {
    if !(re.is_finite() && im.is_finite()) {
        return Err(CliError::Parse("non-finite number".into()));
    }
    Ok(C64::new(re, im))
}

fn point(p: &PointEntry) -> Result<RiemannPoint, CliError> {
    match p {
        PointEntry::Finite(z) => Ok(RiemannPoint::finite(complex(*z)?)),
        PointEntry::Token(t) if t == "inf" => Ok(RiemannPoint::INFINITY),
        PointEntry::Token(t) => Err(CliError::Parse(format!("unknown point token `{t}`"))),
    }
}

/// Rounds to 15 significant digits.
pub fn round15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.14e}").parse().expect("formatted float parses")
}

pub fn num(x: f64) -> Value {
    serde_json::Number::from_f64(round15(x)).map_or(Value::Null, Value::Number)
}

pub fn cnum(z: C64) -> Value {
    Value::Array(vec![num(z.re), num(z.im)])
}

pub fn point_value(p: &RiemannPoint) -> Value {
    match p.value() {
        Some(z) => cnum(z),
        None => Value::String("inf".into()),
    }
}

pub fn dicke_file(state: &SymmetricState) -> StateFile {
    StateFile {
        n: state.n(),
        basis: Basis::Dicke,
        amplitudes: Some(state.amplitudes().iter().map(|z| [round15(z.re), round15(z.im)]).collect()),
        points: None,
    }
}

pub fn majorana_file(roots: &[RiemannPoint]) -> StateFile {
    let points = roots
        .iter()
        .map(|p| match p.value() {
            Some(z) => PointEntry::Finite([round15(z.re), round15(z.im)]),
            None => PointEntry::Token("inf".into()),
        })
        .collect();
    StateFile {
        n: roots.len(),
        basis: Basis::Majorana,
        amplitudes: None,
        points: Some(points),
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}
