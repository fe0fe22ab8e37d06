//! Input documents: states and CV covariances as JSON.

use serde::{Deserialize, Serialize};
use symcov::collective::CollectiveState;
use symcov::cv::{CvCovariance, Mat2, Mat4};
use symcov::linalg::HermitianMatrix;
use symcov::qstate::{schmidt_pure, separable_symmetric, MixtureSpec, SymmetricParams, TwoQubitDensity};
use symcov::{Mat3, Vec3, C64};

use crate::CliError;

pub const STATE_SCHEMA: &str = "symcov.state/1";
pub const COVARIANCE_SCHEMA: &str = "symcov.covariance/1";

/// A number written as a JSON number, a decimal string or a rational `"a/b"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Num {
    Float(f64),
    Text(String),
}

impl Num {
    pub fn value(&self, at: &str) -> Result<f64, CliError> {
        let bad = || CliError::Input(format!("{at}: cannot read {self:?} as a number"));
        match self {
            Num::Float(x) => Ok(*x),
            Num::Text(s) => {
                let s = s.trim();
                let v = match s.split_once('/') {
                    Some((a, b)) => {
                        let (a, b): (f64, f64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
                        if b == 0.0 {
                            return Err(bad());
                        }
                        a / b
                    }
                    None => s.parse().map_err(|_| bad())?,
                };
                if v.is_finite() {
                    Ok(v)
                } else {
                    Err(bad())
                }
            }
        }
    }
}

fn matrix(at: &str, rows: &[Vec<Num>], dim: usize) -> Result<Vec<Vec<f64>>, CliError> {
    if rows.len() != dim {
        return Err(CliError::Input(format!("{at}: expected {dim} rows, got {}", rows.len())));
    }
    rows.iter()
        .enumerate()
        .map(|(r, row)| {
            if row.len() != dim {
                return Err(CliError::Input(format!("{at}[{r}]: expected {dim} entries, got {}", row.len())));
            }
            row.iter().enumerate().map(|(c, x)| x.value(&format!("{at}[{r}][{c}]"))).collect()
        })
        .collect()
}

fn vector3(at: &str, v: &[Num]) -> Result<Vec3, CliError> {
    if v.len() != 3 {
        return Err(CliError::Input(format!("{at}: expected 3 entries, got {}", v.len())));
    }
    Ok(Vec3::new(
        v[0].value(&format!("{at}[0]"))?,
        v[1].value(&format!("{at}[1]"))?,
        v[2].value(&format!("{at}[2]"))?,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    /// `|↑↑⟩, |↑↓⟩, |↓↑⟩, |↓↓⟩`; requires `qubits = 2`.
    #[default]
    Computational,
    /// `M = N/2, …, −N/2` on the symmetric subspace.
    Dicke,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DensityDoc {
    pub qubits: usize,
    #[serde(default)]
    pub basis: Basis,
    pub re: Vec<Vec<Num>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub im: Option<Vec<Vec<Num>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymmetricDoc {
    pub s: Vec<Num>,
    pub t: Vec<Vec<Num>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstructorDoc {
    pub name: String,
    #[serde(default)]
    pub args: serde_json::Map<String, serde_json::Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub density: Option<DensityDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetric: Option<SymmetricDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constructor: Option<ConstructorDoc>,
}

/// A parsed state: two qubits in the computational basis or a symmetric
/// N-qubit state in the Dicke basis.
#[derive(Debug, Clone)]
pub enum State {
    TwoQubit(TwoQubitDensity),
    Collective(CollectiveState),
}

impl StateDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: StateDocument = serde_json::from_str(text).map_err(|e| CliError::Input(format!("state document: {e}")))?;
        if let Some(schema) = &doc.schema {
            if schema != STATE_SCHEMA {
                return Err(CliError::Input(format!("unsupported schema {schema:?}, expected {STATE_SCHEMA:?}")));
            }
        }
        let present = [doc.density.is_some(), doc.symmetric.is_some(), doc.constructor.is_some()]
            .iter()
            .filter(|&&x| x)
            .count();
        if present != 1 {
            return Err(CliError::Input(format!(
                "exactly one of density, symmetric, constructor must be present (found {present})"
            )));
        }
        Ok(doc)
    }

    pub fn constructor(name: &str, args: serde_json::Value) -> Self {
        let args = match args {
            serde_json::Value::Object(m) => m,
            _ => serde_json::Map::new(),
        };
        StateDocument {
            schema: Some(STATE_SCHEMA.into()),
            density: None,
            symmetric: None,
            constructor: Some(ConstructorDoc { name: name.into(), args }),
        }
    }

    pub fn build(&self) -> Result<State, CliError> {
        if let Some(d) = &self.density {
            return density(d);
        }
        if let Some(s) = &self.symmetric {
            let p = SymmetricParams::new(vector3("symmetric.s", &s.s)?, mat3("symmetric.t", &s.t)?)?;
            return Ok(State::TwoQubit(p.density()?));
        }
        let c = self.constructor.as_ref().expect("validated in parse");
        construct(c)
    }
}

fn mat3(at: &str, rows: &[Vec<Num>]) -> Result<Mat3, CliError> {
    let m = matrix(at, rows, 3)?;
    Ok(Mat3::from_fn(|r, c| m[r][c]))
}

fn density(d: &DensityDoc) -> Result<State, CliError> {
    let dim = match d.basis {
        Basis::Computational if d.qubits == 2 => 4,
        Basis::Computational => {
            return Err(CliError::Input(format!(
                "density.qubits = {}: the computational basis is supported for 2 qubits; use basis \"dicke\"",
                d.qubits
            )))
        }
        Basis::Dicke => d.qubits + 1,
    };
    let re = matrix("density.re", &d.re, dim)?;
    let im = match &d.im {
        Some(rows) => matrix("density.im", rows, dim)?,
        None => vec![vec![0.0; dim]; dim],
    };
    let m = symcov::nalgebra::DMatrix::from_fn(dim, dim, |r, c| C64::new(re[r][c], im[r][c]));
    let h = HermitianMatrix::new(m)?;
    Ok(match d.basis {
        Basis::Computational => State::TwoQubit(TwoQubitDensity::new(h)?),
        Basis::Dicke => State::Collective(CollectiveState::new(d.qubits, h)?),
    })
}

struct Args<'a> {
    name: &'a str,
    map: &'a serde_json::Map<String, serde_json::Value>,
}

impl Args<'_> {
    fn num(&self, key: &str) -> Result<f64, CliError> {
        let v = self
            .map
            .get(key)
            .ok_or_else(|| CliError::Input(format!("constructor {}: missing argument {key:?}", self.name)))?;
        let n: Num = serde_json::from_value(v.clone())
            .map_err(|_| CliError::Input(format!("constructor {}.{key}: not a number", self.name)))?;
        n.value(&format!("constructor {}.{key}", self.name))
    }

    fn num_or(&self, key: &str, default: f64) -> Result<f64, CliError> {
        if self.map.contains_key(key) {
            self.num(key)
        } else {
            Ok(default)
        }
    }

    fn count(&self, key: &str) -> Result<usize, CliError> {
        let x = self.num(key)?;
        if x < 0.0 || x.fract() != 0.0 {
            return Err(CliError::Input(format!("constructor {}.{key}: expected a non-negative integer, got {x}", self.name)));
        }
        Ok(x as usize)
    }
}

#[derive(Deserialize)]
struct MixtureTerm {
    weight: Num,
    s: Vec<Num>,
}

fn construct(c: &ConstructorDoc) -> Result<State, CliError> {
    let a = Args { name: &c.name, map: &c.args };
    Ok(match c.name.as_str() {
        "schmidt" => State::TwoQubit(schmidt_pure(a.num("kappa1")?)?),
        "dicke" => State::Collective(CollectiveState::dicke(a.count("n")?, a.count("k")?)?),
        "ghz" => State::Collective(CollectiveState::ghz(a.count("n")?)?),
        "spin_coherent" => State::Collective(CollectiveState::spin_coherent(
            a.count("n")?,
            a.num_or("theta", 0.0)?,
            a.num_or("phi", 0.0)?,
        )?),
        "one_axis_twisted" => State::Collective(CollectiveState::one_axis_twisted(
            a.count("n")?,
            a.num("chi_t")?,
            a.num_or("theta", std::f64::consts::FRAC_PI_2)?,
            a.num_or("phi", 0.0)?,
        )?),
        "mixture" => {
            let terms: Vec<MixtureTerm> = serde_json::from_value(
                c.args
                    .get("terms")
                    .cloned()
                    .ok_or_else(|| CliError::Input("constructor mixture: missing argument \"terms\"".into()))?,
            )
            .map_err(|e| CliError::Input(format!("constructor mixture.terms: {e}")))?;
            let mut weights = Vec::new();
            let mut vectors = Vec::new();
            for (i, t) in terms.iter().enumerate() {
                weights.push(t.weight.value(&format!("mixture.terms[{i}].weight"))?);
                vectors.push(vector3(&format!("mixture.terms[{i}].s"), &t.s)?);
            }
            State::TwoQubit(separable_symmetric(&MixtureSpec::new(weights, vectors)?))
        }
        other => {
            return Err(CliError::Input(format!(
                "unknown constructor {other:?} (expected schmidt, dicke, ghz, spin_coherent, one_axis_twisted or mixture)"
            )))
        }
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlocksDoc {
    pub a: Vec<Vec<Num>>,
    pub b: Vec<Vec<Num>>,
    pub c: Vec<Vec<Num>>,
}

/// A two-mode covariance: the full 4×4 matrix, its blocks or a constructor
/// (`vacuum`, `two_mode_squeezed` with `r`).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CovarianceDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub schema: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<Vec<Vec<Num>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<BlocksDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constructor: Option<ConstructorDoc>,
}

fn mat2(at: &str, rows: &[Vec<Num>]) -> Result<Mat2, CliError> {
    let m = matrix(at, rows, 2)?;
    Ok(Mat2::new(m[0][0], m[0][1], m[1][0], m[1][1]))
}

impl CovarianceDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: CovarianceDocument =
            serde_json::from_str(text).map_err(|e| CliError::Input(format!("covariance document: {e}")))?;
        if let Some(schema) = &doc.schema {
            if schema != COVARIANCE_SCHEMA {
                return Err(CliError::Input(format!("unsupported schema {schema:?}, expected {COVARIANCE_SCHEMA:?}")));
            }
        }
        let present = [doc.v.is_some(), doc.blocks.is_some(), doc.constructor.is_some()]
            .iter()
            .filter(|&&x| x)
            .count();
        if present != 1 {
            return Err(CliError::Input(format!("exactly one of v, blocks, constructor must be present (found {present})")));
        }
        Ok(doc)
    }

    pub fn build(&self) -> Result<CvCovariance, CliError> {
        if let Some(rows) = &self.v {
            let m = matrix("v", rows, 4)?;
            return Ok(CvCovariance::new(Mat4::from_fn(|r, c| m[r][c]))?);
        }
        if let Some(b) = &self.blocks {
            return Ok(CvCovariance::from_blocks(&mat2("blocks.a", &b.a)?, &mat2("blocks.b", &b.b)?, &mat2("blocks.c", &b.c)?)?);
        }
        let c = self.constructor.as_ref().expect("validated in parse");
        let a = Args { name: &c.name, map: &c.args };
        match c.name.as_str() {
            "vacuum" => Ok(CvCovariance::vacuum()),
            "two_mode_squeezed" => Ok(CvCovariance::two_mode_squeezed(a.num("r")?)),
            other => Err(CliError::Input(format!("unknown covariance constructor {other:?} (expected vacuum or two_mode_squeezed)"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers() {
        assert_eq!(Num::Text("1/4".into()).value("x").unwrap(), 0.25);
        assert_eq!(Num::Text(" -0.5 ".into()).value("x").unwrap(), -0.5);
        assert_eq!(Num::Float(2.0).value("x").unwrap(), 2.0);
        assert!(Num::Text("1/0".into()).value("x").is_err());
        let e = Num::Text("abc".into()).value("density.re[1][2]").unwrap_err();
        assert!(e.to_string().contains("density.re[1][2]"));
    }

    #[test]
    fn exactly_one_representation() {
        assert!(StateDocument::parse("{}").is_err());
        let both = r#"{"symmetric": {"s": [0,0,0], "t": [[1,0,0],[0,-1,0],[0,0,1]]},
                       "constructor": {"name": "ghz", "args": {"n": 3}}}"#;
        assert!(StateDocument::parse(both).is_err());
        assert!(StateDocument::parse(r#"{"schema": "other/1", "constructor": {"name": "ghz", "args": {"n": 3}}}"#).is_err());
    }

    #[test]
    fn entry_diagnostics() {
        let doc = StateDocument::parse(r#"{"density": {"qubits": 2, "re": [[1,0,0,0],[0,0,0,0],[0,0,"x",0],[0,0,0,0]]}}"#).unwrap();
        let e = doc.build().unwrap_err().to_string();
        assert!(e.contains("density.re[2][2]"), "{e}");
        let doc = StateDocument::parse(r#"{"density": {"qubits": 2, "re": [[1,0,0],[0,0,0],[0,0,0]]}}"#).unwrap();
        assert!(doc.build().unwrap_err().to_string().contains("expected 4 rows"));
    }

    #[test]
    fn constructors() {
        let d = StateDocument::constructor("dicke", serde_json::json!({"n": 4, "k": 2}));
        assert!(matches!(d.build().unwrap(), State::Collective(_)));
        let d = StateDocument::constructor("schmidt", serde_json::json!({"kappa1": "3/5"}));
        assert!(matches!(d.build().unwrap(), State::TwoQubit(_)));
        let d = StateDocument::constructor("nope", serde_json::json!({}));
        assert!(d.build().is_err());
        let d = StateDocument::constructor("dicke", serde_json::json!({"n": 4}));
        assert!(d.build().unwrap_err().to_string().contains("missing argument \"k\""));
    }
}
