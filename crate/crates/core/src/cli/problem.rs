//! Problem files: JSON documents naming a modulus (or moduli vector), sets, an optional
//! candidate spectrum and an optional quasiperiodic witness.

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::grid::GridSet;
use crate::group::{direct_sum, CyclicSet, IntegerList};
use crate::search::{QuasiperiodicWitness, Side};
use crate::spectra::SpectrumCandidate;

/// The bundled 900-element example pair, byte for byte as shipped.
pub const PAPER_900: &str = include_str!("../../data/paper-900.json");

/// Name accepted in place of a path to load [`PAPER_900`].
pub const PAPER_900_NAME: &str = "@paper-900";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SetSpec {
    /// Integers modulo a single modulus.
    Residues(Vec<i64>),
    /// Points of Z_{N1} × … × Z_{Nn}.
    Points(Vec<Vec<i64>>),
    /// Summand arrays whose direct sum is the set.
    DirectSum { direct_sum: Vec<Vec<i64>> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GammaSpec {
    SetName(String),
    Values(Vec<i64>),
    Vectors(Vec<Vec<i64>>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WitnessSpec {
    #[serde(default = "default_side")]
    pub side: Side,
    #[serde(rename = "H")]
    pub subgroup: Vec<i64>,
    pub partition: Vec<Vec<i64>>,
}

fn default_side() -> Side {
    Side::B
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    #[serde(default)]
    pub description: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub moduli: Option<Vec<i64>>,
    #[serde(default)]
    pub sets: BTreeMap<String, SetSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<GammaSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessSpec>,
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let p: ProblemFile =
            serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        p.moduli_vector()?;
        Ok(p)
    }

    /// Reads a path, or the bundled data for [`PAPER_900_NAME`].
    pub fn load(path: &str) -> Result<Self, CliError> {
        if path == PAPER_900_NAME {
            return Self::parse(PAPER_900);
        }
        let text = std::fs::read_to_string(Path::new(path))
            .map_err(|e| CliError::Input(format!("{path}: {e}")))?;
        Self::parse(&text).map_err(|e| match e {
            CliError::Parse(msg) => CliError::Parse(format!("{path}: {msg}")),
            other => other,
        })
    }

    pub fn paper_900() -> Self {
        Self::parse(PAPER_900).expect("bundled data parses")
    }

    pub fn moduli_vector(&self) -> Result<Vec<usize>, CliError> {
        let raw = match (&self.modulus, &self.moduli) {
            (Some(m), None) => vec![*m],
            (None, Some(ms)) if !ms.is_empty() => ms.clone(),
            (Some(_), Some(_)) => return Err(invalid("give either modulus or moduli, not both")),
            _ => return Err(invalid("missing modulus")),
        };
        raw.into_iter()
            .map(|m| {
                if m <= 0 {
                    Err(invalid(format!("modulus {m} must be positive")))
                } else {
                    Ok(m as usize)
                }
            })
            .collect()
    }

    pub fn modulus_1d(&self) -> Result<usize, CliError> {
        match self.moduli_vector()?.as_slice() {
            [m] => Ok(*m),
            other => Err(invalid(format!(
                "this command needs a single modulus, found {other:?}"
            ))),
        }
    }

    fn spec(&self, name: &str) -> Result<&SetSpec, CliError> {
        self.sets.get(name).ok_or_else(|| {
            let known: Vec<&str> = self.sets.keys().map(String::as_str).collect();
            invalid(format!("unknown set '{name}' (known: {known:?})"))
        })
    }

    pub fn set_names(&self) -> Vec<String> {
        self.sets.keys().cloned().collect()
    }

    /// A named set modulo the single modulus, with direct sums expanded.
    pub fn cyclic_set(&self, name: &str) -> Result<CyclicSet, CliError> {
        let m = self.modulus_1d()? as i64;
        let ctx = |e: crate::Error| invalid(format!("set '{name}': {e}"));
        match self.spec(name)? {
            SetSpec::Residues(xs) => CyclicSet::new(m, xs.iter().copied()).map_err(ctx),
            SetSpec::Points(_) => Err(invalid(format!(
                "set '{name}' is a list of vectors; a list of integers is required"
            ))),
            SetSpec::DirectSum { direct_sum: parts } => {
                let mut parts = parts.iter();
                let first = parts
                    .next()
                    .ok_or_else(|| invalid(format!("set '{name}': empty direct sum")))?;
                let mut acc = CyclicSet::new(m, first.iter().copied()).map_err(ctx)?;
                for part in parts {
                    let s = CyclicSet::new(m, part.iter().copied()).map_err(ctx)?;
                    acc = direct_sum(&acc, &s).map_err(ctx)?;
                }
                Ok(acc)
            }
        }
    }

    /// A named set as a grid set; one-dimensional sets become one-coordinate points.
    pub fn grid_set(&self, name: &str) -> Result<GridSet, CliError> {
        let moduli = self.moduli_vector()?;
        if moduli.len() == 1 {
            return Ok(GridSet::from(&self.cyclic_set(name)?));
        }
        match self.spec(name)? {
            SetSpec::Points(points) => GridSet::new(moduli, points.clone())
                .map_err(|e| invalid(format!("set '{name}': {e}"))),
            _ => Err(invalid(format!(
                "set '{name}' must be a list of {}-vectors",
                moduli.len()
            ))),
        }
    }

    /// Γ from a set name, or the file's own `gamma` when `name` is `None`.
    pub fn spectrum_candidate(&self, name: Option<&str>) -> Result<SpectrumCandidate, CliError> {
        let moduli = self.moduli_vector()?;
        let spec = match name {
            Some(n) => GammaSpec::SetName(n.to_string()),
            None => self
                .gamma
                .clone()
                .ok_or_else(|| invalid("no gamma in the file and none given"))?,
        };
        let ctx = |e: crate::Error| invalid(format!("gamma: {e}"));
        match spec {
            GammaSpec::SetName(n) => {
                if moduli.len() == 1 {
                    let s = self.cyclic_set(&n)?;
                    SpectrumCandidate::one_dimensional(moduli[0], &s.lifting()).map_err(ctx)
                } else {
                    let g = self.grid_set(&n)?;
                    let gamma = g
                        .points()
                        .iter()
                        .map(|p| p.iter().map(|&c| c as i64).collect())
                        .collect();
                    SpectrumCandidate::new(moduli, gamma).map_err(ctx)
                }
            }
            GammaSpec::Values(values) => {
                if moduli.len() != 1 {
                    return Err(invalid(
                        "gamma must be a list of vectors for several moduli",
                    ));
                }
                let list = IntegerList::new(values).map_err(ctx)?;
                SpectrumCandidate::one_dimensional(moduli[0], &list).map_err(ctx)
            }
            GammaSpec::Vectors(vectors) => SpectrumCandidate::new(moduli, vectors).map_err(ctx),
        }
    }

    pub fn quasiperiodic_witness(&self) -> Result<Option<(Side, QuasiperiodicWitness)>, CliError> {
        let Some(w) = &self.witness else {
            return Ok(None);
        };
        let m = self.modulus_1d()? as i64;
        let ctx = |e: crate::Error| invalid(format!("witness: {e}"));
        let subgroup = CyclicSet::new(m, w.subgroup.iter().copied()).map_err(ctx)?;
        let partition = w
            .partition
            .iter()
            .map(|block| CyclicSet::new(m, block.iter().copied()).map_err(ctx))
            .collect::<Result<_, _>>()?;
        Ok(Some((
            w.side,
            QuasiperiodicWitness {
                subgroup,
                partition,
            },
        )))
    }
}
