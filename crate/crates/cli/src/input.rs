//! Job inputs: matrices, Lagrangian lists and representations as JSON.

use std::path::Path;

use maxrep_core::fields::{OrderSpec, RatFunc};
use maxrep_core::linalg::{Lagrangian, Matrix};
use maxrep_core::reps::{pants_representation, FramingTable, GroupPresentation, RepTable, Symmetry};
use maxrep_core::valuations::ValuationSpec;
use maxrep_core::Error;
use serde::Deserialize;
use serde_json::Value as Json;

use crate::CliError;

pub type Rows = Vec<Vec<String>>;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationInput {
    pub generators: Vec<String>,
    #[serde(default)]
    pub relators: Vec<String>,
    #[serde(default)]
    pub peripheral: Vec<String>,
    /// One matrix per generator, as rows of entry strings.
    pub images: Vec<Rows>,
    #[serde(default)]
    pub framing: Option<FramingInput>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FramingInput {
    /// In positive cyclic order.
    pub labels: Vec<String>,
    /// Basis of each Lagrangian, `2n` rows by `n` columns.
    pub images: Vec<Rows>,
    #[serde(default)]
    pub symmetries: Vec<SymmetryInput>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SymmetryInput {
    pub word: String,
    pub action: Vec<(usize, usize)>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatricesInput {
    matrices: Vec<Rows>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixInput {
    matrix: Rows,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct LagrangiansInput {
    lagrangians: Vec<Rows>,
}

/// A parsed job input.
pub enum Input {
    Pants,
    Representation(RepresentationInput),
    Matrices(Vec<Matrix<RatFunc>>),
    Lagrangians(Vec<Lagrangian<RatFunc>>),
}

fn schema(msg: impl Into<String>) -> CliError {
    CliError::Input(Error::Schema(msg.into()))
}

pub fn parse_matrix(rows: &Rows) -> Result<Matrix<RatFunc>, CliError> {
    let entries = rows
        .iter()
        .map(|r| r.iter().map(|e| e.parse::<RatFunc>()).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(CliError::Input)?;
    Matrix::from_rows(entries).map_err(CliError::Input)
}

fn typed<T: for<'de> Deserialize<'de>>(v: Json) -> Result<T, CliError> {
    serde_json::from_value(v).map_err(|e| schema(e.to_string()))
}

/// `pants`, a path to a JSON file, or inline JSON.
pub fn load(source: &str) -> Result<Input, CliError> {
    if source == "pants" {
        return Ok(Input::Pants);
    }
    let text = if source.trim_start().starts_with('{') {
        source.to_string()
    } else {
        std::fs::read_to_string(Path::new(source)).map_err(|e| schema(format!("cannot read `{source}`: {e}")))?
    };
    let json: Json = serde_json::from_str(&text).map_err(|e| schema(format!("invalid JSON: {e}")))?;
    let obj = json.as_object().ok_or_else(|| schema("input must be a JSON object"))?;
    if obj.contains_key("images") {
        Ok(Input::Representation(typed(json)?))
    } else if obj.contains_key("matrix") {
        let m: MatrixInput = typed(json)?;
        Ok(Input::Matrices(vec![parse_matrix(&m.matrix)?]))
    } else if obj.contains_key("matrices") {
        let m: MatricesInput = typed(json)?;
        Ok(Input::Matrices(m.matrices.iter().map(parse_matrix).collect::<Result<_, _>>()?))
    } else if obj.contains_key("lagrangians") {
        let l: LagrangiansInput = typed(json)?;
        let ls = l
            .lagrangians
            .iter()
            .map(|b| Lagrangian::span(&parse_matrix(b)?).map_err(CliError::Input))
            .collect::<Result<_, _>>()?;
        Ok(Input::Lagrangians(ls))
    } else {
        Err(schema("expected one of `images`, `matrix`, `matrices`, `lagrangians`"))
    }
}

impl RepresentationInput {
    pub fn presentation(&self) -> Result<GroupPresentation, CliError> {
        let words = |ws: &[String]| {
            ws.iter()
                .map(|w| maxrep_core::reps::Word::parse(w, &self.generators))
                .collect::<Result<Vec<_>, _>>()
                .map_err(CliError::Input)
        };
        GroupPresentation::new(self.generators.clone(), words(&self.relators)?, words(&self.peripheral)?)
            .map_err(CliError::Input)
    }

    pub fn matrices(&self) -> Result<Vec<Matrix<RatFunc>>, CliError> {
        if self.images.len() != self.generators.len() {
            return Err(schema("need one image per generator"));
        }
        self.images.iter().map(parse_matrix).collect()
    }

    pub fn representation(&self, ord: &OrderSpec, val: &ValuationSpec) -> Result<RepTable<RatFunc>, CliError> {
        RepTable::new(self.presentation()?, self.matrices()?, ord.clone(), val.clone()).map_err(CliError::Input)
    }

    pub fn framing_table(&self) -> Result<Option<FramingTable<RatFunc>>, CliError> {
        let Some(f) = &self.framing else { return Ok(None) };
        let images = f
            .images
            .iter()
            .map(|b| Lagrangian::span(&parse_matrix(b)?).map_err(CliError::Input))
            .collect::<Result<Vec<_>, _>>()?;
        let symmetries = f
            .symmetries
            .iter()
            .map(|s| {
                Ok(Symmetry {
                    word: maxrep_core::reps::Word::parse(&s.word, &self.generators).map_err(CliError::Input)?,
                    action: s.action.clone(),
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        FramingTable::new(f.labels.clone(), images, symmetries)
            .map(Some)
            .map_err(CliError::Input)
    }
}

impl Input {
    pub fn representation(&self, ord: &OrderSpec, val: &ValuationSpec) -> Result<RepTable<RatFunc>, CliError> {
        match self {
            Input::Pants => pants_representation(ord.clone(), val.clone()).map_err(CliError::Input),
            Input::Representation(r) => r.representation(ord, val),
            _ => Err(schema("this command needs a representation")),
        }
    }

    pub fn matrices(&self, count: Option<usize>) -> Result<&[Matrix<RatFunc>], CliError> {
        match self {
            Input::Matrices(ms) => match count {
                Some(k) if ms.len() != k => Err(schema(format!("expected {k} matrices, got {}", ms.len()))),
                _ => Ok(ms),
            },
            _ => Err(schema("this command needs `matrix` or `matrices`")),
        }
    }

    pub fn lagrangians(&self, count: usize) -> Result<&[Lagrangian<RatFunc>], CliError> {
        match self {
            Input::Lagrangians(ls) if ls.len() == count => Ok(ls),
            Input::Lagrangians(ls) => Err(schema(format!("expected {count} Lagrangians, got {}", ls.len()))),
            _ => Err(schema("this command needs `lagrangians`")),
        }
    }
}
