//! The JSON input format.
//!
//! Rationals travel as canonical strings (`"3"`, `"-1/2"`) and unknown fields
//! are rejected.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use dehnscope_core::exactla::{format_rational, int, parse_rational, Rational, RationalMatrix};
use dehnscope_core::lie::{BasisElement, FieldKind, FieldTag, GradedLieAlgebra};
use dehnscope_core::weights::{weights_from_derivations, DerivationAction};

use crate::error::CliError;

pub const SCHEMA: &str = "dehnscope/v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Diagram,
    Derivations,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDoc {
    /// `"arch"` or `"nonarch"`.
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub characteristic: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residue: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDoc {
    pub label: String,
    /// Present exactly in diagram mode.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<String>>,
    pub field: FieldDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketDoc {
    pub a: String,
    pub b: String,
    /// `[label, coefficient]` terms of `[a, b]`.
    pub value: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub schema: String,
    pub name: String,
    pub acting_rank: usize,
    pub mode: Mode,
    pub generators: Vec<GeneratorDoc>,
    #[serde(default)]
    pub brackets: Vec<BracketDoc>,
    /// One matrix per generator of the torus, as rows; column `i` is the
    /// image of generator `i`. Present exactly in derivations mode.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derivations: Option<Vec<Vec<Vec<String>>>>,
}

fn field_err(path: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Field {
        path: path.into(),
        message: message.into(),
    }
}

fn rational(path: &str, s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(|e| field_err(path, e.to_string()))
}

impl FieldDoc {
    pub fn from_tag(tag: &FieldTag) -> Self {
        match tag.kind() {
            FieldKind::Archimedean => Self {
                kind: "arch".into(),
                characteristic: None,
                residue: None,
            },
            FieldKind::NonArchimedean => Self {
                kind: "nonarch".into(),
                characteristic: Some(tag.characteristic()),
                residue: tag.residue_cardinality(),
            },
        }
    }

    pub fn to_tag(&self, path: &str) -> Result<FieldTag, CliError> {
        let kind = match self.kind.as_str() {
            "arch" => FieldKind::Archimedean,
            "nonarch" => FieldKind::NonArchimedean,
            other => return Err(field_err(format!("{path}.kind"), format!("expected arch or nonarch, got {other:?}"))),
        };
        FieldTag::new(kind, self.characteristic.unwrap_or(0), self.residue).map_err(|e| field_err(path, e.to_string()))
    }
}

impl InputDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let doc: InputDocument = serde_json::from_str(text).map_err(|e| CliError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        doc.check_shape()?;
        Ok(doc)
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    fn check_shape(&self) -> Result<(), CliError> {
        if self.schema != SCHEMA {
            return Err(field_err("schema", format!("expected {SCHEMA:?}, got {:?}", self.schema)));
        }
        for (i, g) in self.generators.iter().enumerate() {
            match (self.mode, &g.weight) {
                (Mode::Diagram, None) => return Err(field_err(format!("generators[{i}].weight"), "required in diagram mode")),
                (Mode::Derivations, Some(_)) => {
                    return Err(field_err(format!("generators[{i}].weight"), "not allowed in derivations mode"))
                }
                (Mode::Diagram, Some(w)) if w.len() != self.acting_rank => {
                    return Err(field_err(
                        format!("generators[{i}].weight"),
                        format!("expected {} entries, found {}", self.acting_rank, w.len()),
                    ))
                }
                _ => {}
            }
        }
        match (self.mode, &self.derivations) {
            (Mode::Diagram, Some(_)) => Err(field_err("derivations", "not allowed in diagram mode")),
            (Mode::Derivations, None) => Err(field_err("derivations", "required in derivations mode")),
            (Mode::Derivations, Some(ms)) if ms.len() != self.acting_rank => Err(field_err(
                "derivations",
                format!("expected {} matrices, found {}", self.acting_rank, ms.len()),
            )),
            _ => Ok(()),
        }
    }

    /// Diagram-mode document for `g`.
    pub fn from_algebra(name: &str, g: &GradedLieAlgebra) -> Self {
        let generators = g
            .basis()
            .iter()
            .map(|e| GeneratorDoc {
                label: e.label.clone(),
                weight: Some(e.weight.iter().map(format_rational).collect()),
                field: FieldDoc::from_tag(&e.field),
            })
            .collect();
        let brackets = g
            .structure_constants()
            .iter()
            .map(|(&(i, j), v)| BracketDoc {
                a: g.label(i).to_string(),
                b: g.label(j).to_string(),
                value: v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| **c != int(0))
                    .map(|(k, c)| (g.label(k).to_string(), format_rational(c)))
                    .collect(),
            })
            .collect();
        Self {
            schema: SCHEMA.to_string(),
            name: name.to_string(),
            acting_rank: g.acting_rank(),
            mode: Mode::Diagram,
            generators,
            brackets,
            derivations: None,
        }
    }

    /// Builds the graded algebra, grading it first in derivations mode.
    pub fn to_algebra(&self) -> Result<GradedLieAlgebra, CliError> {
        self.check_shape()?;
        let rank = match self.mode {
            Mode::Diagram => self.acting_rank,
            Mode::Derivations => 0,
        };
        let mut basis = Vec::with_capacity(self.generators.len());
        for (i, g) in self.generators.iter().enumerate() {
            let path = format!("generators[{i}]");
            let weight = match &g.weight {
                Some(w) => w
                    .iter()
                    .enumerate()
                    .map(|(k, s)| rational(&format!("{path}.weight[{k}]"), s))
                    .collect::<Result<Vec<_>, _>>()?,
                None => Vec::new(),
            };
            basis.push(BasisElement::new(g.label.clone(), weight, g.field.to_tag(&format!("{path}.field"))?));
        }
        let index: HashMap<&str, usize> = self
            .generators
            .iter()
            .enumerate()
            .map(|(i, g)| (g.label.as_str(), i))
            .collect();
        let lookup = |path: String, l: &str| {
            index
                .get(l)
                .copied()
                .ok_or_else(|| field_err(path, format!("unknown generator {l:?}")))
        };
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for (i, b) in self.brackets.iter().enumerate() {
            let path = format!("brackets[{i}]");
            let a = lookup(format!("{path}.a"), &b.a)?;
            let bb = lookup(format!("{path}.b"), &b.b)?;
            let mut terms = Vec::with_capacity(b.value.len());
            for (k, (l, c)) in b.value.iter().enumerate() {
                let p = format!("{path}.value[{k}]");
                terms.push((lookup(p.clone(), l)?, rational(&p, c)?));
            }
            brackets.push((a, bb, terms));
        }
        let algebra = GradedLieAlgebra::new(rank, basis, brackets)?;
        match self.mode {
            Mode::Diagram => {
                algebra.ensure_valid()?;
                Ok(algebra)
            }
            Mode::Derivations => {
                let n = self.generators.len();
                let mut matrices = Vec::new();
                for (m, rows) in self.derivations.as_deref().unwrap_or_default().iter().enumerate() {
                    let path = format!("derivations[{m}]");
                    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                        return Err(field_err(path, format!("expected a {n}x{n} matrix")));
                    }
                    let mut entries = Vec::with_capacity(n * n);
                    for (i, r) in rows.iter().enumerate() {
                        for (j, s) in r.iter().enumerate() {
                            entries.push(rational(&format!("{path}[{i}][{j}]"), s)?);
                        }
                    }
                    matrices.push(RationalMatrix::new(n, n, entries)?);
                }
                let (graded, _) = weights_from_derivations(&algebra, &DerivationAction::new(matrices))?;
                Ok(graded)
            }
        }
    }
}
