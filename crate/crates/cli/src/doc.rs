//! Structure files: JSON documents whose tables are written with element
//! labels.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use radx_core::{catalog, AlgebraError, FiniteHemiring, FiniteMonoid, FiniteSemimodule, RawHemiring, RawSemimodule};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Hemiring,
    Semimodule,
    Monoid,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDocument {
    pub kind: Kind,
    pub name: String,
    pub elements: Vec<String>,
    pub zero: String,
    pub add: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mul: Option<Vec<Vec<String>>>,
    /// Rows are scalars, columns are module elements.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hemiring_ref: Option<HemiringRef>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HemiringRef {
    Path(String),
    Inline(Box<StructureDocument>),
}

#[derive(Clone, Debug)]
pub enum Structure {
    Hemiring(FiniteHemiring),
    Semimodule(FiniteSemimodule),
    Monoid(FiniteMonoid),
}

impl Structure {
    pub fn name(&self) -> &str {
        match self {
            Structure::Hemiring(r) => r.name(),
            Structure::Semimodule(m) => m.name(),
            Structure::Monoid(m) => m.name(),
        }
    }

    pub fn kind(&self) -> Kind {
        match self {
            Structure::Hemiring(_) => Kind::Hemiring,
            Structure::Semimodule(_) => Kind::Semimodule,
            Structure::Monoid(_) => Kind::Monoid,
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Structure::Hemiring(r) => r.len(),
            Structure::Semimodule(m) => m.len(),
            Structure::Monoid(m) => m.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn document(&self) -> StructureDocument {
        match self {
            Structure::Hemiring(r) => hemiring_document(r),
            Structure::Semimodule(m) => semimodule_document(m),
            Structure::Monoid(m) => monoid_document(m),
        }
    }
}

fn label_table(labels: &[String], t: &[Vec<usize>]) -> Vec<Vec<String>> {
    t.iter().map(|row| row.iter().map(|&x| labels[x].clone()).collect()).collect()
}

pub fn hemiring_document(r: &FiniteHemiring) -> StructureDocument {
    let labels = r.labels();
    StructureDocument {
        kind: Kind::Hemiring,
        name: r.name().to_string(),
        elements: labels.to_vec(),
        zero: labels[0].clone(),
        add: label_table(labels, &r.add_table()),
        mul: Some(label_table(labels, &r.mul_table())),
        action: None,
        hemiring_ref: None,
    }
}

pub fn semimodule_document(m: &FiniteSemimodule) -> StructureDocument {
    let labels = m.labels();
    StructureDocument {
        kind: Kind::Semimodule,
        name: m.name().to_string(),
        elements: labels.to_vec(),
        zero: labels[0].clone(),
        add: label_table(labels, &m.add_table()),
        mul: None,
        action: Some(label_table(labels, &m.action_table())),
        hemiring_ref: Some(HemiringRef::Inline(Box::new(hemiring_document(m.ring())))),
    }
}

pub fn monoid_document(m: &FiniteMonoid) -> StructureDocument {
    let labels = m.labels();
    StructureDocument {
        kind: Kind::Monoid,
        name: m.name().to_string(),
        elements: labels.to_vec(),
        zero: labels[0].clone(),
        add: label_table(labels, &m.add_table()),
        mul: None,
        action: None,
        hemiring_ref: None,
    }
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::from(AlgebraError::MalformedTables(msg.into()))
}

fn index(labels: &[String], what: &str, label: &str) -> Result<usize, CliError> {
    labels
        .iter()
        .position(|l| l == label)
        .ok_or_else(|| invalid(format!("{what}: unknown element label {label:?}")))
}

fn index_table(labels: &[String], what: &str, t: &[Vec<String>]) -> Result<Vec<Vec<usize>>, CliError> {
    t.iter()
        .map(|row| row.iter().map(|l| index(labels, what, l)).collect())
        .collect()
}

impl StructureDocument {
    /// Resolves labels and validates. `base` anchors relative `hemiring_ref`
    /// paths.
    pub fn resolve(&self, base: Option<&Path>) -> Result<Structure, CliError> {
        let zero = index(&self.elements, "zero", &self.zero)?;
        let add = index_table(&self.elements, "add", &self.add)?;
        match self.kind {
            Kind::Hemiring => {
                let mul = self.mul.as_ref().ok_or_else(|| invalid("hemiring document needs `mul`"))?;
                let raw = RawHemiring {
                    name: self.name.clone(),
                    elements: self.elements.clone(),
                    zero,
                    add,
                    mul: index_table(&self.elements, "mul", mul)?,
                };
                Ok(Structure::Hemiring(FiniteHemiring::validate(raw)?))
            }
            Kind::Monoid => Ok(Structure::Monoid(FiniteMonoid::validate(
                self.name.clone(),
                self.elements.clone(),
                zero,
                add,
            )?)),
            Kind::Semimodule => {
                let ring = match &self.hemiring_ref {
                    None => return Err(invalid("semimodule document needs `hemiring_ref`")),
                    Some(HemiringRef::Inline(doc)) => doc.resolve(base)?,
                    Some(HemiringRef::Path(p)) => {
                        let path = match base {
                            Some(dir) => dir.join(p),
                            None => PathBuf::from(p),
                        };
                        load_file(&path)?
                    }
                };
                let Structure::Hemiring(ring) = ring else {
                    return Err(invalid("`hemiring_ref` must describe a hemiring"));
                };
                let action = self.action.as_ref().ok_or_else(|| invalid("semimodule document needs `action`"))?;
                let action = action
                    .iter()
                    .map(|row| row.iter().map(|l| index(&self.elements, "action", l)).collect())
                    .collect::<Result<Vec<Vec<usize>>, CliError>>()?;
                let raw = RawSemimodule {
                    name: self.name.clone(),
                    elements: self.elements.clone(),
                    zero,
                    add,
                    action,
                };
                Ok(Structure::Semimodule(FiniteSemimodule::validate(Arc::new(ring), raw)?))
            }
        }
    }
}

pub fn load_file(path: &Path) -> Result<Structure, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let doc: StructureDocument =
        serde_json::from_str(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    doc.resolve(path.parent())
}

/// Hemiring names first, then monoid names.
pub fn builtin(name: &str) -> Result<Structure, CliError> {
    if catalog::MONOID_NAMES.contains(&name) {
        return Ok(Structure::Monoid(catalog::monoid(name)?));
    }
    Ok(Structure::Hemiring(catalog::hemiring(name)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtins_round_trip() {
        for name in catalog::HEMIRING_NAMES.iter().chain(catalog::MONOID_NAMES) {
            let s = builtin(name).unwrap();
            let text = serde_json::to_string(&s.document()).unwrap();
            let doc: StructureDocument = serde_json::from_str(&text).unwrap();
            let back = doc.resolve(None).unwrap();
            assert_eq!(back.document(), s.document(), "{name}");
        }
    }

    #[test]
    fn unknown_label_is_rejected() {
        let mut doc = hemiring_document(&catalog::boolean());
        doc.add[1][1] = "2".into();
        assert!(doc.resolve(None).is_err());
    }

    #[test]
    fn semimodule_inline_ring() {
        let b = Arc::new(catalog::boolean());
        let m = FiniteSemimodule::regular(b);
        let doc = semimodule_document(&m);
        let Structure::Semimodule(back) = doc.resolve(None).unwrap() else { panic!() };
        assert_eq!(back.action_table(), m.action_table());
    }
}
