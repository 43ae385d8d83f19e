//! The algebra document format: JSON in, JSON out.
//!
//! ```json
//! {
//!   "field": "Q",                  // or {"gf": 5}
//!   "dim": 4,
//!   "basis": ["a", "b", "c", "d"], // optional, defaults to e1..en
//!   "brackets": [
//!     {"left": "a", "right": "b", "value": {"c": "1"}}
//!   ]
//! }
//! ```
//!
//! `left`/`right` accept labels or zero-based indices, with left before
//! right in basis order and no duplicate pairs. Scalar strings are decimal
//! integers (reduced modulo p over GF(p)) or `a/b` rationals. Parsing a
//! canonical document and serializing it back is the identity.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, LieAlgebra};
use crate::field::{Field, FieldError, FieldSpec, PrimeField, Rationals};
use crate::linalg;

#[derive(Debug, Error)]
pub enum DocError {
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("unknown field description; expected \"Q\" or {{\"gf\": p}}")]
    BadField,
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
    #[error("basis index {got} out of range for dimension {dim}")]
    IndexOutOfRange { got: usize, dim: usize },
    #[error("bracket pair must have left before right in basis order")]
    UnorderedPair,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldDoc {
    Name(String),
    Gf { gf: u32 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LabelOrIndex {
    Index(usize),
    Label(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BracketEntry {
    pub left: LabelOrIndex,
    pub right: LabelOrIndex,
    pub value: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub field: FieldDoc,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketEntry>,
}

/// An algebra over either supported ground field.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyAlgebra {
    Q(LieAlgebra<Rationals>),
    Fp(LieAlgebra<PrimeField>),
}

impl AnyAlgebra {
    pub fn dim(&self) -> usize {
        match self {
            AnyAlgebra::Q(l) => l.dim(),
            AnyAlgebra::Fp(l) => l.dim(),
        }
    }

    pub fn field_spec(&self) -> FieldSpec {
        match self {
            AnyAlgebra::Q(l) => l.field().spec(),
            AnyAlgebra::Fp(l) => l.field().spec(),
        }
    }
}

impl AlgebraDocument {
    pub fn from_json(json: &str) -> Result<Self, DocError> {
        serde_json::from_str(json).map_err(|e| DocError::Json(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serialization is infallible")
    }

    fn field_spec(&self) -> Result<FieldSpec, DocError> {
        match &self.field {
            FieldDoc::Name(s) if s == "Q" || s == "q" => Ok(FieldSpec::Rationals),
            FieldDoc::Gf { gf } => Ok(FieldSpec::PrimeField(*gf)),
            _ => Err(DocError::BadField),
        }
    }

    fn labels(&self) -> Result<Vec<String>, DocError> {
        match &self.basis {
            Some(names) => {
                if names.len() != self.dim {
                    return Err(DocError::Algebra(AlgebraError::BadBasisLabels {
                        dim: self.dim,
                    }));
                }
                Ok(names.clone())
            }
            None => Ok((1..=self.dim).map(|i| format!("e{i}")).collect()),
        }
    }

    fn resolve(&self, labels: &[String], who: &LabelOrIndex) -> Result<usize, DocError> {
        match who {
            LabelOrIndex::Index(i) => {
                if *i >= self.dim {
                    Err(DocError::IndexOutOfRange {
                        got: *i,
                        dim: self.dim,
                    })
                } else {
                    Ok(*i)
                }
            }
            LabelOrIndex::Label(name) => labels
                .iter()
                .position(|l| l == name)
                .or_else(|| name.parse::<usize>().ok().filter(|&i| i < self.dim))
                .ok_or_else(|| DocError::UnknownLabel(name.clone())),
        }
    }

    fn build<F: Field>(&self, field: F) -> Result<LieAlgebra<F>, DocError> {
        let labels = self.labels()?;
        let mut entries = Vec::new();
        for b in &self.brackets {
            let i = self.resolve(&labels, &b.left)?;
            let j = self.resolve(&labels, &b.right)?;
            if i >= j {
                return Err(DocError::UnorderedPair);
            }
            let mut coords = linalg::zero_vector(&field, self.dim);
            for (key, scalar) in &b.value {
                let k = self.resolve(&labels, &LabelOrIndex::Label(key.clone()))?;
                coords[k] = field.parse(scalar)?;
            }
            entries.push(((i, j), coords));
        }
        Ok(LieAlgebra::new(field, self.dim, labels, entries)?)
    }

    /// Validate the document into an algebra over its declared field.
    pub fn to_algebra(&self) -> Result<AnyAlgebra, DocError> {
        match self.field_spec()? {
            FieldSpec::Rationals => Ok(AnyAlgebra::Q(self.build(Rationals)?)),
            FieldSpec::PrimeField(p) => {
                let field = PrimeField::new(p)?;
                Ok(AnyAlgebra::Fp(self.build(field)?))
            }
        }
    }
}

/// Canonical document for an algebra: basis always present, bracket pairs
/// sorted, only nonzero coordinates listed, scalars in canonical form.
pub fn to_document(algebra: &AnyAlgebra) -> AlgebraDocument {
    match algebra {
        AnyAlgebra::Q(l) => typed_document(l, FieldDoc::Name("Q".to_string())),
        AnyAlgebra::Fp(l) => {
            let p = l.field().spec().characteristic();
            typed_document(l, FieldDoc::Gf { gf: p })
        }
    }
}

fn typed_document<F: Field>(l: &LieAlgebra<F>, field_doc: FieldDoc) -> AlgebraDocument {
    let field = l.field();
    let names = l.names();
    let mut brackets = Vec::new();
    for i in 0..l.dim() {
        for j in i + 1..l.dim() {
            let coords = l.bracket_basis(i, j);
            let mut value = BTreeMap::new();
            for (k, c) in coords.iter().enumerate() {
                if !field.is_zero(c) {
                    value.insert(names[k].clone(), field.format(c));
                }
            }
            if !value.is_empty() {
                brackets.push(BracketEntry {
                    left: LabelOrIndex::Label(names[i].clone()),
                    right: LabelOrIndex::Label(names[j].clone()),
                    value,
                });
            }
        }
    }
    AlgebraDocument {
        field: field_doc,
        dim: l.dim(),
        basis: Some(names.to_vec()),
        brackets,
    }
}

/// Parse rows given on a command line as JSON: either one array of scalar
/// strings (a single vector) or an array of such arrays.
pub fn parse_vector_rows(json: &str) -> Result<Vec<Vec<String>>, DocError> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Rows {
        One(Vec<String>),
        Many(Vec<Vec<String>>),
    }
    match serde_json::from_str::<Rows>(json).map_err(|e| DocError::Json(e.to_string()))? {
        Rows::One(v) => Ok(vec![v]),
        Rows::Many(vs) => Ok(vs),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn parse_serialize_roundtrip() {
        let nil = catalog::build("nilp4", PrimeField::new(3).unwrap()).unwrap();
        let doc = to_document(&AnyAlgebra::Fp(nil.clone()));
        let json = doc.to_json();
        let reparsed = AlgebraDocument::from_json(&json).unwrap();
        assert_eq!(doc, reparsed);
        match reparsed.to_algebra().unwrap() {
            AnyAlgebra::Fp(l) => assert!(l.same_table(&nil)),
            _ => panic!("field changed in round trip"),
        }
        // canonical serialization is stable
        assert_eq!(to_document(&reparsed.to_algebra().unwrap()).to_json(), json);
    }

    #[test]
    fn rational_document() {
        let json = r#"{
            "field": "Q",
            "dim": 2,
            "basis": ["x", "y"],
            "brackets": [{"left": "x", "right": "y", "value": {"y": "1/1"}}]
        }"#;
        let doc = AlgebraDocument::from_json(json).unwrap();
        match doc.to_algebra().unwrap() {
            AnyAlgebra::Q(l) => {
                assert!(l.same_table(&catalog::build("affine2", Rationals).unwrap()))
            }
            _ => panic!("expected a rational algebra"),
        }
    }

    #[test]
    fn indices_and_default_basis() {
        let json = r#"{"field": {"gf": 2}, "dim": 3, "brackets": [
            {"left": 0, "right": 1, "value": {"e3": "1"}}
        ]}"#;
        let doc = AlgebraDocument::from_json(json).unwrap();
        match doc.to_algebra().unwrap() {
            AnyAlgebra::Fp(l) => {
                assert_eq!(l.names(), &["e1", "e2", "e3"]);
                assert_eq!(l.bracket_basis(0, 1), vec![0, 0, 1]);
            }
            _ => panic!("expected a finite-field algebra"),
        }
    }

    #[test]
    fn document_errors() {
        let bad_pair = r#"{"field": "Q", "dim": 2, "brackets": [
            {"left": 1, "right": 0, "value": {}}
        ]}"#;
        assert!(matches!(
            AlgebraDocument::from_json(bad_pair).unwrap().to_algebra(),
            Err(DocError::UnorderedPair)
        ));
        let dup = r#"{"field": "Q", "dim": 2, "basis": ["x", "y"], "brackets": [
            {"left": "x", "right": "y", "value": {"y": "1"}},
            {"left": 0, "right": 1, "value": {"x": "1"}}
        ]}"#;
        assert!(matches!(
            AlgebraDocument::from_json(dup).unwrap().to_algebra(),
            Err(DocError::Algebra(AlgebraError::DuplicatePair { .. }))
        ));
        let bad_field = r#"{"field": "R", "dim": 1}"#;
        assert!(matches!(
            AlgebraDocument::from_json(bad_field).unwrap().to_algebra(),
            Err(DocError::BadField)
        ));
        let bad_prime = r#"{"field": {"gf": 6}, "dim": 1}"#;
        assert!(AlgebraDocument::from_json(bad_prime)
            .unwrap()
            .to_algebra()
            .is_err());
    }

    #[test]
    fn vector_rows_parsing() {
        assert_eq!(
            parse_vector_rows(r#"["1", "0"]"#).unwrap(),
            vec![vec!["1".to_string(), "0".to_string()]]
        );
        assert_eq!(parse_vector_rows(r#"[["1","0"],["0","1"]]"#).unwrap().len(), 2);
        assert!(parse_vector_rows("nonsense").is_err());
    }
}
