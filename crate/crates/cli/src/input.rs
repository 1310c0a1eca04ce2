use std::path::Path;

use lieembed::liecore::{AlgebraJson, LieAlgebra, Subspace};
use lieembed::vecfield::{self, structure_constants, FieldSet, FieldSetJson};
use serde_json::Value;

use crate::error::{CliError, Result};

fn read_json(path: &Path) -> Result<Value> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(shown.clone(), e.to_string()))?;
    serde_json::from_str(&text).map_err(|e| CliError::Json(shown, e.to_string()))
}

fn decode<T: serde::de::DeserializeOwned>(v: Value, path: &Path) -> Result<T> {
    serde_json::from_value(v).map_err(|e| CliError::Json(path.display().to_string(), e.to_string()))
}

/// An algebra from a catalog name or a JSON file holding either structure
/// constants (`brackets`) or vector fields (`fields`).
pub fn load_algebra(input: &str) -> Result<LieAlgebra> {
    let path = Path::new(input);
    if !path.is_file() {
        return Ok(vecfield::algebra(input)?);
    }
    let v = read_json(path)?;
    if v.get("fields").is_some() {
        let set: FieldSetJson = decode(v, path)?;
        return Ok(structure_constants(&FieldSet::from_json(&set)?)?);
    }
    let j: AlgebraJson = decode(v, path)?;
    Ok(LieAlgebra::from_json(&j)?)
}

/// Vector fields from a catalog name or a JSON file.
pub fn load_fields(input: &str) -> Result<FieldSet> {
    let path = Path::new(input);
    if !path.is_file() {
        return Ok(vecfield::vector_fields(input)?);
    }
    let set: FieldSetJson = decode(read_json(path)?, path)?;
    Ok(FieldSet::from_json(&set)?)
}

/// Comma separated linear combinations of basis names; blank means zero.
pub fn parse_subspace(l: &LieAlgebra, spec: &str) -> Result<Subspace> {
    if spec.trim().is_empty() {
        return Ok(Subspace::zero(l.dim()));
    }
    Ok(Subspace::span(l.dim(), &l.parse_elements(spec)?))
}

pub fn read_corpus_value(path: &Path) -> Result<Value> {
    read_json(path)
}
