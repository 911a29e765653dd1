//! Density-matrix input files.
//!
//! ```json
//! { "d1": 2, "d2": 2, "matrix": [[0.5, 0], [0, 0], ...] }
//! ```
//!
//! `matrix` holds `(d1 d2)²` entries in row-major order, each a
//! `[real, imaginary]` pair of decimal numbers.

use std::path::Path;

use oew_core::linalg::DensityMatrix;
use oew_core::{ComplexMatrix, C64};
use serde_json::{json, Map, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum StateFileError {
    #[error("cannot read state file")]
    Io(#[from] std::io::Error),
    #[error("state file is not valid JSON")]
    Syntax(#[from] serde_json::Error),
    #[error("field `{field}`: {message}")]
    Field {
        field: &'static str,
        message: String,
    },
    #[error(transparent)]
    Invariant(#[from] oew_core::Error),
}

fn field_error(field: &'static str, message: impl Into<String>) -> StateFileError {
    StateFileError::Field {
        field,
        message: message.into(),
    }
}

fn dimension(obj: &Map<String, Value>, field: &'static str) -> Result<usize, StateFileError> {
    let value = obj
        .get(field)
        .ok_or_else(|| field_error(field, "missing"))?;
    value
        .as_u64()
        .and_then(|d| usize::try_from(d).ok())
        .ok_or_else(|| {
            field_error(
                field,
                format!("expected a nonnegative integer, found {value}"),
            )
        })
}

fn entry(value: &Value, index: usize) -> Result<C64, StateFileError> {
    let pair = value
        .as_array()
        .filter(|pair| pair.len() == 2)
        .ok_or_else(|| {
            field_error(
                "matrix",
                format!("entry {index} must be a two-element array [real, imaginary]"),
            )
        })?;
    let part = |k: usize| {
        pair[k].as_f64().ok_or_else(|| {
            field_error(
                "matrix",
                format!("entry {index} component {k} is not a number"),
            )
        })
    };
    Ok(C64::new(part(0)?, part(1)?))
}

/// Parses and validates a state document.
pub fn parse_state(text: &str) -> Result<DensityMatrix, StateFileError> {
    let doc: Value = serde_json::from_str(text)?;
    let obj = doc
        .as_object()
        .ok_or_else(|| field_error("(root)", "expected an object with fields d1, d2, matrix"))?;
    let d1 = dimension(obj, "d1")?;
    let d2 = dimension(obj, "d2")?;
    let entries = obj
        .get("matrix")
        .ok_or_else(|| field_error("matrix", "missing"))?
        .as_array()
        .ok_or_else(|| field_error("matrix", "expected an array of [real, imaginary] pairs"))?;
    let n = d1 * d2;
    if entries.len() != n * n {
        return Err(field_error(
            "matrix",
            format!(
                "expected {} entries for d1 = {d1}, d2 = {d2}, found {}",
                n * n,
                entries.len()
            ),
        ));
    }
    let values = entries
        .iter()
        .enumerate()
        .map(|(i, v)| entry(v, i))
        .collect::<Result<Vec<_>, _>>()?;
    let matrix = ComplexMatrix::from_row_slice(n, n, &values);
    Ok(DensityMatrix::new(d1, d2, matrix)?)
}

pub fn read_state(path: &Path) -> Result<DensityMatrix, StateFileError> {
    parse_state(&std::fs::read_to_string(path)?)
}

/// Serializes a matrix in the state-file format (row-major).
pub fn to_json(d1: usize, d2: usize, matrix: &ComplexMatrix) -> String {
    let entries: Vec<Value> = (0..matrix.nrows())
        .flat_map(|i| (0..matrix.ncols()).map(move |j| (i, j)))
        .map(|(i, j)| json!([matrix[(i, j)].re, matrix[(i, j)].im]))
        .collect();
    let doc = json!({ "d1": d1, "d2": d2, "matrix": entries });
    let mut text = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
    text.push('\n');
    text
}
