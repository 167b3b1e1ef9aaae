//! On-disk matrix representation: a small JSON schema holding either a dense
//! complex matrix or the compact multilevel Toeplitz coefficient form.
//!
//! Complex values are `[re, im]` pairs; serde_json prints floats in their
//! shortest round-trip form, so parse(serialize(x)) == x bit for bit.

use mltoeplitz::{ComplexMatrix, LevelDims, MultilevelToeplitz};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fs;
use std::io::Write;
use std::path::Path;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoeffRecord {
    /// Offset vector, outermost level first.
    pub offset: Vec<i64>,
    pub value: [f64; 2],
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MatrixFile {
    Dense {
        rows: usize,
        cols: usize,
        /// Row-major `[re, im]` entries.
        data: Vec<[f64; 2]>,
    },
    Mltoeplitz {
        /// Level dimensions, innermost first.
        dims: Vec<usize>,
        /// Exactly one record per storable offset.
        coeffs: Vec<CoeffRecord>,
    },
}

impl MatrixFile {
    pub fn from_dense(matrix: &ComplexMatrix) -> Self {
        MatrixFile::Dense {
            rows: matrix.rows(),
            cols: matrix.cols(),
            data: matrix.data().iter().map(|z| [z.re, z.im]).collect(),
        }
    }

    pub fn from_toeplitz(t: &MultilevelToeplitz) -> Self {
        MatrixFile::Mltoeplitz {
            dims: t.shape().dims().to_vec(),
            coeffs: t
                .iter()
                .map(|(offset, value)| CoeffRecord {
                    offset,
                    value: [value.re, value.im],
                })
                .collect(),
        }
    }

    /// The dense payload, or a description of why the file is not one.
    pub fn into_dense(self) -> Result<ComplexMatrix, String> {
        match self {
            MatrixFile::Dense { rows, cols, data } => {
                let values = data
                    .iter()
                    .map(|&[re, im]| Complex64::new(re, im))
                    .collect();
                ComplexMatrix::new(rows, cols, values).map_err(|e| e.to_string())
            }
            MatrixFile::Mltoeplitz { .. } => {
                Err("expected a dense matrix file, found kind \"mltoeplitz\"".into())
            }
        }
    }

    /// The compact Toeplitz payload, validated: correct record count, every
    /// offset in range, no duplicates.
    pub fn into_toeplitz(self) -> Result<MultilevelToeplitz, String> {
        let MatrixFile::Mltoeplitz { dims, coeffs } = self else {
            return Err("expected a multilevel Toeplitz file, found kind \"dense\"".into());
        };
        let shape = LevelDims::new(dims).map_err(|e| e.to_string())?;
        let count = shape.coeff_count();
        if coeffs.len() != count {
            return Err(format!(
                "expected {count} coefficient records for dims {:?}, found {}",
                shape.dims(),
                coeffs.len()
            ));
        }
        let mut values = vec![None; count];
        for record in &coeffs {
            if !shape.offset_in_range(&record.offset) {
                return Err(format!(
                    "offset {:?} is out of range for dims {:?}",
                    record.offset,
                    shape.dims()
                ));
            }
            let index = shape.offset_index(&record.offset);
            if values[index].is_some() {
                return Err(format!("duplicate coefficient at offset {:?}", record.offset));
            }
            values[index] = Some(Complex64::new(record.value[0], record.value[1]));
        }
        let coeffs = values
            .into_iter()
            .map(|v| v.expect("count and uniqueness checked above"))
            .collect();
        MultilevelToeplitz::new(shape, coeffs).map_err(|e| e.to_string())
    }
}

/// Serializes to pretty JSON, newline-terminated.
pub fn write_file(path: &Path, file: &MatrixFile) -> std::io::Result<()> {
    let body = serde_json::to_string_pretty(file).expect("matrix files always serialize");
    let mut out = fs::File::create(path)?;
    out.write_all(body.as_bytes())?;
    out.write_all(b"\n")
}

/// Reads and parses a matrix file; the two error cases stay distinguishable
/// (I/O vs malformed content) for exit-code mapping.
pub fn read_file(path: &Path) -> Result<MatrixFile, ReadError> {
    let body = fs::read_to_string(path).map_err(ReadError::Io)?;
    serde_json::from_str(&body).map_err(|e| ReadError::Malformed(e.to_string()))
}

#[derive(Debug)]
pub enum ReadError {
    Io(std::io::Error),
    Malformed(String),
}
