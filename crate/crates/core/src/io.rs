//! Matrix and spectrum file formats.
//!
//! Matrices travel as JSON `{"n": N, "entries": [row-major floats]}` or as
//! CSV with `N` rows of `N` comma-separated decimals printed to 17
//! significant digits (enough to reproduce each double exactly). Spectrum
//! files carry one comma-separated spectrum per line. All output is UTF-8
//! with LF line endings.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matrix::{DenseSymMatrix, MatrixError};
use crate::spectrum::{Spectrum, SpectrumError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    File {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid matrix JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid matrix: {0}")]
    Matrix(#[from] MatrixError),
    #[error("CSV line {line}: {message}")]
    Csv { line: usize, message: String },
    #[error("spectrum on line {line}: {source}")]
    SpectrumLine {
        line: usize,
        #[source]
        source: SpectrumError,
    },
    #[error("{0} holds no spectra")]
    NoSpectra(String),
}

fn read_to_string(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::File {
        path: path.display().to_string(),
        source,
    })
}

fn write_string(path: &Path, text: &str) -> Result<(), IoError> {
    fs::write(path, text).map_err(|source| IoError::File {
        path: path.display().to_string(),
        source,
    })
}

#[derive(Serialize, Deserialize)]
struct MatrixFile {
    n: usize,
    entries: Vec<f64>,
}

/// Entries in `[-tol, 0)` are rounded up to zero; used when exporting
/// matrices so floating-point dust does not masquerade as infeasibility.
/// Certificates always report the raw values.
pub fn clamp_dust(m: &DenseSymMatrix, tol: f64) -> DenseSymMatrix {
    let entries = m
        .entries()
        .iter()
        .map(|&v| if v < 0.0 && v >= -tol { 0.0 } else { v })
        .collect();
    DenseSymMatrix::from_entries(m.n(), entries).expect("clamping preserves shape")
}

pub fn matrix_to_json(m: &DenseSymMatrix) -> String {
    let file = MatrixFile { n: m.n(), entries: m.entries().to_vec() };
    let mut text = serde_json::to_string(&file).expect("matrix serializes");
    text.push('\n');
    text
}

pub fn matrix_to_csv(m: &DenseSymMatrix) -> String {
    let n = m.n();
    let mut out = String::new();
    for r in 0..n {
        let row: Vec<String> = m.row(r).iter().map(|v| format!("{:.16e}", v)).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn write_matrix_json(path: &Path, m: &DenseSymMatrix) -> Result<(), IoError> {
    write_string(path, &matrix_to_json(m))
}

pub fn write_matrix_csv(path: &Path, m: &DenseSymMatrix) -> Result<(), IoError> {
    write_string(path, &matrix_to_csv(m))
}

pub fn read_matrix_json(path: &Path) -> Result<DenseSymMatrix, IoError> {
    let text = read_to_string(path)?;
    let file: MatrixFile = serde_json::from_str(&text)?;
    Ok(DenseSymMatrix::from_entries(file.n, file.entries)?)
}

pub fn read_matrix_csv(path: &Path) -> Result<DenseSymMatrix, IoError> {
    let text = read_to_string(path)?;
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut row = Vec::new();
        for token in line.split(',') {
            let v: f64 = token.trim().parse().map_err(|_| IoError::Csv {
                line: i + 1,
                message: format!("bad number {:?}", token.trim()),
            })?;
            row.push(v);
        }
        rows.push(row);
    }
    let n = rows.len();
    if n == 0 {
        return Err(IoError::Csv { line: 0, message: "empty file".into() });
    }
    let mut entries = Vec::with_capacity(n * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(IoError::Csv {
                line: i + 1,
                message: format!("expected {} columns, found {}", n, row.len()),
            });
        }
        entries.extend_from_slice(row);
    }
    Ok(DenseSymMatrix::from_entries(n, entries)?)
}

/// Reads a matrix, dispatching on the `.csv` extension (anything else is
/// treated as JSON).
pub fn read_matrix(path: &Path) -> Result<DenseSymMatrix, IoError> {
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
        read_matrix_csv(path)
    } else {
        read_matrix_json(path)
    }
}

/// One comma-separated spectrum per non-empty line.
pub fn read_spectra(path: &Path) -> Result<Vec<Spectrum>, IoError> {
    let text = read_to_string(path)?;
    let mut spectra = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let s = Spectrum::parse(line)
            .map_err(|source| IoError::SpectrumLine { line: i + 1, source })?;
        spectra.push(s);
    }
    if spectra.is_empty() {
        return Err(IoError::NoSpectra(path.display().to_string()));
    }
    Ok(spectra)
}
