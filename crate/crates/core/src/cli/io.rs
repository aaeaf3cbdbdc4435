//! Matrix files: JSON (`{"n": n, "rows": [[[re, im], ...], ...]}`) and
//! Matrix Market (coordinate or array; real or complex; general, symmetric
//! or hermitian).

use std::path::Path;

use nalgebra::DMatrix;
use nalgebra_sparse::io::{load_coo_from_matrix_market_str, MatrixMarketError};
use nalgebra_sparse::CooMatrix;
use serde::{Deserialize, Serialize};

use crate::hermpair::C64;

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {message}")]
    Parse { path: String, message: String },
}

/// One matrix entry in JSON: `[re, im]` or a bare real number.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonEntry {
    Complex([f64; 2]),
    Real(f64),
}

impl From<JsonEntry> for C64 {
    fn from(e: JsonEntry) -> Self {
        match e {
            JsonEntry::Complex([re, im]) => C64::new(re, im),
            JsonEntry::Real(re) => C64::new(re, 0.0),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JsonMatrix {
    pub n: usize,
    pub rows: Vec<Vec<JsonEntry>>,
}

impl JsonMatrix {
    pub fn from_matrix(m: &DMatrix<C64>) -> Self {
        let rows = (0..m.nrows()).map(|i| (0..m.ncols()).map(|j| JsonEntry::Complex([m[(i, j)].re, m[(i, j)].im])).collect()).collect();
        Self { n: m.nrows(), rows }
    }

    pub fn to_matrix(&self) -> Result<DMatrix<C64>, String> {
        if self.rows.len() != self.n || self.rows.iter().any(|r| r.len() != self.n) {
            return Err(format!("\"rows\" must be {0} rows of {0} entries", self.n));
        }
        if self.n == 0 {
            return Err("matrix is empty".into());
        }
        Ok(DMatrix::from_fn(self.n, self.n, |i, j| self.rows[i][j].into()))
    }
}

/// How a Matrix Market file was stored; `general` files get symmetrized later.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Storage {
    Json,
    General,
    Symmetric,
}

pub struct LoadedMatrix {
    pub matrix: DMatrix<C64>,
    pub storage: Storage,
}

pub fn parse_json_matrix(text: &str) -> Result<DMatrix<C64>, String> {
    let m: JsonMatrix = serde_json::from_str(text).map_err(|e| e.to_string())?;
    m.to_matrix()
}

fn coo_to_dense<T: Copy>(coo: &CooMatrix<T>, conv: impl Fn(T) -> C64) -> DMatrix<C64> {
    let mut m = DMatrix::zeros(coo.nrows(), coo.ncols());
    for (i, j, v) in coo.triplet_iter() {
        m[(i, j)] += conv(*v);
    }
    m
}

fn mm_error(e: MatrixMarketError) -> String {
    format!("{:?}: {}", e.kind(), e.message())
}

pub fn parse_matrix_market(text: &str) -> Result<LoadedMatrix, String> {
    let header = text.lines().next().unwrap_or_default().to_ascii_lowercase();
    let words: Vec<&str> = header.split_whitespace().collect();
    if words.len() != 5 || words[0] != "%%matrixmarket" || words[1] != "matrix" {
        return Err("missing \"%%MatrixMarket matrix <format> <field> <symmetry>\" header".into());
    }
    let storage = if words[4] == "general" { Storage::General } else { Storage::Symmetric };
    let matrix = match words[3] {
        "complex" => coo_to_dense(&load_coo_from_matrix_market_str::<C64>(text).map_err(mm_error)?, |v| v),
        "real" => coo_to_dense(&load_coo_from_matrix_market_str::<f64>(text).map_err(mm_error)?, |v| C64::new(v, 0.0)),
        "integer" => coo_to_dense(&load_coo_from_matrix_market_str::<i64>(text).map_err(mm_error)?, |v| C64::new(v as f64, 0.0)),
        other => return Err(format!("unsupported field \"{other}\"")),
    };
    if matrix.nrows() != matrix.ncols() || matrix.nrows() == 0 {
        return Err(format!("matrix must be square and nonempty, got {}x{}", matrix.nrows(), matrix.ncols()));
    }
    Ok(LoadedMatrix { matrix, storage })
}

/// Reads a matrix file, choosing the format from its first non-blank character.
pub fn read_matrix_file(path: &Path) -> Result<LoadedMatrix, InputError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| InputError::Io { path: shown.clone(), source })?;
    let parsed = if text.trim_start().starts_with('%') {
        parse_matrix_market(&text)
    } else {
        parse_json_matrix(&text).map(|matrix| LoadedMatrix { matrix, storage: Storage::Json })
    };
    parsed.map_err(|message| InputError::Parse { path: shown, message })
}
