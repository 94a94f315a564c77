//! Matrix file format: `{"n": <size>, "data": [[re, im], ...]}` with the
//! `n²` entries in row-major order.
//!
//! Floats are written in shortest round-trip decimal form, so a save/load
//! cycle reproduces every entry bit for bit.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{ComplexMatrix, C64};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub n: usize,
    pub data: Vec<[f64; 2]>,
}

impl MatrixFile {
    pub fn from_matrix(m: &ComplexMatrix) -> Result<Self> {
        let n = m.square_dim()?;
        m.ensure_finite()?;
        Ok(Self {
            n,
            data: m.as_slice().iter().map(|z| [z.re, z.im]).collect(),
        })
    }

    pub fn into_matrix(self) -> Result<ComplexMatrix> {
        if self.n == 0 {
            return Err(Error::Parse("n must be positive".into()));
        }
        if self.data.len() != self.n * self.n {
            return Err(Error::Parse(format!(
                "data holds {} entries, expected n² = {}",
                self.data.len(),
                self.n * self.n
            )));
        }
        let data: Vec<C64> = self.data.iter().map(|&[re, im]| C64::new(re, im)).collect();
        let m = ComplexMatrix::from_row_major(self.n, self.n, data)?;
        m.ensure_finite()?;
        Ok(m)
    }
}

pub fn parse_matrix(text: &str) -> Result<ComplexMatrix> {
    let file: MatrixFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    file.into_matrix()
}

pub fn matrix_to_json(m: &ComplexMatrix) -> Result<String> {
    let file = MatrixFile::from_matrix(m)?;
    serde_json::to_string(&file).map_err(|e| Error::Parse(e.to_string()))
}

pub fn load_matrix(path: impl AsRef<Path>) -> Result<ComplexMatrix> {
    parse_matrix(&fs::read_to_string(path)?)
}

pub fn save_matrix(m: &ComplexMatrix, path: impl AsRef<Path>) -> Result<()> {
    let mut text = matrix_to_json(m)?;
    text.push('\n');
    fs::write(path, text)?;
    Ok(())
}
