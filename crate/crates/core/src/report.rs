//! Serializable check records shared by the verifiers and the CLI.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{Field, Mat};
use crate::modrep::Module;

/// Which category of the recollement a module lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    A,
    B,
    C,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Side::A => "A",
            Side::B => "B",
            Side::C => "C",
        };
        f.write_str(s)
    }
}

/// Full action data of a module, enough to rebuild it without a seed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleData {
    pub side: Side,
    pub dim: usize,
    /// One `dim x dim` matrix (as rows) per basis element of the algebra.
    pub action: Vec<Vec<Vec<u32>>>,
}

impl ModuleData {
    pub fn capture(side: Side, m: &Module) -> Self {
        ModuleData {
            side,
            dim: m.dim(),
            action: m.actions().iter().map(Mat::to_rows).collect(),
        }
    }

    /// Rebuilds the module over `alg`, re-checking the module axioms.
    pub fn rebuild(&self, alg: Arc<Algebra>) -> Result<Module> {
        if self.action.len() != alg.dim() {
            return Err(Error::input("witness action count does not match the algebra"));
        }
        let action = self
            .action
            .iter()
            .map(|rows| {
                if rows.len() != self.dim {
                    return Err(Error::input("witness action matrix has the wrong size"));
                }
                mat_from_rows(alg.field(), rows, self.dim)
            })
            .collect::<Result<Vec<_>>>()?;
        Module::new(alg, action)
    }
}

pub fn mat_rows(m: &Mat) -> Vec<Vec<u32>> {
    m.to_rows()
}

/// Rebuilds a matrix from rows; `cols` is needed for matrices without rows.
pub fn mat_from_rows(field: Field, rows: &[Vec<u32>], cols: usize) -> Result<Mat> {
    let p = field.modulus();
    let mut data = Vec::with_capacity(rows.len() * cols);
    for r in rows {
        if r.len() != cols {
            return Err(Error::input("ragged matrix in witness"));
        }
        if r.iter().any(|&x| x >= p) {
            return Err(Error::input("matrix entry out of range"));
        }
        data.extend_from_slice(r);
    }
    Ok(Mat::from_vec(field, rows.len(), cols, data))
}

/// A concrete failing case: the atomic check, its module arguments and any
/// morphisms it was run on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub check: String,
    pub modules: Vec<ModuleData>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub morphisms: Vec<Vec<Vec<u32>>>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub mode: String,
    pub scope: String,
    /// Number of cases actually run (precondition-filtered cases excluded).
    pub samples: usize,
    #[serde(default)]
    pub skipped: usize,
    pub pass: bool,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NoChecks,
}

impl Verdict {
    pub fn of(records: &[CheckRecord]) -> Self {
        if records.is_empty() {
            Verdict::NoChecks
        } else if records.iter().all(|r| r.pass) {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NoChecks => "no-checks",
        }
    }
}
