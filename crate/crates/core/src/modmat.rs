//! Integer base matrices of the two modular families.

use serde::Serialize;

use crate::error::Result;
use crate::matrix::Matrix;
use crate::order::{require_admissible, MatrixType};

/// The raw modular matrix, entries in `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseMatrix {
    n: usize,
    mtype: MatrixType,
    entries: Matrix<u64>,
}

impl BaseMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mtype(&self) -> MatrixType {
        self.mtype
    }

    pub fn entries(&self) -> &Matrix<u64> {
        &self.entries
    }

    /// 1-based entry lookup.
    pub fn entry(&self, i: usize, j: usize) -> Result<u64> {
        self.entries.entry(i, j)
    }
}

/// Entry at 1-based position `(i, j)`, reduced into `1..=n`.
fn entry_value(n: u64, mtype: MatrixType, i: u64, j: u64) -> u64 {
    match mtype {
        // residues 0..n-1 shifted to 1..n
        MatrixType::TypeI => 1 + ((i - 1) * (j - 1)) % n,
        // n+1 prime and i, j < n+1, so the residue is never 0
        MatrixType::TypeII => (i * j) % (n + 1),
    }
}

pub fn base_matrix(n: usize, mtype: MatrixType) -> Result<BaseMatrix> {
    require_admissible(n, mtype)?;
    let order = n as u64;
    let entries = Matrix::from_fn(n, n, |r, c| {
        entry_value(order, mtype, r as u64 + 1, c as u64 + 1)
    });
    Ok(BaseMatrix { n, mtype, entries })
}

pub fn diagonal(base: &BaseMatrix) -> Vec<u64> {
    base.entries.diagonal()
}

/// Closed-form diagonal: `x² − 2x + 2 (mod n)` for Type I (residue 0
/// written as `n`), `x² (mod n+1)` for Type II, for `x = 1..=n`.
pub fn diagonal_closed_form(n: usize, mtype: MatrixType) -> Vec<u64> {
    let n = n as u64;
    (1..=n)
        .map(|x| match mtype {
            MatrixType::TypeI => {
                // x² − 2x + 2 = (x − 1)² + 1
                let r = ((x - 1) * (x - 1) + 1) % n;
                if r == 0 {
                    n
                } else {
                    r
                }
            }
            MatrixType::TypeII => (x * x) % (n + 1),
        })
        .collect()
}

/// Type I: everything after the first element reads the same reversed.
/// Type II: the whole diagonal is a palindrome.
pub fn diagonal_is_palindromic(diag: &[u64], mtype: MatrixType) -> bool {
    let tail = match mtype {
        MatrixType::TypeI => diag.get(1..).unwrap_or(&[]),
        MatrixType::TypeII => diag,
    };
    tail.iter().eq(tail.iter().rev())
}
