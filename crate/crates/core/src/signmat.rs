//! (1,−1) matrices obtained from the base matrices by a parity sign map.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::matrix::Matrix;
use crate::modmat::BaseMatrix;
use crate::order::{admissible_orders, is_admissible_order, MatrixType};

/// How residues are mapped to signs.
///
/// `Standard` is what every design and graph is built from. `Flipped` swaps
/// the parity rule (odd → +1, even → −1); for Type I the entry 1 stays +1
/// under both rules, for Type II `Flipped` is the exact negation of
/// `Standard`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SignConvention {
    #[default]
    Standard,
    Flipped,
}

impl fmt::Display for SignConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignConvention::Standard => "standard",
            SignConvention::Flipped => "flipped",
        })
    }
}

impl FromStr for SignConvention {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "standard" => Ok(SignConvention::Standard),
            "flipped" => Ok(SignConvention::Flipped),
            other => Err(format!("unknown sign convention `{other}`")),
        }
    }
}

/// Sign assigned to one base-matrix value.
pub fn sign_of(value: u64, mtype: MatrixType, convention: SignConvention) -> i8 {
    let even = value.is_multiple_of(2);
    match (convention, mtype) {
        (SignConvention::Standard, MatrixType::TypeI) => {
            if value == 1 || even {
                1
            } else {
                -1
            }
        }
        (SignConvention::Standard, MatrixType::TypeII) => {
            if even {
                1
            } else {
                -1
            }
        }
        // 1 is odd, so it maps to +1 here for both types
        (SignConvention::Flipped, _) => {
            if even {
                -1
            } else {
                1
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignMatrix {
    n: usize,
    mtype: MatrixType,
    convention: SignConvention,
    entries: Matrix<i8>,
}

impl SignMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mtype(&self) -> MatrixType {
        self.mtype
    }

    pub fn convention(&self) -> SignConvention {
        self.convention
    }

    pub fn entries(&self) -> &Matrix<i8> {
        &self.entries
    }

    /// 1-based entry lookup.
    pub fn entry(&self, i: usize, j: usize) -> Result<i8> {
        self.entries.entry(i, j)
    }

    /// Entries widened to `i64` for arithmetic.
    pub fn to_i64(&self) -> Matrix<i64> {
        self.entries.map(i64::from)
    }
}

pub fn sign_matrix(base: &BaseMatrix, convention: SignConvention) -> SignMatrix {
    let mtype = base.mtype();
    SignMatrix {
        n: base.order(),
        mtype,
        convention,
        entries: base.entries().map(|v| sign_of(v, mtype, convention)),
    }
}

/// Builds base and sign matrix in one step.
pub fn m_matrix(n: usize, mtype: MatrixType, convention: SignConvention) -> Result<SignMatrix> {
    let base = crate::modmat::base_matrix(n, mtype)?;
    Ok(sign_matrix(&base, convention))
}

/// `(plus_count, minus_count)` for the 1-based `row`.
pub fn row_sign_counts(m: &SignMatrix, row: usize) -> Result<(usize, usize)> {
    let r = m.entries.row(row)?;
    let plus = r.iter().filter(|&&x| x == 1).count();
    Ok((plus, r.len() - plus))
}

pub fn determinant(m: &SignMatrix) -> BigInt {
    integer_determinant(&m.to_i64())
}

/// Exact determinant by Bareiss fraction-free elimination. Every division
/// is exact, so no rationals or floats are involved.
pub fn integer_determinant(a: &Matrix<i64>) -> BigInt {
    assert!(a.is_square(), "determinant of a non-square matrix");
    let n = a.nrows();
    if n == 0 {
        return BigInt::one();
    }
    let mut work: Vec<Vec<BigInt>> = a
        .rows()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut negate = false;
    let mut prev_pivot = BigInt::one();
    for k in 0..n - 1 {
        if work[k][k].is_zero() {
            match (k + 1..n).find(|&i| !work[i][k].is_zero()) {
                Some(i) => {
                    work.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        let (upper, lower) = work.split_at_mut(k + 1);
        let pivot_row = &upper[k];
        let pivot = &pivot_row[k];
        for row in lower.iter_mut() {
            for j in k + 1..n {
                let value = (&row[j] * pivot - &row[k] * &pivot_row[j]) / &prev_pivot;
                row[j] = value;
            }
            row[k] = BigInt::zero();
        }
        prev_pivot = pivot.clone();
    }
    let det = work[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Kronecker product of two sign matrices. The result has composite order
/// and is deliberately returned untyped.
pub fn kronecker(a: &SignMatrix, b: &SignMatrix) -> Matrix<i8> {
    kronecker_raw(&a.entries, &b.entries)
}

pub fn kronecker_raw(a: &Matrix<i8>, b: &Matrix<i8>) -> Matrix<i8> {
    let (br, bc) = (b.nrows(), b.ncols());
    Matrix::from_fn(a.nrows() * br, a.ncols() * bc, |r, c| {
        a.at(r / br, c / bc) * b.at(r % br, c % bc)
    })
}

/// Whether the order of a Kronecker product of two admissible matrices is
/// itself admissible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KroneckerCase {
    pub mtype: MatrixType,
    pub left: usize,
    pub right: usize,
    pub product_order: usize,
    pub admissible: bool,
}

/// Every unordered pair of admissible factor orders up to `max_factor`.
pub fn kronecker_closure_table(mtype: MatrixType, max_factor: usize) -> Vec<KroneckerCase> {
    let orders: Vec<usize> = admissible_orders(mtype, 2, max_factor).collect();
    let mut out = Vec::new();
    for (i, &left) in orders.iter().enumerate() {
        for &right in &orders[i..] {
            let product_order = left * right;
            out.push(KroneckerCase {
                mtype,
                left,
                right,
                product_order,
                admissible: is_admissible_order(product_order, mtype),
            });
        }
    }
    out
}
