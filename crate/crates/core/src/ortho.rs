//! Orthogonal numbers: inner products between distinct rows of a sign
//! matrix, the closed-form spectrum they must come from, and the pairing of
//! spectrum values whose parameters are complementary.
//!
//! For a Type I matrix of order `n` the non-trivial inner products take the
//! form `4k + 2 − n` with `0 ≤ k ≤ (n−1)/2`; for Type II they are `4k − n`
//! with `0 ≤ k ≤ n/2`. The self product `n` is always trivial, and for
//! Type I so is the product `1` of the all-ones first row with any row.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::order::{require_admissible, MatrixType};
use crate::signmat::SignMatrix;

/// Unordered row pair, 1-based, `first < second`.
pub type RowPair = (usize, usize);

/// The theoretical spectrum only exists for orders where the half-counts
/// are integral, which rules out the even prime for Type I.
fn require_formula_order(n: usize, mtype: MatrixType) -> Result<()> {
    require_admissible(n, mtype)?;
    if mtype == MatrixType::TypeI && n == 2 {
        return Err(Error::DegenerateOrder {
            n,
            mtype,
            reason: "the orthogonal-number formulas need an odd order".into(),
        });
    }
    Ok(())
}

/// Largest value of the count parameter `k`.
fn max_k(n: usize, mtype: MatrixType) -> usize {
    match mtype {
        MatrixType::TypeI => (n - 1) / 2,
        MatrixType::TypeII => n / 2,
    }
}

/// Orthogonal number for count parameter `k`.
pub fn orthogonal_number(n: usize, mtype: MatrixType, k: usize) -> i64 {
    let (n, k) = (n as i64, k as i64);
    match mtype {
        MatrixType::TypeI => 4 * k + 2 - n,
        MatrixType::TypeII => 4 * k - n,
    }
}

/// Residue mod 4 shared by every spectrum value.
pub fn spectrum_residue(n: usize, mtype: MatrixType) -> i64 {
    orthogonal_number(n, mtype, 0).rem_euclid(4)
}

pub fn inner_product(m: &SignMatrix, i: usize, j: usize) -> Result<i64> {
    let a = m.entries().row(i)?;
    let b = m.entries().row(j)?;
    Ok(a.iter()
        .zip(b)
        .map(|(&x, &y)| i64::from(x) * i64::from(y))
        .sum())
}

/// `M · Mᵀ` as a matrix product.
pub fn gram(m: &SignMatrix) -> Matrix<i64> {
    let a = m.to_i64();
    a.matmul(&a.transpose())
        .expect("a matrix and its transpose are conformable")
}

/// Ascending `{orthogonal_number(k) : 0 ≤ k ≤ max_k}`.
pub fn theoretical_spectrum(n: usize, mtype: MatrixType) -> Result<Vec<i64>> {
    require_formula_order(n, mtype)?;
    Ok((0..=max_k(n, mtype))
        .map(|k| orthogonal_number(n, mtype, k))
        .collect())
}

pub fn spectrum_sum(n: usize, mtype: MatrixType) -> Result<i64> {
    Ok(theoretical_spectrum(n, mtype)?.iter().sum())
}

/// First row considered when scanning for non-trivial products: Type I
/// skips the all-ones row.
fn first_scanned_row(mtype: MatrixType) -> usize {
    match mtype {
        MatrixType::TypeI => 1,
        MatrixType::TypeII => 0,
    }
}

fn realized_from_gram(g: &Matrix<i64>, mtype: MatrixType) -> BTreeMap<i64, Vec<RowPair>> {
    let n = g.nrows();
    let mut out: BTreeMap<i64, Vec<RowPair>> = BTreeMap::new();
    let start = first_scanned_row(mtype);
    for i in start..n {
        for j in i + 1..n {
            out.entry(g.at(i, j)).or_default().push((i + 1, j + 1));
        }
    }
    out
}

/// Non-trivial inner products, keyed by value, with every achieving pair.
pub fn realized_spectrum(m: &SignMatrix) -> BTreeMap<i64, Vec<RowPair>> {
    realized_from_gram(&gram(m), m.mtype())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TrivialNumbers {
    pub self_product: i64,
    /// Product of the all-ones first row with every other row; Type II has
    /// no such row.
    pub first_row_product: Option<i64>,
}

pub fn trivial_numbers(m: &SignMatrix) -> TrivialNumbers {
    TrivialNumbers {
        self_product: m.order() as i64,
        first_row_product: match m.mtype() {
            MatrixType::TypeI => Some(1),
            MatrixType::TypeII => None,
        },
    }
}

/// `((2+i, n−i), ⟨R_{2+i}, R_{n−i}⟩)` for `i = 0..=(n−3)/2`.
pub fn opposite_row_products(m: &SignMatrix) -> Result<Vec<(RowPair, i64)>> {
    if m.mtype() != MatrixType::TypeI {
        return Err(Error::WrongType {
            expected: MatrixType::TypeI,
            found: m.mtype(),
        });
    }
    let n = m.order();
    if n < 3 {
        return Ok(Vec::new());
    }
    (0..=(n - 3) / 2)
        .map(|i| {
            let pair = (2 + i, n - i);
            Ok((pair, inner_product(m, pair.0, pair.1)?))
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OrthogonalPair {
    /// Complementary count parameters, `thetas.0 ≤ thetas.1`.
    pub thetas: (usize, usize),
    pub values: (i64, i64),
}

impl OrthogonalPair {
    pub fn sum(&self) -> i64 {
        self.values.0 + self.values.1
    }

    pub fn is_self_paired(&self) -> bool {
        self.thetas.0 == self.thetas.1
    }
}

/// Pairs of spectrum values whose count parameters sum to `(n−1)/2`
/// (Type I) or `n/2` (Type II). A parameter that is its own complement
/// yields a degenerate `(g, g)` pair.
pub fn orthogonal_pairs(n: usize, mtype: MatrixType) -> Result<Vec<OrthogonalPair>> {
    require_formula_order(n, mtype)?;
    let total = max_k(n, mtype);
    Ok((0..=total / 2)
        .map(|t1| {
            let t2 = total - t1;
            OrthogonalPair {
                thetas: (t1, t2),
                values: (
                    orthogonal_number(n, mtype, t1),
                    orthogonal_number(n, mtype, t2),
                ),
            }
        })
        .collect())
}

/// How a spectrum value shows up in an actual matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Occurrence {
    /// Achieved by at least one non-trivial row pair.
    Realized,
    /// Present only as a trivial product (self product, or the first-row
    /// product of Type I).
    TrivialOnly,
    Absent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairOccurrence {
    pub pair: OrthogonalPair,
    pub occurrence: (Occurrence, Occurrence),
}

impl PairOccurrence {
    /// Both members realized, or neither.
    pub fn together(&self) -> bool {
        (self.occurrence.0 == Occurrence::Realized) == (self.occurrence.1 == Occurrence::Realized)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrthoReport {
    pub n: usize,
    pub mtype: MatrixType,
    pub gram: Matrix<i64>,
    pub theoretical: Vec<i64>,
    pub realized: BTreeMap<i64, Vec<RowPair>>,
    pub missing: Vec<i64>,
    pub pairs: Vec<OrthogonalPair>,
    pub trivial: TrivialNumbers,
    pub pair_occurrence: Vec<PairOccurrence>,
}

impl OrthoReport {
    pub fn occurrence(&self, value: i64) -> Occurrence {
        if self.realized.contains_key(&value) {
            Occurrence::Realized
        } else if self.is_trivial(value) {
            Occurrence::TrivialOnly
        } else {
            Occurrence::Absent
        }
    }

    fn is_trivial(&self, value: i64) -> bool {
        value == self.trivial.self_product || Some(value) == self.trivial.first_row_product
    }

    /// Realized values outside the theoretical spectrum; empty whenever
    /// the closed form holds.
    pub fn unexpected(&self) -> Vec<i64> {
        self.realized
            .keys()
            .copied()
            .filter(|g| self.theoretical.binary_search(g).is_err())
            .collect()
    }
}

pub fn analyze(m: &SignMatrix) -> Result<OrthoReport> {
    let (n, mtype) = (m.order(), m.mtype());
    let theoretical = theoretical_spectrum(n, mtype)?;
    let pairs = orthogonal_pairs(n, mtype)?;
    let gram = gram(m);
    let realized = realized_from_gram(&gram, mtype);
    let mut report = OrthoReport {
        n,
        mtype,
        gram,
        theoretical,
        realized,
        missing: Vec::new(),
        pairs,
        trivial: trivial_numbers(m),
        pair_occurrence: Vec::new(),
    };
    report.missing = report
        .theoretical
        .iter()
        .copied()
        .filter(|&g| !report.realized.contains_key(&g) && !report.is_trivial(g))
        .collect();
    report.pair_occurrence = report
        .pairs
        .iter()
        .map(|&pair| PairOccurrence {
            pair,
            occurrence: (
                report.occurrence(pair.values.0),
                report.occurrence(pair.values.1),
            ),
        })
        .collect();
    Ok(report)
}
