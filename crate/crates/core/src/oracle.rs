//! Brute-force reference computations.
//!
//! Nothing here calls into `ortho`, `design` or the Bareiss routine; every
//! quantity is re-derived by literal enumeration so the two routes can be
//! compared.

use serde::Serialize;

use crate::design::{AssociateClass, AssociationScheme, IncidenceMatrix, SchemeWitness};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::signmat::SignMatrix;

type RowPair = (usize, usize);

pub const MAX_COFACTOR_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub subject: String,
    pub main_value: String,
    pub oracle_value: String,
    pub agree: bool,
}

impl OracleVerdict {
    pub fn compare<T: PartialEq + std::fmt::Debug>(
        subject: impl Into<String>,
        main: &T,
        oracle: &T,
    ) -> Self {
        OracleVerdict {
            subject: subject.into(),
            main_value: format!("{main:?}"),
            oracle_value: format!("{oracle:?}"),
            agree: main == oracle,
        }
    }
}

/// Σ_t m[i][t]·m[j][t] for every (i, j), summed one term at a time.
pub fn oracle_gram(m: &SignMatrix) -> Matrix<i64> {
    oracle_gram_raw(m.entries())
}

pub fn oracle_gram_raw(e: &Matrix<i8>) -> Matrix<i64> {
    let n = e.nrows();
    let mut out = vec![vec![0i64; n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let mut total = 0i64;
            for t in 0..n {
                total += i64::from(e.at(i, t)) * i64::from(e.at(j, t));
            }
            *cell = total;
        }
    }
    Matrix::from_rows(&out).expect("square by construction")
}

/// Recomputes the associate classes and every `p^i_jℓ` by walking all
/// symbol triples.
pub fn oracle_scheme(inc: &IncidenceMatrix) -> AssociationScheme {
    let v = inc.treatments();
    let b = inc.blocks();
    let cells = inc.cells();

    let mut together = vec![vec![0i64; v]; v];
    for (alpha, row) in together.iter_mut().enumerate() {
        for (beta, cell) in row.iter_mut().enumerate() {
            for block in 0..b {
                if cells.at(alpha, block) == 1 && cells.at(beta, block) == 1 {
                    *cell += 1;
                }
            }
        }
    }

    let mut lambdas: Vec<i64> = Vec::new();
    for (alpha, row) in together.iter().enumerate() {
        for (beta, &value) in row.iter().enumerate() {
            if alpha != beta && !lambdas.contains(&value) {
                lambdas.push(value);
            }
        }
    }
    lambdas.sort();
    let m = lambdas.len();
    let class = |alpha: usize, beta: usize| -> usize {
        if alpha == beta {
            0
        } else {
            1 + lambdas
                .iter()
                .position(|&l| l == together[alpha][beta])
                .unwrap()
        }
    };

    let mut witness = (0..v)
        .flat_map(|alpha| (alpha + 1..v).map(move |beta| (alpha, beta)))
        .find(|&(alpha, beta)| together[alpha][beta] != together[beta][alpha])
        .map(|(alpha, beta)| SchemeWitness::Asymmetric {
            pair: (alpha + 1, beta + 1),
        });

    // counts[symbol][class - 1]
    let mut counts = vec![vec![0usize; m]; v];
    for (alpha, row) in counts.iter_mut().enumerate() {
        for beta in 0..v {
            if alpha != beta {
                row[class(alpha, beta) - 1] += 1;
            }
        }
    }
    if witness.is_none() {
        witness = (0..m)
            .flat_map(|i| (1..v).map(move |s| (i, s)))
            .find(|&(i, s)| counts[s][i] != counts[0][i])
            .map(|(i, s)| SchemeWitness::NonConstantValence {
                class: i + 1,
                reference_count: counts[0][i],
                symbol: s + 1,
                count: counts[s][i],
            });
    }

    let triple_counts = |alpha: usize, beta: usize| -> Vec<Vec<i64>> {
        let mut p = vec![vec![0i64; m]; m];
        for gamma in 0..v {
            if gamma != alpha && gamma != beta {
                p[class(alpha, gamma) - 1][class(beta, gamma) - 1] += 1;
            }
        }
        p
    };

    let mut classes = Vec::with_capacity(m);
    for i in 0..m {
        let mut reference: Option<(RowPair, Vec<Vec<i64>>)> = None;
        for alpha in 0..v {
            for beta in 0..v {
                if alpha == beta || class(alpha, beta) != i + 1 {
                    continue;
                }
                let p = triple_counts(alpha, beta);
                match &reference {
                    None => reference = Some(((alpha + 1, beta + 1), p)),
                    Some((ref_pair, ref_p)) => {
                        if witness.is_some() {
                            continue;
                        }
                        'scan: for j in 0..m {
                            for l in 0..m {
                                if p[j][l] != ref_p[j][l] {
                                    witness = Some(SchemeWitness::NonConstantIntersection {
                                        class: i + 1,
                                        reference_pair: *ref_pair,
                                        pair: (alpha + 1, beta + 1),
                                        j: j + 1,
                                        l: l + 1,
                                        reference_value: ref_p[j][l],
                                        value: p[j][l],
                                    });
                                    break 'scan;
                                }
                            }
                        }
                    }
                }
            }
        }
        let (_, intersection) = reference.expect("every class has a pair");
        classes.push(AssociateClass {
            index: i + 1,
            lambda: lambdas[i],
            valence: if v > 0 { counts[0][i] } else { 0 },
            intersection,
        });
    }

    AssociationScheme {
        v,
        classes,
        class_of: Matrix::from_fn(v, v, class),
        valid: witness.is_none(),
        witness,
    }
}

/// Cofactor expansion along the first row. Exponential; orders above
/// [`MAX_COFACTOR_ORDER`] are refused.
pub fn oracle_determinant(m: &SignMatrix) -> Result<i128> {
    let n = m.order();
    if n > MAX_COFACTOR_ORDER {
        return Err(Error::OrderTooLarge {
            n,
            max: MAX_COFACTOR_ORDER,
        });
    }
    let rows: Vec<Vec<i128>> = m
        .entries()
        .rows()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    Ok(cofactor(&rows))
}

fn cofactor(a: &[Vec<i128>]) -> i128 {
    match a.len() {
        0 => 1,
        1 => a[0][0],
        n => {
            let mut total = 0i128;
            for col in 0..n {
                if a[0][col] == 0 {
                    continue;
                }
                let minor: Vec<Vec<i128>> = a[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != col)
                            .map(|(_, &x)| x)
                            .collect()
                    })
                    .collect();
                let sign = if col % 2 == 0 { 1 } else { -1 };
                total += sign * a[0][col] * cofactor(&minor);
            }
            total
        }
    }
}
