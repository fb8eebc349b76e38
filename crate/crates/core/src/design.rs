//! Symmetric PBIB designs extracted from sign matrices.
//!
//! The incidence matrix is read off a standard-convention sign matrix
//! (+1 → 1, −1 → 0), with the all-ones first row and column dropped for
//! Type I. Treatments are rows, blocks are columns. Associate classes are
//! the distinct pair concurrences, numbered in ascending order of λ; the
//! class sizes `n_i` and the parameters `p^i_jℓ` are always obtained by
//! counting, never from a formula.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::order::MatrixType;
use crate::signmat::{SignConvention, SignMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub mtype: MatrixType,
    pub n: usize,
    pub convention: SignConvention,
}

impl Provenance {
    /// Upper bound on pair concurrence: `(n−3)/2` for Type I, `(n−2)/2`
    /// for Type II.
    pub fn lambda_bound(&self) -> i64 {
        let n = self.n as i64;
        match self.mtype {
            MatrixType::TypeI => (n - 3) / 2,
            MatrixType::TypeII => (n - 2) / 2,
        }
    }
}

/// A v×b 0/1 matrix; rows are treatments, columns are blocks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceMatrix {
    cells: Matrix<u8>,
    provenance: Option<Provenance>,
}

impl IncidenceMatrix {
    /// Wraps an arbitrary 0/1 matrix with no construction attached.
    pub fn from_cells(cells: Matrix<u8>) -> Result<Self> {
        if let Some(bad) = cells.rows().flatten().find(|&&x| x > 1) {
            return Err(Error::Malformed(format!(
                "incidence entry {bad} is not 0 or 1"
            )));
        }
        Ok(IncidenceMatrix {
            cells,
            provenance: None,
        })
    }

    pub fn treatments(&self) -> usize {
        self.cells.nrows()
    }

    pub fn blocks(&self) -> usize {
        self.cells.ncols()
    }

    pub fn cells(&self) -> &Matrix<u8> {
        &self.cells
    }

    pub fn provenance(&self) -> Option<Provenance> {
        self.provenance
    }

    /// Number of blocks containing each treatment.
    pub fn row_weights(&self) -> Vec<usize> {
        self.cells
            .rows()
            .map(|r| r.iter().filter(|&&x| x == 1).count())
            .collect()
    }

    /// Size of each block.
    pub fn column_weights(&self) -> Vec<usize> {
        (0..self.blocks())
            .map(|c| self.cells.column(c).filter(|&x| x == 1).count())
            .collect()
    }

    pub fn has_repeated_rows(&self) -> bool {
        let rows: Vec<&[u8]> = self.cells.rows().collect();
        (0..rows.len()).any(|i| (i + 1..rows.len()).any(|j| rows[i] == rows[j]))
    }
}

pub fn incidence(m: &SignMatrix) -> Result<IncidenceMatrix> {
    if m.convention() != SignConvention::Standard {
        return Err(Error::WrongConvention);
    }
    let signs = match m.mtype() {
        MatrixType::TypeI => m.entries().without_first_row_and_column(),
        MatrixType::TypeII => m.entries().clone(),
    };
    Ok(IncidenceMatrix {
        cells: signs.map(|s| u8::from(s == 1)),
        provenance: Some(Provenance {
            mtype: m.mtype(),
            n: m.order(),
            convention: m.convention(),
        }),
    })
}

/// Entry `(α, β)` counts the blocks holding both treatments; the diagonal
/// holds the replication numbers.
pub fn concurrence_matrix(inc: &IncidenceMatrix) -> Matrix<i64> {
    let v = inc.treatments();
    let cells = inc.cells();
    Matrix::from_fn(v, v, |a, b| {
        cells
            .row_slice(a)
            .iter()
            .zip(cells.row_slice(b))
            .map(|(&x, &y)| i64::from(x & y))
            .sum()
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssociateClass {
    /// 1-based class number.
    pub index: usize,
    pub lambda: i64,
    /// `n_i`: number of i-th associates of each symbol.
    pub valence: usize,
    /// `P_i`, with `p^i_jℓ` at row `j`, column `ℓ` (0-based storage).
    pub intersection: Vec<Vec<i64>>,
}

/// The first way in which a λ-partition fails to be an association scheme.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SchemeWitness {
    Asymmetric {
        pair: (usize, usize),
    },
    /// Symbols 1 and `symbol` have different numbers of `class`-th associates.
    NonConstantValence {
        class: usize,
        reference_count: usize,
        symbol: usize,
        count: usize,
    },
    /// Two pairs of `class`-th associates disagree on `p^class_jℓ`.
    NonConstantIntersection {
        class: usize,
        reference_pair: (usize, usize),
        pair: (usize, usize),
        j: usize,
        l: usize,
        reference_value: i64,
        value: i64,
    },
}

impl fmt::Display for SchemeWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SchemeWitness::Asymmetric { pair } => {
                write!(f, "concurrence of {:?} differs from its transpose", pair)
            }
            SchemeWitness::NonConstantValence {
                class,
                reference_count,
                symbol,
                count,
            } => write!(
                f,
                "class {class}: symbol 1 has {reference_count} associates but symbol {symbol} has {count}"
            ),
            SchemeWitness::NonConstantIntersection {
                class,
                reference_pair,
                pair,
                j,
                l,
                reference_value,
                value,
            } => write!(
                f,
                "class {class}: p[{j}][{l}] is {reference_value} for pair {:?} but {value} for pair {:?}",
                reference_pair, pair
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AssociationScheme {
    pub v: usize,
    /// Ascending λ. When the scheme is invalid, `valence` is read at
    /// symbol 1 and `intersection` at the first pair of the class.
    pub classes: Vec<AssociateClass>,
    /// Class number of each symbol pair, 0 on the diagonal.
    pub class_of: Matrix<usize>,
    pub valid: bool,
    pub witness: Option<SchemeWitness>,
}

impl AssociationScheme {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn lambdas(&self) -> Vec<i64> {
        self.classes.iter().map(|c| c.lambda).collect()
    }

    pub fn valences(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.valence).collect()
    }

    /// `p^i_jℓ`, all indices 1-based.
    pub fn p(&self, i: usize, j: usize, l: usize) -> i64 {
        self.classes[i - 1].intersection[j - 1][l - 1]
    }
}

/// Partitions symbol pairs by concurrence and checks the scheme axioms.
///
/// `p^i_jℓ` is read from the product `A_j · A_ℓ` of class adjacency
/// matrices: its `(α, β)` entry counts the symbols that are j-th associates
/// of α and ℓ-th associates of β.
pub fn infer_scheme(conc: &Matrix<i64>) -> AssociationScheme {
    let v = conc.nrows();
    let mut lambdas: Vec<i64> = (0..v)
        .flat_map(|a| (0..v).filter(move |&b| b != a).map(move |b| (a, b)))
        .map(|(a, b)| conc.at(a, b))
        .collect();
    lambdas.sort_unstable();
    lambdas.dedup();
    let m = lambdas.len();

    let class_of = Matrix::from_fn(v, v, |a, b| {
        if a == b {
            0
        } else {
            1 + lambdas
                .binary_search(&conc.at(a, b))
                .expect("λ collected above")
        }
    });
    let mut witness = (0..v)
        .flat_map(|a| (a + 1..v).map(move |b| (a, b)))
        .find(|&(a, b)| conc.at(a, b) != conc.at(b, a))
        .map(|(a, b)| SchemeWitness::Asymmetric {
            pair: (a + 1, b + 1),
        });

    // neighbours[i][a]: the i-th associates of symbol a, i.e. the support
    // of row a of the class adjacency matrix A_i
    let neighbours: Vec<Vec<Vec<usize>>> = (1..=m)
        .map(|i| {
            (0..v)
                .map(|a| (0..v).filter(|&t| class_of.at(a, t) == i).collect())
                .collect()
        })
        .collect();

    let valences: Vec<usize> = (0..m)
        .map(|i| neighbours[i].first().map_or(0, Vec::len))
        .collect();
    if witness.is_none() {
        witness = (0..m).find_map(|i| {
            (1..v)
                .find(|&s| neighbours[i][s].len() != valences[i])
                .map(|s| SchemeWitness::NonConstantValence {
                    class: i + 1,
                    reference_count: valences[i],
                    symbol: s + 1,
                    count: neighbours[i][s].len(),
                })
        });
    }

    // products[j][l] = A_j · A_l, accumulated row by row over the sparse
    // supports
    let products: Vec<Vec<Matrix<i64>>> = (0..m)
        .map(|j| {
            (0..m)
                .map(|l| {
                    let mut out = Matrix::filled(v, v, 0i64);
                    for a in 0..v {
                        for &t in &neighbours[j][a] {
                            for &c in &neighbours[l][t] {
                                out.set(a, c, out.at(a, c) + 1);
                            }
                        }
                    }
                    out
                })
                .collect()
        })
        .collect();

    let mut classes = Vec::with_capacity(m);
    for i in 0..m {
        let pairs: Vec<(usize, usize)> = (0..v)
            .flat_map(|a| (0..v).map(move |b| (a, b)))
            .filter(|&(a, b)| class_of.at(a, b) == i + 1)
            .collect();
        let (ra, rb) = pairs[0];
        let intersection: Vec<Vec<i64>> = (0..m)
            .map(|j| (0..m).map(|l| products[j][l].at(ra, rb)).collect())
            .collect();
        if witness.is_none() {
            'pairs: for &(a, b) in &pairs[1..] {
                for j in 0..m {
                    for l in 0..m {
                        let value = products[j][l].at(a, b);
                        if value != intersection[j][l] {
                            witness = Some(SchemeWitness::NonConstantIntersection {
                                class: i + 1,
                                reference_pair: (ra + 1, rb + 1),
                                pair: (a + 1, b + 1),
                                j: j + 1,
                                l: l + 1,
                                reference_value: intersection[j][l],
                                value,
                            });
                            break 'pairs;
                        }
                    }
                }
            }
        }
        classes.push(AssociateClass {
            index: i + 1,
            lambda: lambdas[i],
            valence: valences[i],
            intersection,
        });
    }

    AssociationScheme {
        v,
        classes,
        class_of,
        valid: witness.is_none(),
        witness,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Eq,
    Lt,
    Le,
    Ge,
}

impl Relation {
    fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Lt => lhs < rhs,
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Lt => "<",
            Relation::Le => "<=",
            Relation::Ge => ">=",
        }
    }
}

/// One evaluated identity, with both sides kept for reporting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub lhs: i64,
    pub relation: Relation,
    pub rhs: i64,
    pub pass: bool,
}

impl IdentityCheck {
    pub fn new(name: impl Into<String>, lhs: i64, relation: Relation, rhs: i64) -> Self {
        IdentityCheck {
            name: name.into(),
            lhs,
            relation,
            rhs,
            pass: relation.holds(lhs, rhs),
        }
    }
}

impl fmt::Display for IdentityCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} {} {} [{}]",
            self.name,
            self.lhs,
            self.relation.symbol(),
            self.rhs,
            if self.pass { "pass" } else { "FAIL" }
        )
    }
}

/// Bare design parameters; enough to re-check every counting identity
/// without the incidence matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DesignParameters {
    pub v: usize,
    pub b: usize,
    pub r: usize,
    pub k: usize,
    pub classes: Vec<AssociateClass>,
    pub lambda_bound: Option<i64>,
}

/// `vr = bk`, `Σ n_i = v−1`, `Σ n_i λ_i = r(k−1)`,
/// `Σ_ℓ p^i_jℓ = n_j − δ_ij`, `k < v`, `v = b`, and the λ range when a
/// bound is known.
pub fn check_identities(p: &DesignParameters) -> Vec<IdentityCheck> {
    let (v, b, r, k) = (p.v as i64, p.b as i64, p.r as i64, p.k as i64);
    let mut out = vec![
        IdentityCheck::new("vr = bk", v * r, Relation::Eq, b * k),
        IdentityCheck::new("k < v", k, Relation::Lt, v),
        IdentityCheck::new("v = b", v, Relation::Eq, b),
        IdentityCheck::new(
            "sum n_i = v - 1",
            p.classes.iter().map(|c| c.valence as i64).sum(),
            Relation::Eq,
            v - 1,
        ),
        IdentityCheck::new(
            "sum n_i lambda_i = r(k - 1)",
            p.classes.iter().map(|c| c.valence as i64 * c.lambda).sum(),
            Relation::Eq,
            r * (k - 1),
        ),
    ];
    for (i, class) in p.classes.iter().enumerate() {
        for (j, other) in p.classes.iter().enumerate() {
            let row_sum = class.intersection.get(j).map_or(0, |row| row.iter().sum());
            out.push(IdentityCheck::new(
                format!("sum_l p^{}_{}l = n_{} - delta", i + 1, j + 1, j + 1),
                row_sum,
                Relation::Eq,
                other.valence as i64 - i64::from(i == j),
            ));
        }
    }
    let lambdas = p.classes.iter().map(|c| c.lambda);
    if let (Some(lo), Some(hi)) = (lambdas.clone().min(), lambdas.max()) {
        out.push(IdentityCheck::new("min lambda >= 0", lo, Relation::Ge, 0));
        if let Some(bound) = p.lambda_bound {
            out.push(IdentityCheck::new(
                "max lambda <= bound",
                hi,
                Relation::Le,
                bound,
            ));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PBIBDesign {
    pub incidence: IncidenceMatrix,
    pub r: usize,
    pub k: usize,
    pub concurrence: Matrix<i64>,
    pub scheme: AssociationScheme,
    pub lambda_range_ok: bool,
    pub identities: Vec<IdentityCheck>,
}

impl PBIBDesign {
    /// Infers the scheme of an arbitrary incidence matrix and evaluates
    /// the parameter identities. `r` and `k` are read from the first row
    /// and column; constancy is checked by [`validate_pbib`].
    pub fn from_incidence(incidence: IncidenceMatrix) -> Self {
        let r = incidence.row_weights().first().copied().unwrap_or(0);
        let k = incidence.column_weights().first().copied().unwrap_or(0);
        let concurrence = concurrence_matrix(&incidence);
        let scheme = infer_scheme(&concurrence);
        let params = DesignParameters {
            v: incidence.treatments(),
            b: incidence.blocks(),
            r,
            k,
            classes: scheme.classes.clone(),
            lambda_bound: incidence.provenance().map(|p| p.lambda_bound()),
        };
        let identities = check_identities(&params);
        let lambda_range_ok = identities
            .iter()
            .filter(|c| c.name.contains("lambda >=") || c.name.contains("lambda <="))
            .all(|c| c.pass);
        PBIBDesign {
            incidence,
            r,
            k,
            concurrence,
            scheme,
            lambda_range_ok,
            identities,
        }
    }

    pub fn v(&self) -> usize {
        self.incidence.treatments()
    }

    pub fn b(&self) -> usize {
        self.incidence.blocks()
    }

    pub fn parameters(&self) -> DesignParameters {
        DesignParameters {
            v: self.v(),
            b: self.b(),
            r: self.r,
            k: self.k,
            classes: self.scheme.classes.clone(),
            lambda_bound: self.incidence.provenance().map(|p| p.lambda_bound()),
        }
    }
}

pub fn build_design(m: &SignMatrix) -> Result<PBIBDesign> {
    let inc = incidence(m)?;
    let min_order = match m.mtype() {
        MatrixType::TypeI => 5,
        MatrixType::TypeII => 4,
    };
    if m.order() < min_order {
        return Err(Error::DegenerateDesign {
            n: m.order(),
            reason: format!(
                "incidence matrix is {}x{} with block size {}; {} designs start at order {}",
                inc.treatments(),
                inc.blocks(),
                inc.column_weights().first().copied().unwrap_or(0),
                m.mtype(),
                min_order
            ),
        });
    }
    Ok(PBIBDesign::from_incidence(inc))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<IdentityCheck>,
    pub scheme_valid: bool,
    pub witness: Option<SchemeWitness>,
    pub pass: bool,
}

impl ValidationReport {
    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

pub fn validate_pbib(d: &PBIBDesign) -> ValidationReport {
    let mut checks = d.identities.clone();
    let rows = d.incidence.row_weights();
    let cols = d.incidence.column_weights();
    let off_r = rows.iter().filter(|&&w| w != d.r).count();
    let off_k = cols.iter().filter(|&&w| w != d.k).count();
    checks.push(IdentityCheck::new(
        "treatments not in exactly r blocks",
        off_r as i64,
        Relation::Eq,
        0,
    ));
    checks.push(IdentityCheck::new(
        "blocks not of size k",
        off_k as i64,
        Relation::Eq,
        0,
    ));
    let max_cell = d
        .incidence
        .cells()
        .rows()
        .flatten()
        .copied()
        .max()
        .unwrap_or(0);
    checks.push(IdentityCheck::new(
        "max occurrences of a treatment in a block",
        i64::from(max_cell),
        Relation::Le,
        1,
    ));
    let pass = d.scheme.valid && checks.iter().all(|c| c.pass);
    ValidationReport {
        checks,
        scheme_valid: d.scheme.valid,
        witness: d.scheme.witness.clone(),
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::signmat::m_matrix;

    fn standard(n: usize, t: MatrixType) -> SignMatrix {
        m_matrix(n, t, SignConvention::Standard).unwrap()
    }

    fn cells(n: usize, t: MatrixType) -> Vec<Vec<u8>> {
        incidence(&standard(n, t)).unwrap().cells().to_rows()
    }

    #[test]
    fn incidence_examples() {
        assert_eq!(
            cells(5, MatrixType::TypeI),
            vec![
                vec![1, 0, 1, 0],
                vec![0, 0, 1, 1],
                vec![1, 1, 0, 0],
                vec![0, 1, 0, 1]
            ]
        );
        assert_eq!(
            cells(7, MatrixType::TypeI),
            vec![
                vec![1, 0, 1, 0, 1, 0],
                vec![0, 0, 0, 1, 1, 1],
                vec![1, 0, 0, 1, 1, 0],
                vec![0, 1, 1, 0, 0, 1],
                vec![1, 1, 1, 0, 0, 0],
                vec![0, 1, 0, 1, 0, 1],
            ]
        );
        assert_eq!(
            cells(4, MatrixType::TypeII),
            vec![
                vec![0, 1, 0, 1],
                vec![1, 1, 0, 0],
                vec![0, 0, 1, 1],
                vec![1, 0, 1, 0]
            ]
        );
    }

    #[test]
    fn flipped_is_rejected() {
        let m = m_matrix(5, MatrixType::TypeI, SignConvention::Flipped).unwrap();
        assert_eq!(incidence(&m), Err(Error::WrongConvention));
        assert!(matches!(build_design(&m), Err(Error::WrongConvention)));
    }

    #[test]
    fn concurrence_examples() {
        let c = concurrence_matrix(&incidence(&standard(5, MatrixType::TypeI)).unwrap());
        for a in 1..=4 {
            for b in 1..=4 {
                let expected = if a == b {
                    2
                } else if (a, b) == (1, 4)
                    || (a, b) == (4, 1)
                    || (a, b) == (2, 3)
                    || (a, b) == (3, 2)
                {
                    0
                } else {
                    1
                };
                assert_eq!(c.entry(a, b).unwrap(), expected, "({a}, {b})");
            }
        }
        let c = concurrence_matrix(&incidence(&standard(6, MatrixType::TypeII)).unwrap());
        assert_eq!(c.entry(1, 6).unwrap(), 0);
        assert!(c.diagonal().iter().all(|&x| x == 3));
    }

    #[test]
    fn scheme_for_order_11() {
        let d = build_design(&standard(11, MatrixType::TypeI)).unwrap();
        let s = &d.scheme;
        assert!(s.valid);
        assert_eq!(s.lambdas(), vec![0, 2, 3]);
        assert_eq!(s.valences(), vec![1, 4, 4]);
        assert_eq!(
            s.classes[0].intersection,
            vec![vec![0, 0, 0], vec![0, 0, 4], vec![0, 4, 0]]
        );
        assert_eq!(
            s.classes[1].intersection,
            vec![vec![0, 0, 1], vec![0, 0, 3], vec![1, 3, 0]]
        );
        assert_eq!(
            s.classes[2].intersection,
            vec![vec![0, 1, 0], vec![1, 3, 0], vec![0, 0, 3]]
        );
        assert_eq!((d.v(), d.b(), d.r, d.k), (10, 10, 5, 5));
        let report = validate_pbib(&d);
        assert!(report.pass);
        let sum = report
            .checks
            .iter()
            .find(|c| c.name == "sum n_i lambda_i = r(k - 1)")
            .unwrap();
        assert_eq!((sum.lhs, sum.rhs), (20, 20));
    }

    #[test]
    fn scheme_for_small_orders() {
        let d = build_design(&standard(5, MatrixType::TypeI)).unwrap();
        assert_eq!((d.v(), d.b(), d.r, d.k), (4, 4, 2, 2));
        assert_eq!(d.scheme.lambdas(), vec![0, 1]);
        assert_eq!(d.scheme.valences(), vec![1, 2]);

        let d = build_design(&standard(4, MatrixType::TypeII)).unwrap();
        assert_eq!(d.scheme.lambdas(), vec![0, 1]);
        assert_eq!(d.scheme.valences(), vec![1, 2]);
        assert_eq!(
            d.scheme.classes[0].intersection,
            vec![vec![0, 0], vec![0, 2]]
        );
        assert_eq!(
            d.scheme.classes[1].intersection,
            vec![vec![0, 1], vec![1, 0]]
        );
        let report = validate_pbib(&d);
        assert!(report.pass);
        let vr = report.checks.iter().find(|c| c.name == "vr = bk").unwrap();
        assert_eq!((vr.lhs, vr.rhs), (8, 8));

        let d = build_design(&standard(6, MatrixType::TypeII)).unwrap();
        assert_eq!((d.v(), d.r), (6, 3));
        assert_eq!(d.scheme.lambdas(), vec![0, 1, 2]);
        assert_eq!(d.scheme.valences(), vec![1, 2, 2]);
        assert!(validate_pbib(&d).pass);
    }

    #[test]
    fn degenerate_orders() {
        assert!(matches!(
            build_design(&standard(3, MatrixType::TypeI)),
            Err(Error::DegenerateDesign { n: 3, .. })
        ));
        assert!(matches!(
            build_design(&standard(2, MatrixType::TypeII)),
            Err(Error::DegenerateDesign { n: 2, .. })
        ));
    }

    #[test]
    fn all_ones_design_fails_block_size() {
        let inc = IncidenceMatrix::from_cells(Matrix::filled(4, 4, 1u8)).unwrap();
        let d = PBIBDesign::from_incidence(inc);
        let report = validate_pbib(&d);
        assert!(!report.pass);
        let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, vec!["k < v"]);
    }

    #[test]
    fn non_binary_cells_rejected() {
        let m = Matrix::from_rows(&[[1u8, 2], [0, 1]]).unwrap();
        assert!(IncidenceMatrix::from_cells(m).is_err());
    }

    #[test]
    fn irregular_design_reports_valence_witness() {
        // treatment 1 meets everyone once, the others never meet
        let m = Matrix::from_rows(&[[1u8, 1, 1], [1, 0, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
        let d = PBIBDesign::from_incidence(IncidenceMatrix::from_cells(m).unwrap());
        assert!(!d.scheme.valid);
        assert!(matches!(
            d.scheme.witness,
            Some(SchemeWitness::NonConstantValence {
                class: 1,
                reference_count: 0,
                symbol: 2,
                count: 2
            })
        ));
        let report = validate_pbib(&d);
        assert!(!report.pass);
        assert!(report
            .failures()
            .any(|c| c.name == "treatments not in exactly r blocks"));
    }

    #[test]
    fn larger_orders_report_intersection_witness() {
        let d = build_design(&standard(17, MatrixType::TypeI)).unwrap();
        assert!(!d.scheme.valid);
        assert!(matches!(
            d.scheme.witness,
            Some(SchemeWitness::NonConstantIntersection { .. })
        ));
        // everything except the scheme axioms still holds
        let report = validate_pbib(&d);
        assert!(report.checks.iter().all(|c| c.pass));
        assert!(!report.pass);
    }

    #[test]
    fn identities_from_bare_parameters() {
        let d = build_design(&standard(11, MatrixType::TypeI)).unwrap();
        assert_eq!(check_identities(&d.parameters()), d.identities);
        let mut p = d.parameters();
        p.classes[1].lambda = 1;
        let failed: Vec<String> = check_identities(&p)
            .into_iter()
            .filter(|c| !c.pass)
            .map(|c| c.name)
            .collect();
        assert_eq!(failed, vec!["sum n_i lambda_i = r(k - 1)".to_string()]);
    }
}
