//! Per-order invariant sweep used by `mmatrix verify` and the acceptance
//! suite.
//!
//! A [`Check`] is an assertion that must hold; a [`Finding`] is an
//! observation that is reported but never fails a run (unrealized spectrum
//! values, pair co-occurrence, association schemes that break down).

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::design::{build_design, validate_pbib};
use crate::error::Result;
use crate::graph::{bipartite_graph, check_regular};
use crate::modmat::{base_matrix, diagonal, diagonal_closed_form, diagonal_is_palindromic};
use crate::oracle::oracle_gram;
use crate::order::{admissible_orders, MatrixType};
use crate::ortho::{analyze, opposite_row_products, spectrum_residue, Occurrence};
use crate::signmat::{determinant, row_sign_counts, sign_matrix, SignConvention};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub topic: &'static str,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderReport {
    pub n: usize,
    pub mtype: MatrixType,
    pub checks: Vec<Check>,
    pub findings: Vec<Finding>,
}

impl OrderReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn finding(&self, topic: &str) -> Option<&Finding> {
        self.findings.iter().find(|f| f.topic == topic)
    }

    fn check(&mut self, name: &'static str, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name,
            pass,
            detail: detail.into(),
        });
    }

    fn note(&mut self, topic: &'static str, detail: impl Into<String>) {
        self.findings.push(Finding {
            topic,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for OrderReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let passed = self.checks.iter().filter(|c| c.pass).count();
        writeln!(
            f,
            "{} n={}: {} ({}/{} checks)",
            self.mtype,
            self.n,
            if self.passed() { "PASS" } else { "FAIL" },
            passed,
            self.checks.len()
        )?;
        for c in self.failures() {
            writeln!(f, "  FAIL {}: {}", c.name, c.detail)?;
        }
        for x in &self.findings {
            writeln!(f, "  finding [{}] {}", x.topic, x.detail)?;
        }
        Ok(())
    }
}

fn min_design_order(mtype: MatrixType) -> usize {
    match mtype {
        MatrixType::TypeI => 5,
        MatrixType::TypeII => 4,
    }
}

/// Runs every check that applies to one admissible order.
pub fn verify_order(n: usize, mtype: MatrixType) -> Result<OrderReport> {
    let mut rep = OrderReport {
        n,
        mtype,
        checks: Vec::new(),
        findings: Vec::new(),
    };
    let base = base_matrix(n, mtype)?;
    let be = base.entries();
    let permutation = |it: &mut dyn Iterator<Item = u64>| {
        let mut seen = vec![false; n + 1];
        for x in it {
            let x = x as usize;
            if !(1..=n).contains(&x) || std::mem::replace(&mut seen[x], true) {
                return false;
            }
        }
        true
    };

    rep.check("base symmetric", be.is_symmetric(), "");
    match mtype {
        MatrixType::TypeI => {
            rep.check(
                "base first row and column are 1",
                be.row_slice(0).iter().all(|&x| x == 1) && be.column(0).all(|x| x == 1),
                "",
            );
            rep.check(
                "base rows 2..n are permutations of 1..n",
                (1..n).all(|r| permutation(&mut be.row_slice(r).iter().copied())),
                "",
            );
        }
        MatrixType::TypeII => rep.check(
            "base is a latin square on 1..n",
            (0..n).all(|r| {
                permutation(&mut be.row_slice(r).iter().copied()) && permutation(&mut be.column(r))
            }),
            "",
        ),
    }
    let diag = diagonal(&base);
    rep.check(
        "diagonal matches closed form",
        diag == diagonal_closed_form(n, mtype),
        format!("{diag:?}"),
    );
    rep.check(
        "diagonal palindrome",
        diagonal_is_palindromic(&diag, mtype),
        "",
    );

    let m = sign_matrix(&base, SignConvention::Standard);
    rep.check("sign matrix symmetric", m.entries().is_symmetric(), "");

    if mtype == MatrixType::TypeI && n == 2 {
        rep.note(
            "even-prime",
            "order 2 is prime but the odd-order identities do not apply",
        );
        return Ok(rep);
    }

    let counts: Vec<(usize, usize)> = (1..=n)
        .map(|r| row_sign_counts(&m, r))
        .collect::<Result<_>>()?;
    let count_ok = counts.iter().enumerate().all(|(r, &c)| match mtype {
        MatrixType::TypeI if r == 0 => c == (n, 0),
        MatrixType::TypeI => c == (n.div_ceil(2), (n - 1) / 2),
        MatrixType::TypeII => c == (n / 2, n / 2),
    });
    rep.check("row sign counts", count_ok, "");
    let row_sum_ok = m.entries().rows().enumerate().all(|(r, row)| {
        let s: i64 = row.iter().map(|&x| i64::from(x)).sum();
        match mtype {
            MatrixType::TypeI if r == 0 => s == n as i64,
            MatrixType::TypeI => s == 1,
            MatrixType::TypeII => s == 0,
        }
    });
    rep.check("row sums", row_sum_ok, "");

    let report = analyze(&m)?;
    let g = &report.gram;
    rep.check("gram matches oracle", *g == oracle_gram(&m), "");
    rep.check(
        "gram diagonal is n",
        g.diagonal().iter().all(|&x| x == n as i64),
        "",
    );
    let unexpected = report.unexpected();
    rep.check(
        "off-diagonal gram entries in spectrum",
        unexpected.is_empty(),
        format!("outside spectrum: {unexpected:?}"),
    );
    let residue = spectrum_residue(n, mtype);
    rep.check(
        "gram entries share the spectrum residue mod 4",
        report.realized.keys().all(|x| x.rem_euclid(4) == residue),
        format!("residue {residue}"),
    );
    let sum: i64 = report.theoretical.iter().sum();
    let expected_sum = match mtype {
        MatrixType::TypeI => (n as i64 + 1) / 2,
        MatrixType::TypeII => 0,
    };
    rep.check(
        "spectrum sum",
        sum == expected_sum,
        format!("{sum} vs {expected_sum}"),
    );
    let pair_sum = match mtype {
        MatrixType::TypeI => 2,
        MatrixType::TypeII => 0,
    };
    rep.check(
        "orthogonal pair sums",
        report.pairs.iter().all(|p| p.sum() == pair_sum),
        format!("each pair sums to {pair_sum}"),
    );
    if !report.missing.is_empty() {
        rep.note(
            "missing-orthogonal-numbers",
            format!(
                "{:?} not realized by any non-trivial row pair",
                report.missing
            ),
        );
    }
    let split: Vec<String> = report
        .pair_occurrence
        .iter()
        .filter(|p| !p.together())
        .map(|p| {
            let label = |o: Occurrence| match o {
                Occurrence::Realized => "realized",
                Occurrence::TrivialOnly => "trivial only",
                Occurrence::Absent => "absent",
            };
            format!(
                "{} {} / {} {}",
                p.pair.values.0,
                label(p.occurrence.0),
                p.pair.values.1,
                label(p.occurrence.1)
            )
        })
        .collect();
    if !split.is_empty() {
        rep.note("pair-co-occurrence", split.join("; "));
    }

    let det = determinant(&m);
    match mtype {
        MatrixType::TypeI => {
            rep.check(
                "gram first row is 1",
                (1..n).all(|j| g.at(0, j) == 1 && g.at(j, 0) == 1),
                "",
            );
            let opposite = opposite_row_products(&m)?;
            rep.check(
                "opposite rows have product 2-n",
                opposite.iter().all(|&(_, x)| x == 2 - n as i64),
                format!("{} pairs", opposite.len()),
            );
            let expected = if n == 3 {
                (-4).into()
            } else {
                num_bigint::BigInt::zero()
            };
            rep.check("determinant", det == expected, format!("{det}"));
        }
        MatrixType::TypeII => rep.note("determinant", format!("{det}")),
    }

    if n >= min_design_order(mtype) {
        let d = build_design(&m)?;
        let (side, weight) = match mtype {
            MatrixType::TypeI => (n - 1, (n - 1) / 2),
            MatrixType::TypeII => (n, n / 2),
        };
        rep.check(
            "design v = b and r = k",
            (d.v(), d.b(), d.r, d.k) == (side, side, weight, weight),
            format!("v={} b={} r={} k={}", d.v(), d.b(), d.r, d.k),
        );
        rep.check(
            "design has distinct treatment rows",
            !d.incidence.has_repeated_rows(),
            "",
        );
        let v = validate_pbib(&d);
        let failed: Vec<String> = v.failures().map(|c| c.to_string()).collect();
        rep.check("design identities", failed.is_empty(), failed.join("; "));
        rep.check(
            "design lambda range",
            d.lambda_range_ok,
            format!("{:?}", d.scheme.lambdas()),
        );
        rep.check(
            "associate class sizes constant",
            !matches!(
                d.scheme.witness,
                Some(crate::design::SchemeWitness::NonConstantValence { .. })
                    | Some(crate::design::SchemeWitness::Asymmetric { .. })
            ),
            "",
        );
        if let Some(w) = &d.scheme.witness {
            rep.note(
                "association-scheme",
                format!("not an association scheme: {w}"),
            );
        }

        let graph = bipartite_graph(&d.incidence);
        let reg = check_regular(&graph);
        rep.check(
            "bipartite graph regular",
            reg.is_regular
                && reg.degree == Some(weight)
                && reg.left_size == side
                && reg.right_size == side
                && reg.edge_count == side * weight,
            format!(
                "{}+{} vertices, {} edges, degree {:?}",
                reg.left_size, reg.right_size, reg.edge_count, reg.degree
            ),
        );
        rep.check(
            "bipartite graph round trip",
            graph.to_incidence_cells() == *d.incidence.cells(),
            "",
        );
    }
    Ok(rep)
}

/// Every admissible order of `mtype` in `lo..=hi`.
pub fn verify_range(mtype: MatrixType, lo: usize, hi: usize) -> Result<Vec<OrderReport>> {
    admissible_orders(mtype, lo, hi)
        .map(|n| verify_order(n, mtype))
        .collect()
}
