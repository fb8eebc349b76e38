//! Published parameter values that disagree with direct computation.
//!
//! Each entry carries the stated value and the value this library computes
//! for the same object. These are reported, never treated as failures.

use serde::Serialize;

use crate::design::build_design;
use crate::error::Result;
use crate::graph::{bipartite_graph, check_regular};
use crate::order::{admissible_orders, MatrixType};
use crate::ortho::spectrum_sum;
use crate::signmat::{m_matrix, SignConvention};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Erratum {
    pub id: &'static str,
    pub subject: String,
    pub stated: String,
    pub computed: String,
}

fn class_listing(n: usize, mtype: MatrixType) -> Result<String> {
    let d = build_design(&m_matrix(n, mtype, SignConvention::Standard)?)?;
    Ok(d.scheme
        .classes
        .iter()
        .map(|c| format!("lambda={} n={}", c.lambda, c.valence))
        .collect::<Vec<_>>()
        .join(", "))
}

pub fn errata() -> Result<Vec<Erratum>> {
    let sums: Vec<i64> = admissible_orders(MatrixType::TypeII, 2, 200)
        .map(|n| spectrum_sum(n, MatrixType::TypeII))
        .collect::<Result<_>>()?;
    let all_zero = sums.iter().all(|&s| s == 0);

    let g5 = check_regular(&bipartite_graph(&crate::design::incidence(&m_matrix(
        5,
        MatrixType::TypeI,
        SignConvention::Standard,
    )?)?));
    let g6 = check_regular(&bipartite_graph(&crate::design::incidence(&m_matrix(
        6,
        MatrixType::TypeII,
        SignConvention::Standard,
    )?)?));

    Ok(vec![
        Erratum {
            id: "type-ii-spectrum-sum",
            subject: "sum of the Type II orthogonal-number spectrum".into(),
            stated: "(n+1)/2 (e.g. 7/2 at n = 6)".into(),
            computed: format!(
                "sum of 4k-n over k = 0..n/2 is {} for all {} admissible Type II orders up to 200",
                if all_zero { "0" } else { "NOT always 0" },
                sums.len()
            ),
        },
        Erratum {
            id: "type-i-graph-size",
            subject: "bipartite graph of a Type I matrix of order n".into(),
            stated: "V = 2n (n + n), E = 2n, valence (n-1)/2; at n = 5: V = 10, E = 10".into(),
            computed: format!(
                "V = 2(n-1), E = (n-1)^2/2, valence (n-1)/2; at n = 5: V = {} ({} + {}), E = {}, valence {}",
                g5.left_size + g5.right_size,
                g5.left_size,
                g5.right_size,
                g5.edge_count,
                g5.degree.map_or("-".into(), |d| d.to_string()),
            ),
        },
        Erratum {
            id: "type-ii-graph-size",
            subject: "bipartite graph of a Type II matrix of order n".into(),
            stated: "V = n (n/2 + n/2), valence n/2".into(),
            computed: format!(
                "V = 2n (n + n), E = n^2/2, valence n/2; at n = 6: V = {}, E = {}, valence {}",
                g6.left_size + g6.right_size,
                g6.edge_count,
                g6.degree.map_or("-".into(), |d| d.to_string()),
            ),
        },
        Erratum {
            id: "type-i-order-5-classes",
            subject: "associate classes of the Type I order-5 design".into(),
            stated: "lambda_1=1 n_1=1, lambda_2=0 n_2=2".into(),
            computed: class_listing(5, MatrixType::TypeI)?,
        },
        Erratum {
            id: "type-ii-order-4-classes",
            subject: "associate classes of the Type II order-4 design".into(),
            stated: "lambda_1=0 n_1=2, lambda_2=1 n_2=1".into(),
            computed: class_listing(4, MatrixType::TypeII)?,
        },
        Erratum {
            id: "type-i-order-11-missing-pair",
            subject: "unrealized orthogonal pair of the Type I order-11 matrix".into(),
            stated: "(-5, 17)".into(),
            computed: {
                let m = m_matrix(11, MatrixType::TypeI, SignConvention::Standard)?;
                let r = crate::ortho::analyze(&m)?;
                format!("{:?}", r.missing)
            },
        },
    ])
}
