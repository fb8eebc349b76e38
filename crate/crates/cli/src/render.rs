//! Text, JSON, CSV and DOT renderings. Every renderer returns the complete
//! document so that identical inputs give byte-identical output.

use std::fmt::Write;

use mmatrix::design::{IdentityCheck, ValidationReport};
use mmatrix::errata::Erratum;
use mmatrix::ortho::Occurrence;
use mmatrix::{
    check_regular, connected_components, AssociateClass, BaseMatrix, BipartiteGraph, Matrix,
    MatrixType, OrderReport, OrthoReport, PBIBDesign, SchemeWitness, SignConvention, SignMatrix,
};
use serde::Serialize;

use crate::Format;

pub const MATRIX_SCHEMA: &str = "mmatrix.matrix/1";
pub const ORTHO_SCHEMA: &str = "mmatrix.ortho/1";
pub const DESIGN_SCHEMA: &str = "mmatrix.design/1";
pub const GRAPH_SCHEMA: &str = "mmatrix.graph/1";
pub const VERIFY_SCHEMA: &str = "mmatrix.verify/1";
pub const ERRATA_SCHEMA: &str = "mmatrix.errata/1";

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn csv<T: std::fmt::Display + Copy>(m: &Matrix<T>) -> String {
    let mut s = String::new();
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        s.push_str(&cells.join(","));
        s.push('\n');
    }
    s
}

fn matrix_text<T: std::fmt::Display + Copy>(m: &Matrix<T>, f: Format) -> String {
    match f {
        Format::Csv => csv(m),
        _ => m.to_string(),
    }
}

fn indented<T: std::fmt::Display + Copy>(m: &Matrix<T>, pad: &str) -> String {
    m.to_string()
        .lines()
        .map(|l| format!("{pad}{l}\n"))
        .collect()
}

#[derive(Serialize)]
struct MatrixDoc<'a, T> {
    schema: &'static str,
    #[serde(rename = "type")]
    mtype: MatrixType,
    n: usize,
    stage: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    convention: Option<SignConvention>,
    rows: &'a [Vec<T>],
}

pub fn base(b: &BaseMatrix, f: Format) -> String {
    match f {
        Format::Json => json(&MatrixDoc {
            schema: MATRIX_SCHEMA,
            mtype: b.mtype(),
            n: b.order(),
            stage: "base",
            convention: None,
            rows: &b.entries().to_rows(),
        }),
        _ => matrix_text(b.entries(), f),
    }
}

pub fn sign(m: &SignMatrix, f: Format) -> String {
    match f {
        Format::Json => json(&MatrixDoc {
            schema: MATRIX_SCHEMA,
            mtype: m.mtype(),
            n: m.order(),
            stage: "sign",
            convention: Some(m.convention()),
            rows: &m.entries().to_rows(),
        }),
        _ => matrix_text(m.entries(), f),
    }
}

fn occurrence_name(o: Occurrence) -> &'static str {
    match o {
        Occurrence::Realized => "realized",
        Occurrence::TrivialOnly => "trivial only",
        Occurrence::Absent => "absent",
    }
}

#[derive(Serialize)]
struct RealizedValue {
    value: i64,
    pairs: Vec<(usize, usize)>,
}

#[derive(Serialize)]
struct PairDoc {
    thetas: (usize, usize),
    values: (i64, i64),
    sum: i64,
    occurrence: (&'static str, &'static str),
}

#[derive(Serialize)]
struct OrthoDoc {
    schema: &'static str,
    #[serde(rename = "type")]
    mtype: MatrixType,
    n: usize,
    convention: SignConvention,
    theoretical: Vec<i64>,
    spectrum_sum: i64,
    realized: Vec<RealizedValue>,
    missing: Vec<i64>,
    pairs: Vec<PairDoc>,
    self_product: i64,
    first_row_product: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gram: Option<Vec<Vec<i64>>>,
}

fn join<T: std::fmt::Display>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn ortho(r: &OrthoReport, convention: SignConvention, with_gram: bool, f: Format) -> String {
    let pairs: Vec<PairDoc> = r
        .pair_occurrence
        .iter()
        .map(|p| PairDoc {
            thetas: p.pair.thetas,
            values: p.pair.values,
            sum: p.pair.sum(),
            occurrence: (
                occurrence_name(p.occurrence.0),
                occurrence_name(p.occurrence.1),
            ),
        })
        .collect();
    let sum: i64 = r.theoretical.iter().sum();
    if f == Format::Json {
        return json(&OrthoDoc {
            schema: ORTHO_SCHEMA,
            mtype: r.mtype,
            n: r.n,
            convention,
            theoretical: r.theoretical.clone(),
            spectrum_sum: sum,
            realized: r
                .realized
                .iter()
                .map(|(&value, pairs)| RealizedValue {
                    value,
                    pairs: pairs.clone(),
                })
                .collect(),
            missing: r.missing.clone(),
            pairs,
            self_product: r.trivial.self_product,
            first_row_product: r.trivial.first_row_product,
            gram: with_gram.then(|| r.gram.to_rows()),
        });
    }
    let mut s = String::new();
    writeln!(s, "{} n={} ({convention} convention)", r.mtype, r.n).unwrap();
    writeln!(s, "theoretical spectrum: {}", join(&r.theoretical)).unwrap();
    writeln!(s, "spectrum sum: {sum}").unwrap();
    writeln!(s, "realized:").unwrap();
    for (value, at) in &r.realized {
        let list = join(at.iter().map(|(i, j)| format!("({i},{j})")));
        writeln!(s, "  {value}: {list}").unwrap();
    }
    let missing = if r.missing.is_empty() {
        "none".to_string()
    } else {
        join(&r.missing)
    };
    writeln!(s, "missing: {missing}").unwrap();
    match r.trivial.first_row_product {
        Some(x) => writeln!(s, "trivial: self {}, first row {x}", r.trivial.self_product),
        None => writeln!(s, "trivial: self {}", r.trivial.self_product),
    }
    .unwrap();
    writeln!(s, "orthogonal pairs:").unwrap();
    for p in &pairs {
        writeln!(
            s,
            "  ({}, {}) thetas ({}, {}) sum {} [{} / {}]",
            p.values.0, p.values.1, p.thetas.0, p.thetas.1, p.sum, p.occurrence.0, p.occurrence.1
        )
        .unwrap();
    }
    if with_gram {
        writeln!(s, "gram:").unwrap();
        s.push_str(&indented(&r.gram, "  "));
    }
    s
}

#[derive(Serialize)]
struct DesignDoc<'a> {
    schema: &'static str,
    #[serde(rename = "type")]
    mtype: MatrixType,
    n: usize,
    convention: SignConvention,
    v: usize,
    b: usize,
    r: usize,
    k: usize,
    lambda_bound: Option<i64>,
    incidence: Vec<Vec<u8>>,
    classes: &'a [AssociateClass],
    scheme_valid: bool,
    witness: Option<&'a SchemeWitness>,
    identities: &'a [IdentityCheck],
    checks: &'a [IdentityCheck],
    pass: bool,
}

pub fn design(m: &SignMatrix, d: &PBIBDesign, report: &ValidationReport, f: Format) -> String {
    let params = d.parameters();
    if f == Format::Json {
        return json(&DesignDoc {
            schema: DESIGN_SCHEMA,
            mtype: m.mtype(),
            n: m.order(),
            convention: m.convention(),
            v: params.v,
            b: params.b,
            r: params.r,
            k: params.k,
            lambda_bound: params.lambda_bound,
            incidence: d.incidence.cells().to_rows(),
            classes: &d.scheme.classes,
            scheme_valid: report.scheme_valid,
            witness: report.witness.as_ref(),
            identities: &d.identities,
            checks: &report.checks,
            pass: report.pass,
        });
    }
    let mut s = String::new();
    writeln!(s, "{} n={} design", m.mtype(), m.order()).unwrap();
    writeln!(
        s,
        "v = {}, b = {}, r = {}, k = {}",
        params.v, params.b, params.r, params.k
    )
    .unwrap();
    writeln!(s, "incidence:").unwrap();
    s.push_str(&indented(d.incidence.cells(), "  "));
    writeln!(s, "classes ({}):", d.scheme.class_count()).unwrap();
    for c in &d.scheme.classes {
        writeln!(
            s,
            "  class {}: lambda = {}, n = {}",
            c.index, c.lambda, c.valence
        )
        .unwrap();
        writeln!(s, "    P_{}:", c.index).unwrap();
        for row in &c.intersection {
            writeln!(s, "      {}", join(row)).unwrap();
        }
    }
    writeln!(s, "checks:").unwrap();
    for c in &report.checks {
        writeln!(s, "  {c}").unwrap();
    }
    match &report.witness {
        None => writeln!(s, "association scheme: valid"),
        Some(w) => writeln!(s, "association scheme: INVALID, {w}"),
    }
    .unwrap();
    writeln!(s, "verdict: {}", if report.pass { "PASS" } else { "FAIL" }).unwrap();
    s
}

#[derive(Serialize)]
struct GraphDoc {
    schema: &'static str,
    #[serde(rename = "type")]
    mtype: MatrixType,
    n: usize,
    treatments: usize,
    blocks: usize,
    edges: Vec<(String, String)>,
    edge_count: usize,
    regular: bool,
    degree: Option<usize>,
    components: usize,
}

fn edge_names(g: &BipartiteGraph) -> Vec<(String, String)> {
    g.edges()
        .iter()
        .map(|&(t, b)| (format!("t{t}"), format!("b{b}")))
        .collect()
}

pub fn graph(m: &SignMatrix, g: &BipartiteGraph, f: Format) -> String {
    let edges = edge_names(g);
    match f {
        Format::Dot => {
            let mut s = String::from("graph G {\n");
            for (t, b) in &edges {
                writeln!(s, "  {t} -- {b};").unwrap();
            }
            s.push_str("}\n");
            s
        }
        Format::Json => {
            let reg = check_regular(g);
            json(&GraphDoc {
                schema: GRAPH_SCHEMA,
                mtype: m.mtype(),
                n: m.order(),
                treatments: g.left_size(),
                blocks: g.right_size(),
                edge_count: edges.len(),
                edges,
                regular: reg.is_regular,
                degree: reg.degree,
                components: connected_components(g).count,
            })
        }
        _ => {
            let reg = check_regular(g);
            let mut s = String::new();
            writeln!(s, "{} n={} bipartite graph", m.mtype(), m.order()).unwrap();
            writeln!(
                s,
                "vertices: {} treatments + {} blocks, edges: {}",
                g.left_size(),
                g.right_size(),
                edges.len()
            )
            .unwrap();
            match reg.degree {
                Some(d) => writeln!(s, "regular: yes, degree {d}"),
                None => writeln!(s, "regular: no"),
            }
            .unwrap();
            writeln!(s, "components: {}", connected_components(g).count).unwrap();
            writeln!(s, "edges:").unwrap();
            for (t, b) in &edges {
                writeln!(s, "  {t} -- {b}").unwrap();
            }
            s
        }
    }
}

#[derive(Serialize)]
struct VerifyDoc<'a> {
    schema: &'static str,
    pass: bool,
    orders: &'a [OrderReport],
}

pub fn verify(reports: &[OrderReport], verbose: bool, f: Format) -> String {
    let pass = reports.iter().all(|r| r.passed());
    if f == Format::Json {
        return json(&VerifyDoc {
            schema: VERIFY_SCHEMA,
            pass,
            orders: reports,
        });
    }
    let mut s = String::new();
    for r in reports {
        s.push_str(&r.to_string());
        if verbose {
            for c in &r.checks {
                let mark = if c.pass { "ok" } else { "FAIL" };
                if c.detail.is_empty() {
                    writeln!(s, "  {mark} {}", c.name).unwrap();
                } else {
                    writeln!(s, "  {mark} {}: {}", c.name, c.detail).unwrap();
                }
            }
        }
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    writeln!(
        s,
        "{} orders checked, {} failed: {}",
        reports.len(),
        failed,
        if pass { "PASS" } else { "FAIL" }
    )
    .unwrap();
    s
}

#[derive(Serialize)]
struct ErrataDoc<'a> {
    schema: &'static str,
    errata: &'a [Erratum],
}

pub fn errata(list: &[Erratum], f: Format) -> String {
    if f == Format::Json {
        return json(&ErrataDoc {
            schema: ERRATA_SCHEMA,
            errata: list,
        });
    }
    let mut s = String::new();
    for e in list {
        writeln!(s, "{}: {}", e.id, e.subject).unwrap();
        writeln!(s, "  stated:   {}", e.stated).unwrap();
        writeln!(s, "  computed: {}", e.computed).unwrap();
    }
    s
}
