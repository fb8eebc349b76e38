//! M-matrices of Type I and Type II built from modular multiplication
//! tables, their orthogonal numbers, and the partially balanced incomplete
//! block designs and bipartite graphs derived from them.
//!
//! Type I matrices exist for prime orders `n`; entry `(i, j)` of the base
//! matrix is `1 + ((i-1)(j-1) mod n)`. Type II matrices exist when `n + 1`
//! is prime; entry `(i, j)` is `i·j mod (n+1)`. A sign convention maps each
//! base entry to `±1`.
//!
//! ```
//! use mmatrix::{m_matrix, analyze, MatrixType, SignConvention};
//!
//! let m = m_matrix(5, MatrixType::TypeI, SignConvention::Standard).unwrap();
//! let report = analyze(&m).unwrap();
//! assert_eq!(report.theoretical, vec![-3, 1, 5]);
//! ```

pub mod design;
pub mod errata;
pub mod error;
pub mod graph;
pub mod matrix;
pub mod modmat;
pub mod oracle;
pub mod order;
pub mod ortho;
pub mod signmat;
pub mod verify;

pub use design::{
    build_design, check_identities, concurrence_matrix, incidence, infer_scheme, validate_pbib,
    AssociateClass, AssociationScheme, DesignParameters, IdentityCheck, IncidenceMatrix,
    PBIBDesign, Provenance, Relation, SchemeWitness, ValidationReport,
};
pub use error::{Error, Result};
pub use graph::{
    bipartite_graph, check_regular, connected_components, BipartiteGraph, Components, Regularity,
    Vertex,
};
pub use matrix::Matrix;
pub use modmat::{base_matrix, diagonal, diagonal_closed_form, BaseMatrix};
pub use order::{admissible_orders, is_admissible_order, is_prime, MatrixType};
pub use ortho::{
    analyze, gram, orthogonal_number, orthogonal_pairs, theoretical_spectrum, OrthoReport,
    OrthogonalPair,
};
pub use signmat::{determinant, m_matrix, sign_matrix, SignConvention, SignMatrix};
pub use verify::{verify_order, verify_range, OrderReport};
