//! Interior hp-FEM shape functions on reference elements together with
//! closed-form biorthogonal (dual) functions for H¹ and H(curl).
//!
//! Everything is generic over [`Scalar`] (`f32` or `f64`); the aliases at
//! the crate root fix the scalar to `f64`.
//!
//! ```
//! use hpdual::{gram_for, verify_identity, DualMode, ElementKind, FamilySpec, GramKind, Space};
//!
//! let spec = FamilySpec::new(ElementKind::Triangle, Space::HCurl, 4).unwrap();
//! let g: hpdual::GramMatrix = gram_for(spec, GramKind::Combined, DualMode::Oracle, 4).unwrap();
//! assert!(verify_identity(&g, 1e-10).pass);
//! ```

pub mod audit;
pub mod biorth;
pub mod error;
pub mod family;
pub mod h1;
pub mod hcurl;
pub mod index;
pub mod orthopoly;
pub mod project;
pub mod refelem;
pub mod scalar;

pub use biorth::{
    assemble_gram, dual_family, dual_terms, gram_for, solve_recombination, sparsity_pattern,
    verify_biorthogonality, verify_identity, CheckMode, DualMode, GramKind, SparsityPattern,
    DEFAULT_MARGIN,
};
pub use error::{Error, Result};
pub use family::{BasisFamily, FamilySpec, Role, ShapeFamily};
pub use index::{ShapeIndex, Space, Tag};
pub use project::{project, projection_matrix_diagnostic, TestFunction};
pub use refelem::ElementKind;
pub use scalar::Scalar;

pub type GramMatrix = biorth::GramMatrix<f64>;
pub type BiorthReport = biorth::BiorthReport<f64>;
pub type RecombinationSpec = biorth::RecombinationSpec<f64>;
pub type ProjectionResult = project::ProjectionResult<f64>;
pub type Projector = project::Projector<f64>;
pub type CombinedFamily = family::CombinedFamily<f64>;
pub type QuadratureRule1D = orthopoly::QuadratureRule1D<f64>;
pub type ElementQuadrature = refelem::ElementQuadrature<f64>;
pub type ReferenceElement = refelem::ReferenceElement<f64>;
pub type CollapsedPoint = refelem::CollapsedPoint<f64>;
pub type PolynomialSpec = orthopoly::PolynomialSpec<f64>;
pub type VectorValue = hcurl::VectorValue<f64>;
pub type AuditRow = audit::AuditRow<f64>;
