//! Exact computational toolkit for Leibniz triple systems.
//!
//! The crate verifies the defining identities of triple systems, right
//! Leibniz algebras, their representations and (relative) Rota-Baxter
//! operators; builds every induced structure (semidirect products, operator
//! lifts, the triple system and representation induced by a relative
//! operator, the Leibniz-to-triple-system functor); assembles the attached
//! cochain complexes as exact matrices; and decides extendability of
//! truncated operator deformations through the obstruction cochain.
//!
//! All arithmetic is exact. The core is generic over any exact field scalar
//! (see [`scalar::Scalar`]); the shipped instantiation is [`Q`],
//! arbitrary-precision rationals, and the `Q*` aliases below fix it across
//! the API. Basis indices are 1-based in file formats and rendered output,
//! 0-based in code.

// Tensor contractions here are written as explicit index loops on purpose.
#![allow(clippy::needless_range_loop)]

pub mod cohomology;
pub mod deform;
pub mod error;
pub mod fixtures;
pub mod json;
pub mod linalg;
pub mod lts;
pub mod op;
pub mod rep;
pub mod report;
pub mod scalar;

pub use error::{Error, Result};
pub use report::{Report, Violation};
pub use scalar::Scalar;

/// The rational scalar every shipped tool runs on.
pub type Q = num_rational::BigRational;

/// Concrete aliases over [`Q`].
pub type QMatrix = linalg::Matrix<Q>;
pub type QVector = linalg::Vector<Q>;
pub type QLts = lts::Lts<Q>;
pub type QLeibnizAlgebra = lts::LeibnizAlgebra<Q>;
pub type QLinearMap = lts::LinearMap<Q>;
pub type QRepresentation = rep::Representation<Q>;
pub type QLeibnizRepresentation = rep::LeibnizRepresentation<Q>;
pub type QRbContext = op::RbContext<Q>;
pub type QRelRb = op::RelRb<Q>;
pub type QComplex = cohomology::ComplexMatrices<Q>;
pub type QDeformationSeries = deform::DeformationSeries<Q>;
