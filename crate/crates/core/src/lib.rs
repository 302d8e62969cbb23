//! Exact-arithmetic verification of entwining structures, the corings
//! they induce, and Hopf-Galois data, for finite-dimensional (optionally
//! Z/2-graded) vector spaces over `Q` or a prime field.
//!
//! Everything is a matrix identity: structures are bundles of structure
//! constants, axioms are compared composite by composite with no
//! tolerances, and every verdict comes with the first failing basis
//! vector as a witness.

pub mod entwining;
pub mod field;
pub mod flatness;
pub mod galois;
pub mod generate;
pub mod graded;
pub mod hopf;
pub mod matrix;
pub mod presentation;
pub mod quotient;
pub mod report;
pub mod structures;

pub use field::{FieldError, FieldSpec, Scalar};
pub use graded::{braiding, BraidingKind, Degree, LinMap, MonoidalCtx, Obj, StructureError};
pub use matrix::Matrix;
pub use quotient::{quotient_by, QuotientPresentation};
pub use report::{Check, Report, Witness};
