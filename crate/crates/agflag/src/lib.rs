//! Exact toolkit for complete flags of one-point AG codes.
//!
//! The crate builds evaluation matrices over built-in curve models, selects
//! complete flags greedily, decides the isometry-dual property with explicit
//! dualizing vectors, analyzes puncturing through maximum sparse ideals of
//! numerical semigroups, and reproduces the associated matrices, tables and
//! counts exactly over small finite fields.

pub mod curve;
pub mod flag;
pub mod gf;
pub mod mat;
pub mod puncture;
pub mod repro;
pub mod rmflag;
pub mod semigroup;

pub use curve::CurveModel;
pub use flag::{CompleteFlag, IsometryDualVerdict};
pub use gf::{Field, FieldElement};
pub use mat::Matrix;
pub use semigroup::NumericalSemigroup;
