//! Exact computer algebra for finite-dimensional associative algebras
//! presented by quivers with relations: module categories, almost split
//! sequences and Auslander-Reiten quivers, stable slice analysis, and the
//! trivial-extension constructions relating self-injective algebras to
//! tilted algebras.
//!
//! All arithmetic is exact, over `Q` (arbitrary precision) or `GF(p)`.
//! Data-parallel bulk operations (slice classification, verification sweeps,
//! isomorphism searches) use rayon when the `parallel` feature is enabled
//! (the default) and fall back to sequential loops otherwise.

pub mod algebra;
pub mod ar;
pub mod constructions;
pub mod dot;
pub mod error;
pub mod field;
pub mod homalg;
pub mod matrix;
pub mod module;
pub mod par;
pub mod poly;
pub mod quiver;
pub mod slice;

pub use error::{ArcatError, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use matrix::{Mat, Subspace};
