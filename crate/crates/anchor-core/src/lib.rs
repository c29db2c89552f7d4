//! Evaluation engine and verification suite for unitary anchored planar
//! algebras over braided unitary tensor categories.
//!
//! The crate is organized around the pipeline
//! tangle terms → backend linear algebra → categorified trace → anchored
//! planar algebras → the Δ and Λ constructions and their round trip.
//!
//! Core math is generic over the real scalar (`f32` or `f64`); the `f64`
//! aliases below are what the CLI and tests use.

pub mod catmodel;
pub mod error;
pub mod linalg;
pub mod scalar;
pub mod tangle;

pub mod adjunction;
pub mod apa;
pub mod delta;
pub mod lambda;

pub use error::{AnchorError, Result};
pub use scalar::{Cx, Real, Tolerance};

/// Default complex scalar.
pub type Cplx = num_complex::Complex<f64>;

/// Concrete `f64` instantiations of the core types.
pub type Backend64 = catmodel::Backend<f64>;
pub type Obj64 = catmodel::Obj<f64>;
pub type Mor64 = catmodel::Mor<f64>;
pub type Tolerance64 = scalar::Tolerance<f64>;
