//! Scalar abstraction: the whole engine is generic over the real field
//! backing its complex arithmetic (`f32` or `f64`).

use nalgebra::RealField;
use num_complex::Complex;
use num_traits::FromPrimitive;

/// Real scalar the engine computes over.
pub trait Real: RealField + FromPrimitive + Copy {
    /// Shorthand for lossy conversion from `f64` literals.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("finite literal")
    }
    fn to_f64(self) -> f64;
}

impl Real for f32 {
    fn to_f64(self) -> f64 {
        self as f64
    }
}
impl Real for f64 {
    fn to_f64(self) -> f64 {
        self
    }
}

/// Complex scalar over a chosen real field.
pub type Cx<S> = Complex<S>;

pub fn cx<S: Real>(re: f64, im: f64) -> Cx<S> {
    Complex::new(S::lit(re), S::lit(im))
}

pub fn one<S: Real>() -> Cx<S> {
    Complex::new(S::one(), S::zero())
}

pub fn zero<S: Real>() -> Cx<S> {
    Complex::new(S::zero(), S::zero())
}

/// Absolute value of a complex scalar (generic over the real field).
pub fn cabs<S: Real>(z: Cx<S>) -> S {
    (z.re * z.re + z.im * z.im).sqrt()
}

/// Numerical tolerances used by the engine.
///
/// `eps_num` guards elementwise arithmetic comparisons; `eps_check` is the
/// looser budget for residuals of long composites in the axiom suite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance<S: Real> {
    pub eps_num: S,
    pub eps_check: S,
}

impl<S: Real> Default for Tolerance<S> {
    fn default() -> Self {
        Tolerance {
            eps_num: S::lit(1e-9),
            eps_check: S::lit(1e-8),
        }
    }
}

impl<S: Real> Tolerance<S> {
    pub fn with_check(eps_check: f64) -> Self {
        Tolerance {
            eps_num: S::lit(1e-9),
            eps_check: S::lit(eps_check),
        }
    }
}
