//! Floating-point scalar abstraction for the numeric kernels.
//!
//! The geometric and analytic kernels are generic over [`Scalar`] so they run
//! in `f32` or `f64`; the crate-level alias [`crate::Real`] pins `f64` for the
//! CLI and report layer. Exact data (Clifford matrices, Bernoulli numbers)
//! does not go through this trait.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive, ToPrimitive};

pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Debug + Display + Default + Send + Sync + 'static
{
    /// Shorthand for converting literal constants.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("finite f64 converts to Scalar")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().expect("Scalar converts to f64")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
