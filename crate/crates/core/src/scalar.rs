//! Floating point abstraction shared by every evaluation routine.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// Real scalar type the library is generic over (`f32`, `f64`).
pub trait Scalar:
    Float + FromPrimitive + ToPrimitive + Sum + Debug + Display + Send + Sync + 'static
{
    /// Converts an `f64` literal.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable")
    }

    /// Converts a small integer (degrees, indices).
    #[inline]
    fn int(v: usize) -> Self {
        Self::from_usize(v).expect("integer representable")
    }

    /// Convergence tolerance for iterative routines at this precision.
    #[inline]
    fn iteration_tolerance() -> Self {
        Self::lit(1e-15).max(Self::epsilon() * Self::lit(4.0))
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
