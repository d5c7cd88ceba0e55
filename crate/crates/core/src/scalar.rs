//! Scalar abstraction: every numerical kernel in this crate is generic over a
//! floating-point type implementing [`Real`] (in practice `f32` or `f64`).

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + Sum + Debug + Display + LowerExp + Send + Sync + 'static
{
    /// Shorthand for converting an `f64` constant (coefficient tables,
    /// tolerances) into `Self`.
    #[inline]
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("constant not representable in scalar type")
    }

    /// Shorthand for converting a `usize` (counts, indices) into `Self`.
    #[inline]
    fn of_usize(v: usize) -> Self {
        Self::from_usize(v).expect("count not representable in scalar type")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// Complex number over the crate scalar.
pub type Cplx<R> = num_complex::Complex<R>;
