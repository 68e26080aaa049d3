//! `f64` functions that `core` does not provide.

pub(crate) use libm::{acos, acosh, asinh, atan2, cos, cosh, fma, sin, sinh, sqrt};

#[inline]
pub(crate) fn abs(x: f64) -> f64 {
    libm::fabs(x)
}
