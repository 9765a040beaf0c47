//! Scalar helpers that work without `std`.

pub use libm::{acos, atan2, cos, exp, fabs, hypot, log2, sin, sqrt};

/// Binary entropy `-x log2 x - (1-x) log2(1-x)` with `0 log 0 = 0`.
pub fn binary_entropy(x: f64) -> f64 {
    xlog2x(x) + xlog2x(1.0 - x)
}

/// `-x log2 x`, zero at `x <= 0`.
pub fn xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        -x * log2(x)
    }
}

pub fn clamp_unit(x: f64) -> f64 {
    x.clamp(-1.0, 1.0)
}
