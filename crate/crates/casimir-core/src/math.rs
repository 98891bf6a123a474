//! Thin wrappers over `libm` plus a few numerically careful helpers.
//!
//! The crate is `no_std`; every transcendental call goes through here so the
//! rest of the code never touches `std` float intrinsics.

pub(crate) fn exp(x: f64) -> f64 {
    libm::exp(x)
}

pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

/// ln(1 + x) without cancellation for small x.
pub(crate) fn ln_1p(x: f64) -> f64 {
    libm::log1p(x)
}

pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

pub(crate) fn sin(x: f64) -> f64 {
    libm::sin(x)
}

pub(crate) fn cos(x: f64) -> f64 {
    libm::cos(x)
}

pub(crate) fn sinh(x: f64) -> f64 {
    libm::sinh(x)
}

pub(crate) fn cosh(x: f64) -> f64 {
    libm::cosh(x)
}

pub(crate) fn atan(x: f64) -> f64 {
    libm::atan(x)
}

pub(crate) fn floor(x: f64) -> f64 {
    libm::floor(x)
}

pub(crate) fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

/// Switch point below which sinc-like ratios use their Taylor series.
const TAYLOR_SWITCH: f64 = 1e-3;

/// sin(x)/x, stable at the origin.
///
/// For |x| < 1e-3 the 4-term Taylor series is exact to well below 1e-24.
pub fn sinc(x: f64) -> f64 {
    if abs(x) < TAYLOR_SWITCH {
        let x2 = x * x;
        1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0))
    } else {
        sin(x) / x
    }
}

/// sinh(x)/x, stable at the origin.
pub fn sinhc(x: f64) -> f64 {
    if abs(x) < TAYLOR_SWITCH {
        let x2 = x * x;
        1.0 + x2 / 6.0 * (1.0 + x2 / 20.0 * (1.0 + x2 / 42.0))
    } else {
        sinh(x) / x
    }
}
