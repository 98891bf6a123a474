//! Numerical verification of the partial-fraction sum rule
//!
//!   d/dz ln K(z) = sum_{n>=1} 2z / (z^2 + lambda_n^2),
//!
//! the identity the whole method rests on. The left side is evaluated
//! through the overflow-free kernel decomposition, the right side by summing
//! over computed roots, optionally with an analytic tail estimate fitted
//! from the root asymptote.

use crate::math;
use crate::models::BoundaryModel;
use crate::roots::RootList;

use core::f64::consts::PI;

/// d/dz ln K(z) via the decomposition
/// ln K = ln D + ln(1 + R e^{-sigma z}); never exponentiates large z.
pub fn log_deriv_k(model: &BoundaryModel, z: f64) -> f64 {
    let sigma = model.sigma();
    let r = model.reflection(z);
    let rd = model.reflection_deriv(z);
    let e = math::exp(-sigma * z);
    model.log_growth_deriv(z) + (rd - sigma * r) * e / (1.0 + r * e)
}

/// Root asymptote lambda_n ~ (n + c) * pi * d, fitted from the last few
/// computed roots; turns the truncated partial-fraction sum into an
/// estimate of the full series.
#[derive(Debug, Clone, PartialEq)]
pub struct TailModel {
    /// Root density scale: mean spacing / pi.
    density: f64,
    /// Index offset of the asymptote.
    offset: f64,
    /// First index (1-based) covered by the tail.
    start_index: usize,
}

impl TailModel {
    /// Fit from the last up-to-10 roots of the list.
    pub fn fit(roots: &RootList) -> Option<TailModel> {
        let r = roots.roots();
        let n = r.len();
        if n < 2 {
            return None;
        }
        let m = n.min(10);
        let spacing = (r[n - 1] - r[n - m]) / (m - 1) as f64;
        let density = spacing / PI;
        let offset = r[n - 1] / spacing - n as f64;
        Some(TailModel {
            density,
            offset,
            start_index: n + 1,
        })
    }

    pub fn density(&self) -> f64 {
        self.density
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn start_index(&self) -> usize {
        self.start_index
    }

    /// Midpoint-rule estimate of sum_{n >= start} 2z / (z^2 + lambda_n^2)
    /// with lambda_n = (n + offset) pi density:
    ///
    ///   int_{start-1/2}^inf 2z dn / (z^2 + ((n+c) pi d)^2)
    ///     = (2 / (pi d)) (pi/2 - atan(lambda_{start-1/2} / z)).
    pub fn tail_sum(&self, z: f64) -> f64 {
        let spacing = PI * self.density;
        let lam = (self.start_index as f64 - 0.5 + self.offset) * spacing;
        (2.0 / spacing) * (PI / 2.0 - math::atan(lam / z))
    }
}

/// sum_{n<=N} 2z/(z^2+lambda_n^2) over the computed roots, plus the analytic
/// tail estimate when supplied.
pub fn partial_fraction_sum(roots: &RootList, tail: Option<&TailModel>, z: f64) -> f64 {
    let mut sum = 0.0;
    for &lam in roots.roots() {
        sum += 2.0 * z / (z * z + lam * lam);
    }
    if let Some(t) = tail {
        sum += t.tail_sum(z);
    }
    sum
}

/// |d/dz ln K - truncated partial-fraction sum| over the first `n_roots`
/// roots, no tail. Decays like C/N in the truncation count.
pub fn mittag_leffler_residual(
    model: &BoundaryModel,
    z: f64,
    n_roots: usize,
) -> Result<f64, crate::roots::RootError> {
    let cutoff = (n_roots as f64 + 2.0) * model.root_spacing();
    let list = crate::roots::find_roots(model, cutoff, 1e-12)?;
    let take = n_roots.min(list.len());
    let mut sum = 0.0;
    for &lam in &list.roots()[..take] {
        sum += 2.0 * z / (z * z + lam * lam);
    }
    Ok(math::abs(log_deriv_k(model, z) - sum))
}
