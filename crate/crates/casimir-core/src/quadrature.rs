//! Adaptive evaluation of the regularized semi-infinite kernel integral
//!
//!   I(mu) = int_mu^inf z sqrt(z^2 - mu^2) ln(1 + R(z) e^{-sigma z}) dz.
//!
//! The square-root branch point at z = mu is removed by the substitution
//! z = sqrt(mu^2 + u^2), under which z sqrt(z^2-mu^2) dz = u^2 du and the
//! integrand is polynomially smooth at u = 0 (and the map is the identity at
//! mu = 0). The infinite tail is cut at a point certified by [`tail_bound`].
//!
//! Panels are integrated with a 15-point Gauss-Legendre rule; the local
//! error estimate is the difference against the two-half refinement, and
//! panels are halved until the local estimate fits the locally apportioned
//! tolerance.

use core::fmt;

use crate::math;
use crate::models::BoundaryModel;

/// Tolerances and truncation policy for the kernel integral.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureSpec {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// Upper cut Z* of the z-integral; `None` selects the smallest cut whose
    /// certified tail bound is below `abs_tol / 2` (and at least mu + 25 so
    /// the discarded tail is always negligible relative to the result).
    pub truncation: Option<f64>,
    /// Panel budget for the adaptive refinement.
    pub max_subdivisions: u32,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        QuadratureSpec {
            rel_tol: 1e-10,
            abs_tol: 1e-14,
            truncation: None,
            max_subdivisions: 10_000,
        }
    }
}

/// Quadrature failure: the subdivision budget ran out before the tolerance
/// was met. Carries the best value and the achieved error estimate.
#[derive(Debug, Clone, PartialEq)]
pub struct ToleranceNotMet {
    pub value: f64,
    pub error_estimate: f64,
}

impl fmt::Display for ToleranceNotMet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "quadrature tolerance not met: value {:e}, achieved error {:e}",
            self.value, self.error_estimate
        )
    }
}

/// Upper bound on the discarded tail |int_Z^inf z sqrt(z^2-mu^2)
/// |ln(1 + R e^{-sigma z})| dz| for any kernel with |R| <= 1, from
/// |ln(1+x)| <= |x|/(1-|x|) and z sqrt(z^2-mu^2) <= z^2:
///
///   bound = e^{-sigma Z} / (1 - e^{-sigma Z}) * (Z^2/sigma + 2Z/sigma^2 + 2/sigma^3)
pub fn tail_bound(z_cut: f64, sigma: f64) -> f64 {
    let e = math::exp(-sigma * z_cut);
    e / (1.0 - e) * (z_cut * z_cut / sigma + 2.0 * z_cut / (sigma * sigma) + 2.0 / (sigma * sigma * sigma))
}

/// I(mu) for the model's kernel, with an error estimate that also includes
/// the certified truncation bound.
pub fn integrate_kernel(
    model: &BoundaryModel,
    spec: &QuadratureSpec,
) -> Result<(f64, f64), ToleranceNotMet> {
    let mu = model.mu();
    let sigma = model.sigma();
    let z_cut = spec
        .truncation
        .unwrap_or_else(|| auto_truncation(mu, sigma, spec.abs_tol));
    let tail = tail_bound(z_cut, sigma);

    // upper limit in the substituted variable
    let u_max = math::sqrt(z_cut * z_cut - mu * mu);
    let f = |u: f64| {
        let z = math::sqrt(mu * mu + u * u);
        u * u * math::ln_1p(model.reflection(z) * math::exp(-sigma * z))
    };

    let (value, err, met) = adaptive(&f, 0.0, u_max, spec);
    let total_err = err + tail;
    if !met {
        return Err(ToleranceNotMet {
            value,
            error_estimate: total_err,
        });
    }
    Ok((value, total_err))
}

/// Same integral through the alternative substitution z = mu cosh t
/// (mu > 0 only), under which z sqrt(z^2-mu^2) dz = mu^3 cosh t sinh^2 t dt.
/// Exists as an independent cross-check of the endpoint treatment.
pub fn integrate_kernel_cosh(
    model: &BoundaryModel,
    spec: &QuadratureSpec,
) -> Result<(f64, f64), ToleranceNotMet> {
    let mu = model.mu();
    assert!(mu > 0.0, "cosh substitution needs mu > 0");
    let sigma = model.sigma();
    let z_cut = spec
        .truncation
        .unwrap_or_else(|| auto_truncation(mu, sigma, spec.abs_tol));
    let tail = tail_bound(z_cut, sigma);

    let t_max = math::ln(z_cut / mu + math::sqrt(z_cut * z_cut / (mu * mu) - 1.0));
    let f = |t: f64| {
        let z = mu * math::cosh(t);
        let sh = math::sinh(t);
        mu * mu * mu * math::cosh(t) * sh * sh
            * math::ln_1p(model.reflection(z) * math::exp(-sigma * z))
    };

    let (value, err, met) = adaptive(&f, 0.0, t_max, spec);
    let total_err = err + tail;
    if !met {
        return Err(ToleranceNotMet {
            value,
            error_estimate: total_err,
        });
    }
    Ok((value, total_err))
}

/// Smallest cut with a certified tail below abs_tol/2, floored at mu + 25
/// so the tail is negligible relative to the e^{-sigma mu} scale of the
/// integral itself.
fn auto_truncation(mu: f64, sigma: f64, abs_tol: f64) -> f64 {
    let mut z = mu + 25.0;
    while tail_bound(z, sigma) > 0.5 * abs_tol && z < mu + 800.0 {
        z += 1.0;
    }
    z
}

/// Adaptive driver: a first fixed pass sets the scale for the relative
/// tolerance, then panels are halved until each local estimate fits.
/// Returns (value, error estimate, tolerance met).
fn adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, spec: &QuadratureSpec) -> (f64, f64, bool) {
    // scale estimate from a fixed 16-panel pass
    let mut rough = 0.0;
    let w = (b - a) / 16.0;
    for i in 0..16 {
        rough += gl15(f, a + w * i as f64, a + w * (i + 1) as f64);
    }
    let target = spec.abs_tol.max(spec.rel_tol * math::abs(rough));

    let mut budget = spec.max_subdivisions;
    let mut met = true;
    let whole = gl15(f, a, b);
    let (value, err) = refine(f, a, b, whole, target, 48, &mut budget, &mut met);
    (value, err, met)
}

fn refine<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    budget: &mut u32,
    met: &mut bool,
) -> (f64, f64) {
    let m = 0.5 * (a + b);
    let left = gl15(f, a, m);
    let right = gl15(f, m, b);
    let refined = left + right;
    let err = math::abs(whole - refined);
    if err <= tol {
        return (refined, err);
    }
    if depth == 0 || *budget == 0 {
        *met = false;
        return (refined, err);
    }
    *budget -= 1;
    let (lv, le) = refine(f, a, m, left, 0.5 * tol, depth - 1, budget, met);
    let (rv, re) = refine(f, m, b, right, 0.5 * tol, depth - 1, budget, met);
    (lv + rv, le + re)
}

/// 15-point Gauss-Legendre nodes and weights on [-1, 1], positive half.
/// Nodes are roots of P_15; see `tests/oracles.rs` for the Newton-iteration
/// regeneration check.
const GL15_X: [f64; 8] = [
    0.0,
    0.20119409399743451,
    0.39415134707756339,
    0.57097217260853883,
    0.72441773136017007,
    0.84820658341042721,
    0.93727339240070595,
    0.98799251802048538,
];
const GL15_W: [f64; 8] = [
    0.2025782419255609,
    0.19843148532711125,
    0.18616100001556188,
    0.16626920581699378,
    0.13957067792615391,
    0.10715922046717177,
    0.070366047488108069,
    0.030753241996118647,
];

fn gl15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let mut sum = GL15_W[0] * f(c);
    for i in 1..8 {
        let d = h * GL15_X[i];
        sum += GL15_W[i] * (f(c + d) + f(c - d));
    }
    sum * h
}
