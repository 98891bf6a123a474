//! Boundary and topology condition catalog.
//!
//! Each model bundles the ingredients the method needs: the eigenvalue
//! condition G whose positive roots are the mode eigenvalues, its
//! continuation K(z) = G(iz) to the imaginary axis, and the split
//! K(z) = D(z) (1 + R(z) e^{-sigma z}) into a divergent growth factor D and a
//! reflection kernel R. The growth factor carries the bulk and surface
//! divergences and is subtracted; only the reflection term is ever
//! integrated.
//!
//! The contour variable and transverse momentum of the derivation are
//! eliminated analytically; at runtime everything is a function of the
//! dimensionless imaginary momentum z, the dimensionless mass mu = m*l, and
//! the statistics factor alpha.

use alloc::string::String;
use core::fmt;

use crate::math;

/// Direct cosh/sinh evaluation of K is refused above this point; the
/// log-decomposition path has no such limit and is the canonical one.
pub const DIRECT_EVAL_LIMIT: f64 = 300.0;

/// Errors from model construction and evaluation.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelError {
    /// Name not in the catalog.
    UnknownModel(String),
    /// Parameter outside the supported domain.
    InvalidParameter(&'static str),
    /// Direct K evaluation would overflow; use the decomposition form.
    Overflow { z: f64 },
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::UnknownModel(name) => {
                write!(f, "unknown model '{name}'; known models: ")?;
                for (i, n) in CATALOG_NAMES.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{n}")?;
                }
                Ok(())
            }
            ModelError::InvalidParameter(msg) => write!(f, "{msg}"),
            ModelError::Overflow { z } => write!(
                f,
                "direct K evaluation refused at z = {z} (> {DIRECT_EVAL_LIMIT}); \
                 use the decomposition form"
            ),
        }
    }
}

/// Names accepted by [`BoundaryModel::by_name`].
pub const CATALOG_NAMES: [&str; 8] = [
    "mit",
    "dirichlet",
    "neumann",
    "mixed-dn",
    "robin",
    "periodic",
    "antiperiodic",
    "em",
];

/// Which eigencondition family a model belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    /// MIT bag fermion plates: G(z) = mu sin(z)/z + cos(z).
    Mit,
    /// Dirichlet scalar plates: roots at n*pi.
    Dirichlet,
    /// Neumann scalar plates: same spectrum as Dirichlet after removing the
    /// zero mode.
    Neumann,
    /// Dirichlet on one plate, Neumann on the other: roots at (n-1/2)*pi.
    MixedDn,
    /// Robin plates with lengths beta1, beta2 (in units of l).
    Robin,
    /// Periodic compactification of circumference l: roots at 2*pi*n,
    /// multiplicity 2.
    Periodic,
    /// Antiperiodic compactification: roots at (2n-1)*pi, multiplicity 2.
    Antiperiodic,
    /// Electromagnetic field between conductors, modeled as two massless
    /// Dirichlet polarizations.
    Em,
}

/// A catalog entry: eigencondition, continued kernel, and regularized
/// log-kernel ingredients for one boundary or topology condition.
///
/// Immutable after construction; every method is a pure function of its
/// arguments.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryModel {
    name: &'static str,
    kind: ModelKind,
    /// Internal-degrees statistics factor (fermion -4, real scalar +1,
    /// electromagnetic +2).
    alpha: f64,
    /// Physical modes per positive root: 1 for confined plates, 2 for
    /// periodic/antiperiodic compactification.
    multiplicity: u32,
    /// Kernel decay scale: exp(-sigma z); 2 for two plates, 1 for
    /// compactification.
    sigma: f64,
    /// Dimensionless mass mu = m*l.
    mu: f64,
    /// Robin lengths in units of l (unused for other kinds).
    beta: (f64, f64),
}

impl BoundaryModel {
    /// Look up a model by catalog name, with mu = 0 and Robin lengths 0.
    pub fn by_name(name: &str) -> Result<Self, ModelError> {
        let kind = match name {
            "mit" => ModelKind::Mit,
            "dirichlet" => ModelKind::Dirichlet,
            "neumann" => ModelKind::Neumann,
            "mixed-dn" => ModelKind::MixedDn,
            "robin" => ModelKind::Robin,
            "periodic" => ModelKind::Periodic,
            "antiperiodic" => ModelKind::Antiperiodic,
            "em" => ModelKind::Em,
            _ => return Err(ModelError::UnknownModel(String::from(name))),
        };
        Ok(Self::new(kind))
    }

    /// Build a model of the given kind with mu = 0 and Robin lengths 0.
    pub fn new(kind: ModelKind) -> Self {
        let (name, alpha, multiplicity, sigma) = match kind {
            ModelKind::Mit => ("mit", -4.0, 1, 2.0),
            ModelKind::Dirichlet => ("dirichlet", 1.0, 1, 2.0),
            ModelKind::Neumann => ("neumann", 1.0, 1, 2.0),
            ModelKind::MixedDn => ("mixed-dn", 1.0, 1, 2.0),
            ModelKind::Robin => ("robin", 1.0, 1, 2.0),
            ModelKind::Periodic => ("periodic", 1.0, 2, 1.0),
            ModelKind::Antiperiodic => ("antiperiodic", 1.0, 2, 1.0),
            ModelKind::Em => ("em", 2.0, 1, 2.0),
        };
        BoundaryModel {
            name,
            kind,
            alpha,
            multiplicity,
            sigma,
            mu: 0.0,
            beta: (0.0, 0.0),
        }
    }

    /// Set the dimensionless mass mu = m*l.
    pub fn with_mu(mut self, mu: f64) -> Result<Self, ModelError> {
        if !(mu >= 0.0) || !mu.is_finite() {
            return Err(ModelError::InvalidParameter("mu must be >= 0 and finite"));
        }
        self.mu = mu;
        Ok(self)
    }

    /// Set the Robin lengths (in units of l). Restricted to beta >= 0:
    /// negative lengths can push roots off the real axis, which the method
    /// does not cover.
    pub fn with_robin_params(mut self, beta1: f64, beta2: f64) -> Result<Self, ModelError> {
        if self.kind != ModelKind::Robin {
            return Err(ModelError::InvalidParameter(
                "robin parameters only apply to the robin model",
            ));
        }
        if !(beta1 >= 0.0 && beta2 >= 0.0) {
            return Err(ModelError::InvalidParameter("robin lengths must be >= 0"));
        }
        self.beta = (beta1, beta2);
        Ok(self)
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn kind(&self) -> ModelKind {
        self.kind
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn robin_params(&self) -> (f64, f64) {
        self.beta
    }

    /// The eigencondition G(x) whose positive roots are the mode eigenvalues
    /// lambda_n. Zero roots have already been divided out.
    pub fn eigencondition(&self, x: f64) -> f64 {
        match self.kind {
            ModelKind::Mit => g_mit(x, self.mu),
            ModelKind::Dirichlet | ModelKind::Neumann | ModelKind::Em => math::sinc(x),
            ModelKind::MixedDn => math::cos(x),
            ModelKind::Periodic => math::sinc(x / 2.0),
            ModelKind::Antiperiodic => math::cos(x / 2.0),
            ModelKind::Robin => {
                let (b1, b2) = self.beta;
                (1.0 - b1 * b2 * x * x) * math::sinc(x) + (b1 + b2) * math::cos(x)
            }
        }
    }

    /// Mean spacing of consecutive roots, used for scan-grid sizing and the
    /// asymptotic root count.
    pub fn root_spacing(&self) -> f64 {
        match self.kind {
            ModelKind::Periodic | ModelKind::Antiperiodic => 2.0 * core::f64::consts::PI,
            _ => core::f64::consts::PI,
        }
    }

    /// Direct evaluation of K(z) = G(iz). Refused above
    /// [`DIRECT_EVAL_LIMIT`] where cosh/sinh overflow; the decomposition
    /// form ([`Self::ln_k`]) is always available.
    pub fn k_direct(&self, z: f64) -> Result<f64, ModelError> {
        if z > DIRECT_EVAL_LIMIT {
            return Err(ModelError::Overflow { z });
        }
        Ok(match self.kind {
            ModelKind::Mit => self.mu * math::sinhc(z) + math::cosh(z),
            ModelKind::Dirichlet | ModelKind::Neumann | ModelKind::Em => math::sinhc(z),
            ModelKind::MixedDn => math::cosh(z),
            ModelKind::Periodic => math::sinhc(z / 2.0),
            ModelKind::Antiperiodic => math::cosh(z / 2.0),
            ModelKind::Robin => {
                let (b1, b2) = self.beta;
                (1.0 + b1 * b2 * z * z) * math::sinhc(z) + (b1 + b2) * math::cosh(z)
            }
        })
    }

    /// ln D(z), the divergent growth factor of K(z) = D(z)(1 + R(z)
    /// e^{-sigma z}). Never integrated; only its z-derivative enters the sum
    /// rule, and ln D + ln(1 + R e^{-sigma z}) reconstructs ln K without
    /// overflow.
    pub fn log_growth(&self, z: f64) -> f64 {
        match self.kind {
            ModelKind::Mit => z + math::ln((z + self.mu) / (2.0 * z)),
            ModelKind::Dirichlet | ModelKind::Neumann | ModelKind::Em => {
                z - math::ln(2.0 * z)
            }
            ModelKind::MixedDn => z - math::ln(2.0),
            ModelKind::Periodic => z / 2.0 - math::ln(z),
            ModelKind::Antiperiodic => z / 2.0 - math::ln(2.0),
            ModelKind::Robin => {
                let (b1, b2) = self.beta;
                z + math::ln((1.0 + b1 * z) * (1.0 + b2 * z) / (2.0 * z))
            }
        }
    }

    /// d/dz ln D(z).
    pub fn log_growth_deriv(&self, z: f64) -> f64 {
        match self.kind {
            ModelKind::Mit => 1.0 + 1.0 / (z + self.mu) - 1.0 / z,
            ModelKind::Dirichlet | ModelKind::Neumann | ModelKind::Em => 1.0 - 1.0 / z,
            ModelKind::MixedDn => 1.0,
            ModelKind::Periodic => 0.5 - 1.0 / z,
            ModelKind::Antiperiodic => 0.5,
            ModelKind::Robin => {
                let (b1, b2) = self.beta;
                1.0 + b1 / (1.0 + b1 * z) + b2 / (1.0 + b2 * z) - 1.0 / z
            }
        }
    }

    /// The reflection kernel R(z): the factor multiplying e^{-sigma z}
    /// inside the regularized logarithm. |R| <= 1 on z >= mu for every
    /// catalog model, so ln(1 + R e^{-sigma z}) is finite and decays like
    /// e^{-sigma z}.
    pub fn reflection(&self, z: f64) -> f64 {
        match self.kind {
            ModelKind::Mit => {
                if self.mu == 0.0 {
                    1.0
                } else {
                    (z - self.mu) / (z + self.mu)
                }
            }
            ModelKind::Dirichlet | ModelKind::Neumann | ModelKind::Em | ModelKind::Periodic => {
                -1.0
            }
            ModelKind::MixedDn | ModelKind::Antiperiodic => 1.0,
            ModelKind::Robin => {
                let (b1, b2) = self.beta;
                let r1 = (1.0 - b1 * z) / (1.0 + b1 * z);
                let r2 = (1.0 - b2 * z) / (1.0 + b2 * z);
                -r1 * r2
            }
        }
    }

    /// d/dz R(z).
    pub fn reflection_deriv(&self, z: f64) -> f64 {
        match self.kind {
            ModelKind::Mit => {
                if self.mu == 0.0 {
                    0.0
                } else {
                    2.0 * self.mu / ((z + self.mu) * (z + self.mu))
                }
            }
            ModelKind::Robin => {
                let (b1, b2) = self.beta;
                let r1 = (1.0 - b1 * z) / (1.0 + b1 * z);
                let r2 = (1.0 - b2 * z) / (1.0 + b2 * z);
                let d1 = -2.0 * b1 / ((1.0 + b1 * z) * (1.0 + b1 * z));
                let d2 = -2.0 * b2 / ((1.0 + b2 * z) * (1.0 + b2 * z));
                -(d1 * r2 + r1 * d2)
            }
            _ => 0.0,
        }
    }

    /// ln K(z) through the decomposition; valid for arbitrarily large z.
    pub fn ln_k(&self, z: f64) -> f64 {
        self.log_growth(z) + math::ln_1p(self.reflection(z) * math::exp(-self.sigma * z))
    }

    /// For models whose reflection kernel is z-independent, the constant
    /// value. These are the models the termwise series oracle covers.
    pub fn constant_reflection(&self) -> Option<f64> {
        match self.kind {
            ModelKind::Dirichlet | ModelKind::Neumann | ModelKind::Em | ModelKind::Periodic => {
                Some(-1.0)
            }
            ModelKind::MixedDn | ModelKind::Antiperiodic => Some(1.0),
            ModelKind::Robin | ModelKind::Mit => None,
        }
    }

    /// View of the K = D (1 + R e^{-sigma z}) split.
    pub fn decomposition(&self) -> KernelDecomposition<'_> {
        KernelDecomposition { model: self }
    }
}

/// The split of K(z) into growth factor and reflection term.
#[derive(Debug, Clone, Copy)]
pub struct KernelDecomposition<'a> {
    model: &'a BoundaryModel,
}

impl KernelDecomposition<'_> {
    /// ln D(z).
    pub fn log_growth(&self, z: f64) -> f64 {
        self.model.log_growth(z)
    }

    /// R(z).
    pub fn reflection(&self, z: f64) -> f64 {
        self.model.reflection(z)
    }

    /// The decay scale sigma.
    pub fn decay(&self) -> f64 {
        self.model.sigma()
    }

    /// D(z) (1 + R(z) e^{-sigma z}); equals K(z) identically.
    pub fn reconstruct(&self, z: f64) -> f64 {
        math::exp(self.log_growth(z))
            * (1.0 + self.reflection(z) * math::exp(-self.model.sigma() * z))
    }
}

/// The MIT bag eigencondition F(x) = mu sin(x) + x cos(x) on the real axis.
pub fn eigencondition_mit(x: f64, mu: f64) -> f64 {
    mu * math::sin(x) + x * math::cos(x)
}

/// G(z) = mu sin(z)/z + cos(z): the MIT eigencondition with the origin root
/// divided out, stable near z = 0.
pub fn g_mit(z: f64, mu: f64) -> f64 {
    mu * math::sinc(z) + math::cos(z)
}

/// K(z) = G(iz) = mu sinh(z)/z + cosh(z), by direct evaluation.
/// Refused for z > [`DIRECT_EVAL_LIMIT`]; the decomposition path
/// ([`BoundaryModel::ln_k`]) covers all z.
pub fn k_mit(z: f64, mu: f64) -> Result<f64, ModelError> {
    if z > DIRECT_EVAL_LIMIT {
        return Err(ModelError::Overflow { z });
    }
    Ok(mu * math::sinhc(z) + math::cosh(z))
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn model(name: &str) -> BoundaryModel {
        BoundaryModel::by_name(name).unwrap()
    }

    #[test]
    fn eigencondition_mit_examples() {
        // sin(pi) = 0, cos(pi) = -1
        assert!((eigencondition_mit(PI, 5.0) + PI).abs() < 1e-12);
        // cos(pi/2) = 0 with mu = 0
        assert!(eigencondition_mit(PI / 2.0, 0.0).abs() < 1e-15);
        // first positive root of tan x = -x (frozen from a 1e-10 bisection)
        assert!(eigencondition_mit(2.028757838, 1.0).abs() < 1e-8);
    }

    #[test]
    fn g_mit_examples() {
        assert_eq!(g_mit(0.0, 3.0), 4.0);
        assert!((g_mit(PI, 7.0) + 1.0).abs() < 1e-14);
        // leading Taylor behavior at tiny z
        let z = 1e-8;
        assert!((g_mit(z, 1.0) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn k_mit_examples() {
        // z -> 0+ limit is 1 + mu
        assert!((k_mit(1e-12, 2.5).unwrap() - 3.5).abs() < 1e-12);
        // cosh 1, against its power series
        let cosh1: f64 = (0..12).map(|k| {
            let k2 = 2 * k;
            (1..=k2).map(|j| 1.0 / j as f64).product::<f64>()
        }).sum();
        assert!((k_mit(1.0, 0.0).unwrap() - cosh1).abs() < 1e-12);
        // overflow guard
        assert!(matches!(k_mit(301.0, 1.0), Err(ModelError::Overflow { .. })));
    }

    #[test]
    fn decomposition_identity_mit() {
        // K = D (1 + R e^{-2z}) pointwise
        for &mu in &[0.0, 0.5, 1.0, 5.0] {
            let m = model("mit").with_mu(mu).unwrap();
            let d = m.decomposition();
            let mut z = 0.1;
            while z <= 30.0 {
                let k = m.k_direct(z).unwrap();
                assert!(
                    ((d.reconstruct(z) - k) / k).abs() < 1e-12,
                    "mu={mu} z={z}"
                );
                z += 0.37;
            }
        }
    }

    #[test]
    fn decomposition_identity_all_models() {
        for name in CATALOG_NAMES {
            let m = if name == "robin" {
                model(name).with_robin_params(0.7, 1.3).unwrap()
            } else {
                model(name)
            };
            let d = m.decomposition();
            let mut z = 0.1;
            while z <= 30.0 {
                let k = m.k_direct(z).unwrap();
                assert!(
                    ((d.reconstruct(z) - k) / k).abs() < 1e-12,
                    "{name} z={z}"
                );
                // ln_k must agree with ln of the direct value
                assert!((m.ln_k(z) - math::ln(k)).abs() < 1e-12 * (1.0 + m.ln_k(z).abs()));
                z += 0.53;
            }
        }
    }

    #[test]
    fn reflection_examples() {
        let m = model("mit").with_mu(2.0).unwrap();
        assert_eq!(m.reflection(2.0), 0.0);
        assert!((m.reflection(6.0) - 0.5).abs() < 1e-15);
        // Robin at beta = 0 is Dirichlet
        let r = model("robin");
        assert_eq!(r.reflection(1.7), -1.0);
        // one beta at 0, other huge: approaches the mixed value +1
        let r = model("robin").with_robin_params(0.0, 1e12).unwrap();
        assert!((r.reflection(3.0) - 1.0).abs() < 1e-11);
    }

    #[test]
    fn reflection_bounded_on_log_grid() {
        for name in CATALOG_NAMES {
            for &mu in &[0.0, 0.5, 2.0] {
                let m = if name == "robin" {
                    model(name).with_robin_params(0.4, 2.0).unwrap()
                } else {
                    model(name).with_mu(mu).unwrap()
                };
                let mut t = 0.0;
                while t <= 1.0 {
                    // log-spaced from mu (+epsilon) to mu + 50
                    let z = m.mu() + 1e-6 * libm::pow(5e7, t);
                    assert!(
                        m.reflection(z).abs() <= 1.0 + 1e-15,
                        "{name} mu={mu} z={z}"
                    );
                    t += 0.02;
                }
            }
        }
    }

    #[test]
    fn reflection_deriv_matches_finite_difference() {
        let h = 1e-6;
        for (name, b) in [("mit", None), ("robin", Some((0.3, 1.8)))] {
            let m = match b {
                Some((b1, b2)) => model(name).with_robin_params(b1, b2).unwrap(),
                None => model(name).with_mu(1.5).unwrap(),
            };
            for &z in &[0.5, 1.0, 3.0, 10.0] {
                let fd = (m.reflection(z + h) - m.reflection(z - h)) / (2.0 * h);
                assert!((m.reflection_deriv(z) - fd).abs() < 1e-8, "{name} z={z}");
            }
        }
    }

    #[test]
    fn log_growth_deriv_matches_finite_difference() {
        let h = 1e-6;
        for name in CATALOG_NAMES {
            let m = if name == "robin" {
                model(name).with_robin_params(0.3, 1.8).unwrap()
            } else {
                model(name).with_mu(0.8).unwrap()
            };
            for &z in &[0.5, 1.0, 3.0, 10.0] {
                let fd = (m.log_growth(z + h) - m.log_growth(z - h)) / (2.0 * h);
                assert!((m.log_growth_deriv(z) - fd).abs() < 1e-7, "{name} z={z}");
            }
        }
    }

    #[test]
    fn eigencondition_nonzero_at_origin() {
        // division by z must have removed the origin root for every model
        for name in CATALOG_NAMES {
            let m = if name == "robin" {
                model(name).with_robin_params(0.5, 0.5).unwrap()
            } else {
                model(name).with_mu(1.0).unwrap()
            };
            assert!(m.eigencondition(0.0).abs() > 0.5, "{name}");
        }
    }

    #[test]
    fn invalid_parameters_rejected() {
        assert!(model("mit").with_mu(-1.0).is_err());
        assert!(model("robin").with_robin_params(-0.1, 0.0).is_err());
        assert!(model("dirichlet").with_robin_params(1.0, 1.0).is_err());
        assert!(BoundaryModel::by_name("sphere").is_err());
    }
}
