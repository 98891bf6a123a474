//! Self-check suites behind `casimir check`: each check pins its tolerance
//! in code and reports one pass/fail line.

use casimir_core::energy::{
    asymptotic_coefficient_mit, casimir_coefficient, massless_closed_form, series_coefficient,
};
use casimir_core::models::BoundaryModel;
use casimir_core::quadrature::QuadratureSpec;
use casimir_core::roots::find_roots;
use casimir_core::spectral::{mittag_leffler_residual, partial_fraction_sum, TailModel};

use std::f64::consts::PI;

use crate::format::sig12;

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckOutcome {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

pub const SUITE_NAMES: [&str; 4] = ["mittag-leffler", "closed-forms", "oracles", "asymptotics"];

/// Run one named suite, or all of them.
pub fn run_suite(name: &str) -> Option<Vec<CheckOutcome>> {
    match name {
        "mittag-leffler" => Some(suite_mittag_leffler()),
        "closed-forms" => Some(suite_closed_forms()),
        "oracles" => Some(suite_oracles()),
        "asymptotics" => Some(suite_asymptotics()),
        "all" => {
            let mut all = suite_closed_forms();
            all.extend(suite_mittag_leffler());
            all.extend(suite_oracles());
            all.extend(suite_asymptotics());
            Some(all)
        }
        _ => None,
    }
}

/// Massless closed forms against the quadrature path, plus the Robin
/// Dirichlet/Neumann limits.
pub fn suite_closed_forms() -> Vec<CheckOutcome> {
    let spec = QuadratureSpec::default();
    let mut out = Vec::new();
    for name in [
        "mit",
        "dirichlet",
        "neumann",
        "mixed-dn",
        "em",
        "periodic",
        "antiperiodic",
    ] {
        let model = BoundaryModel::by_name(name).unwrap();
        let want = massless_closed_form(&model).unwrap().value();
        match casimir_coefficient(&model, &spec) {
            Ok(c) => {
                let rel = ((c.e - want) / want).abs();
                out.push(CheckOutcome::new(
                    format!("closed-form {name}"),
                    rel <= 1e-9,
                    format!("e={} exact={} rel_dev={}", sig12(c.e), sig12(want), sig12(rel)),
                ));
            }
            Err(e) => out.push(CheckOutcome::new(format!("closed-form {name}"), false, e.to_string())),
        }
    }

    // robin(0,0) -> dirichlet, robin(1e6,1e6) -> neumann
    let dirichlet = casimir_coefficient(&BoundaryModel::by_name("dirichlet").unwrap(), &spec)
        .unwrap()
        .e;
    let r0 = BoundaryModel::by_name("robin")
        .unwrap()
        .with_robin_params(0.0, 0.0)
        .unwrap();
    let e0 = casimir_coefficient(&r0, &spec).unwrap().e;
    out.push(CheckOutcome::new(
        "robin(0,0) = dirichlet",
        (e0 - dirichlet).abs() <= 1e-10,
        format!("dev={}", sig12((e0 - dirichlet).abs())),
    ));
    let neumann = casimir_coefficient(&BoundaryModel::by_name("neumann").unwrap(), &spec)
        .unwrap()
        .e;
    let rb = BoundaryModel::by_name("robin")
        .unwrap()
        .with_robin_params(1e6, 1e6)
        .unwrap();
    let eb = casimir_coefficient(&rb, &spec).unwrap().e;
    out.push(CheckOutcome::new(
        "robin(1e6,1e6) ~ neumann",
        (eb - neumann).abs() <= 1e-4,
        format!("dev={}", sig12((eb - neumann).abs())),
    ));
    out
}

/// The partial-fraction sum rule: truncation residual at N=1000 roots obeys
/// the (2z/pi^2)/N bound, and at mu=0 the tail-corrected sum reproduces
/// tanh z.
pub fn suite_mittag_leffler() -> Vec<CheckOutcome> {
    let mut out = Vec::new();
    for &mu in &[0.0, 1.0] {
        let model = BoundaryModel::by_name("mit").unwrap().with_mu(mu).unwrap();
        for &z in &[0.5, 1.0, 2.0, 5.0] {
            match mittag_leffler_residual(&model, z, 1000) {
                Ok(res) => {
                    let bound = (2.0 * z / (PI * PI)) / 1000.0 * 1.2;
                    out.push(CheckOutcome::new(
                        format!("mittag-leffler mit mu={mu} z={z} N=1000"),
                        res <= bound,
                        format!("residual={} bound={}", sig12(res), sig12(bound)),
                    ));
                }
                Err(e) => out.push(CheckOutcome::new(
                    format!("mittag-leffler mit mu={mu} z={z}"),
                    false,
                    e.to_string(),
                )),
            }
        }
    }

    // tanh reproduction with the fitted tail
    let model = BoundaryModel::by_name("mit").unwrap();
    let list = find_roots(&model, 1000.2 * PI, 1e-12).unwrap();
    let tail = TailModel::fit(&list).unwrap();
    for &z in &[0.5, 1.0, 2.0, 5.0] {
        let sum = partial_fraction_sum(&list, Some(&tail), z);
        let dev = (sum - z.tanh()).abs();
        out.push(CheckOutcome::new(
            format!("tanh reproduction z={z}"),
            dev <= 1e-6,
            format!("dev={}", sig12(dev)),
        ));
    }
    out
}

/// Dual-path agreement: quadrature vs the termwise Bessel series for every
/// constant-reflection model at several masses.
pub fn suite_oracles() -> Vec<CheckOutcome> {
    let spec = QuadratureSpec::default();
    let mut out = Vec::new();
    for name in ["dirichlet", "neumann", "mixed-dn", "periodic", "antiperiodic"] {
        for &mu in &[0.0, 0.5, 1.0, 2.0] {
            let model = BoundaryModel::by_name(name).unwrap().with_mu(mu).unwrap();
            let q = casimir_coefficient(&model, &spec);
            let s = series_coefficient(&model, 200);
            match (q, s) {
                (Ok(q), Ok(s)) => {
                    let rel = ((q.e - s) / s).abs();
                    out.push(CheckOutcome::new(
                        format!("dual-path {name} mu={mu}"),
                        rel <= 1e-8,
                        format!("quad={} series={} rel_dev={}", sig12(q.e), sig12(s), sig12(rel)),
                    ));
                }
                (q, s) => out.push(CheckOutcome::new(
                    format!("dual-path {name} mu={mu}"),
                    false,
                    format!("quad_err={:?} series_err={:?}", q.err(), s.err()),
                )),
            }
        }
    }
    out
}

/// Large-mass Laplace asymptote against quadrature.
pub fn suite_asymptotics() -> Vec<CheckOutcome> {
    let spec = QuadratureSpec {
        abs_tol: 1e-30,
        ..QuadratureSpec::default()
    };
    let mut out = Vec::new();
    let ratio = |mu: f64| {
        let m = BoundaryModel::by_name("mit").unwrap().with_mu(mu).unwrap();
        casimir_coefficient(&m, &spec).unwrap().e / asymptotic_coefficient_mit(mu).unwrap()
    };
    let r8 = ratio(8.0);
    let r12 = ratio(12.0);
    out.push(CheckOutcome::new(
        "asymptote ratio mu=8 in [0.9, 1.1]",
        (0.9..=1.1).contains(&r8),
        format!("ratio={}", sig12(r8)),
    ));
    out.push(CheckOutcome::new(
        "asymptote ratio mu=12 closer to 1",
        (r12 - 1.0).abs() < (r8 - 1.0).abs(),
        format!("ratio8={} ratio12={}", sig12(r8), sig12(r12)),
    ));
    out
}
