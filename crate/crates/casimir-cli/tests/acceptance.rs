//! Acceptance gate: one test per criterion, each printing a single
//! PASS line with the measured numbers (visible under --nocapture).

use casimir_core::energy::{
    asymptotic_coefficient_mit, casimir_coefficient, massless_closed_form, series_coefficient,
};
use casimir_core::models::BoundaryModel;
use casimir_core::quadrature::QuadratureSpec;
use casimir_core::roots::find_roots;
use casimir_core::spectral::{mittag_leffler_residual, partial_fraction_sum, TailModel};

use std::f64::consts::PI;
use std::process::Command;
use std::time::Instant;

fn casimir_bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_casimir"))
}

/// Criterion 1: massless MIT bag coefficient matches -7 pi^2 / 2880 to
/// 1e-9 relative, computed in under a second.
#[test]
fn criterion_1_massless_mit() {
    let start = Instant::now();
    let model = BoundaryModel::by_name("mit").unwrap();
    let c = casimir_coefficient(&model, &QuadratureSpec::default()).unwrap();
    let elapsed = start.elapsed();
    let exact = -7.0 * PI * PI / 2880.0;
    let rel = ((c.e - exact) / exact).abs();
    assert!(rel <= 1e-9, "rel deviation {rel:e} exceeds 1e-9");
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}, budget 1 s");
    println!(
        "PASS criterion 1: massless mit e={:.12e} rel_dev={rel:.3e} in {elapsed:?}",
        c.e
    );
}

/// Criterion 2: every massless closed form in the catalog reproduced to
/// 1e-9 relative.
#[test]
fn criterion_2_closed_forms() {
    let spec = QuadratureSpec::default();
    let mut worst = 0.0f64;
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
        let got = casimir_coefficient(&model, &spec).unwrap().e;
        let rel = ((got - want) / want).abs();
        assert!(rel <= 1e-9, "{name}: rel deviation {rel:e} exceeds 1e-9");
        worst = worst.max(rel);
    }
    println!("PASS criterion 2: 7 closed forms, worst rel_dev={worst:.3e}");
}

/// Criterion 3: the partial-fraction truncation residual obeys the
/// (2z/pi^2)/N bound at N=1000, and the tail-corrected sum reproduces
/// tanh z to 1e-6.
#[test]
fn criterion_3_mittag_leffler() {
    let mut worst_ratio = 0.0f64;
    for &mu in &[0.0, 1.0] {
        let model = BoundaryModel::by_name("mit").unwrap().with_mu(mu).unwrap();
        for &z in &[0.5, 1.0, 2.0, 5.0] {
            let res = mittag_leffler_residual(&model, z, 1000).unwrap();
            let bound = (2.0 * z / (PI * PI)) / 1000.0 * 1.2;
            assert!(res <= bound, "mu={mu} z={z}: residual {res:e} > bound {bound:e}");
            worst_ratio = worst_ratio.max(res / bound);
        }
    }

    let model = BoundaryModel::by_name("mit").unwrap();
    let list = find_roots(&model, 1000.2 * PI, 1e-12).unwrap();
    let tail = TailModel::fit(&list).unwrap();
    let mut worst_dev = 0.0f64;
    for &z in &[0.5, 1.0, 2.0, 5.0] {
        let dev = (partial_fraction_sum(&list, Some(&tail), z) - z.tanh()).abs();
        assert!(dev <= 1e-6, "tanh z={z}: dev {dev:e} exceeds 1e-6");
        worst_dev = worst_dev.max(dev);
    }
    println!(
        "PASS criterion 3: residual/bound<= {worst_ratio:.3} tanh dev<= {worst_dev:.3e}"
    );
}

/// Criterion 4: quadrature and termwise Bessel series agree for the
/// massive Dirichlet plates to 1e-8 relative.
#[test]
fn criterion_4_dual_path_dirichlet() {
    let spec = QuadratureSpec::default();
    let mut worst = 0.0f64;
    for &mu in &[0.5, 1.0, 2.0] {
        let model = BoundaryModel::by_name("dirichlet")
            .unwrap()
            .with_mu(mu)
            .unwrap();
        let quad = casimir_coefficient(&model, &spec).unwrap().e;
        let series = series_coefficient(&model, 200).unwrap();
        let rel = ((quad - series) / series).abs();
        assert!(rel <= 1e-8, "mu={mu}: rel deviation {rel:e} exceeds 1e-8");
        worst = worst.max(rel);
    }
    println!("PASS criterion 4: dirichlet dual-path, worst rel_dev={worst:.3e}");
}

/// Criterion 5: the MIT coefficient is negative and |e| strictly
/// decreases on the grid mu = 0..20 step 0.25, with e(20)/e(0) below
/// 1e-15.
#[test]
fn criterion_5_monotonic_decay() {
    let spec = QuadratureSpec {
        abs_tol: 1e-32,
        ..QuadratureSpec::default()
    };
    let mut prev = f64::INFINITY;
    let mut e0 = 0.0;
    let mut e_last = 0.0;
    for i in 0..=80 {
        let mu = 0.25 * i as f64;
        let model = BoundaryModel::by_name("mit").unwrap().with_mu(mu).unwrap();
        let e = casimir_coefficient(&model, &spec).unwrap().e;
        assert!(e < 0.0, "mu={mu}: e={e:e} not negative");
        assert!(e.abs() < prev, "mu={mu}: |e| did not decrease");
        prev = e.abs();
        if i == 0 {
            e0 = e;
        }
        e_last = e;
    }
    let ratio = e_last / e0;
    assert!(ratio < 1e-15, "e(20)/e(0) = {ratio:e} not below 1e-15");
    println!("PASS criterion 5: 81-point decay, e(20)/e(0)={ratio:.3e}");
}

/// Criterion 6: the large-mass asymptote matches quadrature: ratio at
/// mu=8 within [0.9, 1.1] and mu=12 strictly closer to 1.
#[test]
fn criterion_6_asymptote() {
    let spec = QuadratureSpec {
        abs_tol: 1e-30,
        ..QuadratureSpec::default()
    };
    let ratio = |mu: f64| {
        let m = BoundaryModel::by_name("mit").unwrap().with_mu(mu).unwrap();
        casimir_coefficient(&m, &spec).unwrap().e / asymptotic_coefficient_mit(mu).unwrap()
    };
    let r8 = ratio(8.0);
    let r12 = ratio(12.0);
    assert!((0.9..=1.1).contains(&r8), "ratio(8)={r8} outside [0.9, 1.1]");
    assert!(
        (r12 - 1.0).abs() < (r8 - 1.0).abs(),
        "ratio(12)={r12} not closer to 1 than ratio(8)={r8}"
    );
    println!("PASS criterion 6: asymptote ratios {r8:.6} (mu=8), {r12:.6} (mu=12)");
}

/// Criterion 7: root census for the massive MIT condition: exactly 100
/// roots below 100 pi, interlaced with the half-integer grid, first
/// root pinned to 1e-8.
#[test]
fn criterion_7_root_census() {
    let model = BoundaryModel::by_name("mit").unwrap().with_mu(1.0).unwrap();
    let list = find_roots(&model, 100.0 * PI, 1e-12).unwrap();
    assert_eq!(list.len(), 100, "expected 100 roots, found {}", list.len());
    for (i, r) in list.roots().iter().enumerate() {
        let n = (i + 1) as f64;
        assert!(
            *r > (n - 0.5) * PI && *r < n * PI,
            "root {n} = {r} escapes (({n}-1/2)pi, {n} pi)"
        );
    }
    let first_dev = (list.roots()[0] - 2.028757838).abs();
    assert!(first_dev <= 1e-8, "first root off by {first_dev:e}");
    println!(
        "PASS criterion 7: 100 interlaced roots, first={:.10} dev={first_dev:.3e}",
        list.roots()[0]
    );
}

/// Criterion 8: Robin plates collapse onto Dirichlet at beta=0 and
/// approach Neumann as beta grows.
#[test]
fn criterion_8_robin_limits() {
    let spec = QuadratureSpec::default();
    let robin = |b1: f64, b2: f64| {
        let m = BoundaryModel::by_name("robin")
            .unwrap()
            .with_robin_params(b1, b2)
            .unwrap();
        casimir_coefficient(&m, &spec).unwrap().e
    };
    let dirichlet = casimir_coefficient(&BoundaryModel::by_name("dirichlet").unwrap(), &spec)
        .unwrap()
        .e;
    let neumann = casimir_coefficient(&BoundaryModel::by_name("neumann").unwrap(), &spec)
        .unwrap()
        .e;

    let dev_d = (robin(0.0, 0.0) - dirichlet).abs();
    assert!(dev_d <= 1e-10, "robin(0,0) off dirichlet by {dev_d:e}");
    let dev_n = (robin(1e6, 1e6) - neumann).abs();
    assert!(dev_n <= 1e-4, "robin(1e6,1e6) off neumann by {dev_n:e}");
    // the approach is monotone in beta
    let d3 = (robin(1e3, 1e3) - neumann).abs();
    let d6 = dev_n;
    assert!(d6 < d3, "no convergence toward neumann: {d6:e} !< {d3:e}");
    println!("PASS criterion 8: robin limits dev_dirichlet={dev_d:.3e} dev_neumann={dev_n:.3e}");
}

/// Criterion 9: CLI output is byte-identical to the checked-in golden
/// files.
#[test]
fn criterion_9_cli_golden() {
    let compute = casimir_bin()
        .args(["compute", "--model", "mit", "--mu", "0", "--format", "csv"])
        .output()
        .unwrap();
    assert!(compute.status.success());
    let want = include_bytes!("golden/compute_mit_mu0.csv");
    assert_eq!(
        compute.stdout,
        want,
        "compute output drifted from golden file"
    );

    let scan = casimir_bin()
        .args(["scan", "--model", "mit", "--mu-range", "0:2:0.1"])
        .output()
        .unwrap();
    assert!(scan.status.success());
    let want = include_bytes!("golden/scan_mit_0_2.csv");
    assert_eq!(scan.stdout, want, "scan output drifted from golden file");
    println!("PASS criterion 9: CLI outputs byte-identical to golden files");
}
