//! Property tests for the model-catalog invariants.

use casimir_core::models::{BoundaryModel, CATALOG_NAMES};
use proptest::prelude::*;

fn arb_model() -> impl Strategy<Value = BoundaryModel> {
    (0..CATALOG_NAMES.len(), 0.0..5.0f64, 0.0..3.0f64, 0.0..3.0f64).prop_map(
        |(i, mu, b1, b2)| {
            let name = CATALOG_NAMES[i];
            let m = BoundaryModel::by_name(name).unwrap();
            if name == "robin" {
                m.with_robin_params(b1, b2).unwrap()
            } else {
                m.with_mu(mu).unwrap()
            }
        },
    )
}

proptest! {
    #[test]
    fn reflection_is_bounded(m in arb_model(), t in 0.0..1.0f64) {
        // log-spaced z from mu up to mu + 50
        let z = m.mu() + 1e-6 * (5e7f64).powf(t);
        prop_assert!(m.reflection(z).abs() <= 1.0 + 1e-14);
    }

    #[test]
    fn decomposition_reconstructs_k(m in arb_model(), z in 0.1..30.0f64) {
        let k = m.k_direct(z).unwrap();
        let rec = m.decomposition().reconstruct(z);
        prop_assert!(((rec - k) / k).abs() < 1e-11);
    }

    #[test]
    fn ln_k_continues_past_overflow_guard(m in arb_model(), z in 300.0..2000.0f64) {
        // direct evaluation refuses, the decomposition stays finite
        prop_assert!(m.k_direct(z + 0.5).is_err());
        prop_assert!(m.ln_k(z).is_finite());
    }

    #[test]
    fn roots_match_sign_change_census(mu in 0.0..10.0f64) {
        // every root the interlacing bound predicts is found, none extra
        let m = BoundaryModel::by_name("mit").unwrap().with_mu(mu).unwrap();
        let cutoff = 50.0 * std::f64::consts::PI;
        let list = casimir_core::roots::find_roots(&m, cutoff, 1e-10).unwrap();
        prop_assert_eq!(list.len(), 50);
        for (i, r) in list.roots().iter().enumerate() {
            let n = (i + 1) as f64;
            let pi = std::f64::consts::PI;
            prop_assert!(*r >= (n - 0.5) * pi - 1e-9 && *r <= n * pi + 1e-9);
        }
    }
}
