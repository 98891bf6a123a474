//! Bracketed bisection root finding for the eigencondition of a model.
//!
//! The eigenconditions oscillate with quasi-period equal to the model's root
//! spacing, so a scan step of one eighth of that spacing cannot skip adjacent
//! sign changes. Every root comes with a certified bracket; bisection keeps
//! the bracket valid at every step. Only positive roots are stored — the
//! spectrum is symmetric about the origin.

use alloc::vec::Vec;
use core::fmt;

use crate::math;
use crate::models::BoundaryModel;

/// Default refinement tolerance in units of z.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Errors from root finding.
#[derive(Debug, Clone, PartialEq)]
pub enum RootError {
    /// Scan-grid sign changes disagree with the asymptotic count estimate;
    /// retry with a finer scan step.
    MissedRootSuspicion { found: usize, expected: usize },
    /// Bad cutoff or tolerance.
    InvalidInput(&'static str),
}

impl fmt::Display for RootError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootError::MissedRootSuspicion { found, expected } => write!(
                f,
                "found {found} sign changes but the asymptotic density predicts {expected}; \
                 possible missed or spurious root"
            ),
            RootError::InvalidInput(msg) => write!(f, "{msg}"),
        }
    }
}

/// Ordered positive roots of an eigencondition with certified brackets.
#[derive(Debug, Clone, PartialEq)]
pub struct RootList {
    roots: Vec<f64>,
    brackets: Vec<(f64, f64)>,
    tolerance: f64,
}

impl RootList {
    /// The roots, strictly increasing.
    pub fn roots(&self) -> &[f64] {
        &self.roots
    }

    /// Certified brackets: the eigencondition changes sign across each.
    pub fn brackets(&self) -> &[(f64, f64)] {
        &self.brackets
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }
}

/// Asymptotic number of roots in (0, cutoff]: one per spacing interval.
pub fn count_estimate(model: &BoundaryModel, cutoff: f64) -> usize {
    if cutoff <= 0.0 {
        return 0;
    }
    math::floor(cutoff / model.root_spacing()) as usize
}

/// Find every root of the model's eigencondition in (0, cutoff], each
/// refined by bisection to `tol`.
///
/// The number of scan-grid sign changes is cross-checked against
/// [`count_estimate`]; a disagreement of more than one aborts with
/// [`RootError::MissedRootSuspicion`].
pub fn find_roots(
    model: &BoundaryModel,
    cutoff: f64,
    tol: f64,
) -> Result<RootList, RootError> {
    if !(cutoff > 0.0) {
        return Err(RootError::InvalidInput("cutoff must be > 0"));
    }
    if !(tol > 0.0) {
        return Err(RootError::InvalidInput("tolerance must be > 0"));
    }

    let step = model.root_spacing() / 8.0;
    let g = |x: f64| {
        let v = model.eigencondition(x);
        // an exact floating zero would break sign bookkeeping; nudge it
        if v == 0.0 {
            model.eigencondition(x + step * 1e-9)
        } else {
            v
        }
    };

    let mut brackets = Vec::new();
    let mut lo = 0.0;
    let mut flo = g(lo);
    let mut k = 1u64;
    loop {
        let hi = step * k as f64;
        if hi > cutoff + step {
            break;
        }
        let fhi = g(hi);
        if flo * fhi < 0.0 {
            brackets.push((lo, hi));
        }
        lo = hi;
        flo = fhi;
        k += 1;
    }

    let mut roots = Vec::with_capacity(brackets.len());
    let mut kept = Vec::with_capacity(brackets.len());
    for &(blo, bhi) in &brackets {
        let (root, cert) = bisect(&|x| model.eigencondition(x), blo, bhi, tol);
        // roots sitting exactly on the cutoff land a rounding unit past it
        if root <= cutoff + tol {
            roots.push(root);
            kept.push(cert);
        }
    }

    let expected = count_estimate(model, cutoff);
    let found = roots.len();
    if found.abs_diff(expected) > 1 {
        return Err(RootError::MissedRootSuspicion { found, expected });
    }

    Ok(RootList {
        roots,
        brackets: kept,
        tolerance: tol,
    })
}

/// Bisection inside a sign-change bracket; returns the midpoint of the final
/// bracket and the bracket itself.
fn bisect(f: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> (f64, (f64, f64)) {
    let mut flo = f(lo);
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // bracket at floating resolution
        }
        let mut fmid = f(mid);
        if fmid == 0.0 {
            // keep the bracket sign-certified by stepping off the exact zero
            fmid = f(mid + 1e-6 * (hi - lo));
        }
        if flo * fmid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    (0.5 * (lo + hi), (lo, hi))
}
