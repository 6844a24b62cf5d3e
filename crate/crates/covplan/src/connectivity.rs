//! The communication radius needed so that a lattice deployment meeting a
//! coverage target is also a connected network.
//!
//! On a triangular lattice the nearest-neighbor distance equals the
//! spacing, so a communication radius at least as large as the spacing
//! connects every node to its six neighbors and the whole network is
//! connected. The minimum radius therefore tracks the spacing that the
//! coverage target dictates:
//!
//! * For targets requiring overlapping disks (above
//!   [`ALPHA_POINT_OVERLAP`]) the spacing lies in `(sqrt(3)*rs, 2*rs)` and
//!   so does the radius.
//! * For smaller targets the disks are disjoint and the radius grows as
//!   `rs * sqrt(2*pi / (sqrt(3)*alpha))`, without bound as `alpha` shrinks.
//! * No radius ever needs to exceed the field diagonal: two nodes can never
//!   be further apart, so the bound is capped there when a field is given.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::coverage::{spacing_for_alpha, CoverageRegime, ALPHA_POINT_OVERLAP};
use crate::error::{ensure_alpha, ensure_positive, Result};
use crate::geometry::{SensingField, SQRT_3};

/// Minimum communication radius guaranteeing connectivity at a coverage
/// target, with provenance of the value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CommRadiusBound {
    /// The coverage target the bound was computed for.
    pub alpha: f64,
    /// The radius itself.
    pub rc_min: f64,
    /// True when the uncapped bound exceeded the field diagonal and was
    /// clamped to it.
    pub capped_by_diameter: bool,
    /// Spacing regime of the deployment meeting the target.
    pub regime: CoverageRegime,
}

/// Minimum communication radius so that a triangular-lattice deployment
/// covering the fraction `alpha` is connected.
///
/// With a `field`, the bound is capped at the field diagonal (nodes inside
/// the field are never further apart than that).
pub fn min_comm_radius(alpha: f64, rs: f64, field: Option<&SensingField>) -> Result<CommRadiusBound> {
    ensure_alpha(alpha)?;
    ensure_positive("Rs", rs)?;
    let (rc, regime) = if alpha > ALPHA_POINT_OVERLAP {
        let solution = spacing_for_alpha(alpha, rs)?;
        (solution.spacing, solution.regime)
    } else {
        // Disjoint-disk regime: closed form, evaluated directly so the
        // bound does not depend on the spacing solver.
        let rc = rs * (2.0 * PI / (SQRT_3 * alpha)).sqrt();
        (rc, CoverageRegime::DisjointPartial)
    };
    if let Some(field) = field {
        let diameter = field.diameter();
        if rc > diameter {
            return Ok(CommRadiusBound {
                alpha,
                rc_min: diameter,
                capped_by_diameter: true,
                regime,
            });
        }
    }
    Ok(CommRadiusBound { alpha, rc_min: rc, capped_by_diameter: false, regime })
}

/// Whether a communication radius satisfies the classical sufficient
/// condition for full coverage to imply connectivity: `rc >= 2*rs`.
pub fn cfc_condition(rc: f64, rs: f64) -> Result<bool> {
    ensure_positive("Rc", rc)?;
    ensure_positive("Rs", rs)?;
    Ok(rc >= 2.0 * rs)
}

/// Whether a communication radius meets the (uncapped) minimum bound for a
/// coverage target — i.e. whether achieving that coverage with the widest
/// admissible lattice spacing guarantees a connected network.
pub fn coverage_implies_connectivity(alpha: f64, rc: f64, rs: f64) -> Result<bool> {
    ensure_positive("Rc", rc)?;
    let bound = min_comm_radius(alpha, rs, None)?;
    Ok(rc >= bound.rc_min)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn radius_at_full_coverage_is_the_full_coverage_spacing() {
        let b = min_comm_radius(1.0, 1.0, None).unwrap();
        assert_eq!(b.rc_min, SQRT_3);
        assert_eq!(b.regime, CoverageRegime::Full);
        assert!(!b.capped_by_diameter);
        let b = min_comm_radius(1.0, 3.0, None).unwrap();
        assert_eq!(b.rc_min, SQRT_3 * 3.0);
    }

    #[test]
    fn radius_at_the_regime_threshold() {
        let b = min_comm_radius(ALPHA_POINT_OVERLAP, 1.0, None).unwrap();
        assert!((b.rc_min - 2.0).abs() < 1e-12, "rc_min {}", b.rc_min);
        assert_eq!(b.regime, CoverageRegime::DisjointPartial);
    }

    #[test]
    fn radius_in_the_disjoint_regime_matches_the_closed_form() {
        for alpha in [0.05, 0.1, 0.25, 0.5, 0.75, 0.9] {
            let b = min_comm_radius(alpha, 1.0, None).unwrap();
            let expected = (2.0 * PI / (SQRT_3 * alpha)).sqrt();
            assert!((b.rc_min - expected).abs() < 1e-15, "alpha {alpha}");
            assert_eq!(b.regime, CoverageRegime::DisjointPartial);
        }
        // Frozen: alpha = 0.5.
        let b = min_comm_radius(0.5, 1.0, None).unwrap();
        assert!((b.rc_min - 2.693547374177197).abs() < 1e-12);
    }

    #[test]
    fn radius_in_the_overlap_regime_stays_in_the_open_band() {
        for alpha in [0.91, 0.95, 0.99, 0.999] {
            let b = min_comm_radius(alpha, 1.0, None).unwrap();
            assert!(b.rc_min > SQRT_3 && b.rc_min < 2.0, "alpha {alpha} rc {}", b.rc_min);
            assert_eq!(b.regime, CoverageRegime::OverlapPartial);
        }
        // Frozen: alpha = 0.95.
        let b = min_comm_radius(0.95, 1.0, None).unwrap();
        assert!((b.rc_min - 1.9320655506571175).abs() < 1e-9);
    }

    #[test]
    fn radius_is_capped_at_the_field_diagonal() {
        let field = SensingField::new(10.0, 10.0).unwrap();
        // alpha = 0.01 would need rc about 19.05, beyond the diagonal.
        let b = min_comm_radius(0.01, 1.0, Some(&field)).unwrap();
        assert!(b.capped_by_diameter);
        assert_eq!(b.rc_min, 200.0_f64.sqrt());
        assert!((b.rc_min - 14.142135623730951).abs() < 1e-12);
        // The uncapped value it replaced.
        let unbounded = min_comm_radius(0.01, 1.0, None).unwrap();
        assert!(!unbounded.capped_by_diameter);
        assert!((unbounded.rc_min - 19.046256137279147).abs() < 1e-12);
        // A roomy field leaves the bound untouched.
        let big = SensingField::new(100.0, 100.0).unwrap();
        let b = min_comm_radius(0.01, 1.0, Some(&big)).unwrap();
        assert!(!b.capped_by_diameter);
        assert_eq!(b.rc_min, unbounded.rc_min);
    }

    #[test]
    fn radius_scales_linearly_with_the_sensing_radius() {
        for alpha in [0.1, 0.5, ALPHA_POINT_OVERLAP, 0.95, 1.0] {
            let unit = min_comm_radius(alpha, 1.0, None).unwrap().rc_min;
            let scaled = min_comm_radius(alpha, 2.5, None).unwrap().rc_min;
            assert!(
                (scaled - 2.5 * unit).abs() < 1e-12 * scaled,
                "alpha {alpha}: {scaled} vs {}",
                2.5 * unit
            );
        }
    }

    #[test]
    fn radius_is_monotone_nonincreasing_in_the_target() {
        let mut last = f64::INFINITY;
        for i in 1..=500 {
            let alpha = i as f64 / 500.0;
            let rc = min_comm_radius(alpha, 1.0, None).unwrap().rc_min;
            assert!(rc <= last + 1e-9, "alpha {alpha}: rc {rc} > previous {last}");
            last = rc;
        }
    }

    #[test]
    fn radius_rejects_bad_arguments() {
        assert!(min_comm_radius(0.0, 1.0, None).is_err());
        assert!(min_comm_radius(1.1, 1.0, None).is_err());
        assert!(min_comm_radius(0.5, -1.0, None).is_err());
    }

    #[test]
    fn classical_sufficient_condition() {
        assert!(cfc_condition(2.0, 1.0).unwrap());
        assert!(cfc_condition(2.1, 1.0).unwrap());
        assert!(!cfc_condition(1.99, 1.0).unwrap());
        assert!(cfc_condition(4.0, 2.0).unwrap());
        assert!(!cfc_condition(3.9999, 2.0).unwrap());
        assert!(cfc_condition(0.0, 1.0).is_err());
        assert!(cfc_condition(1.0, f64::NAN).is_err());
    }

    #[test]
    fn connectivity_guarantee_predicate() {
        assert!(coverage_implies_connectivity(1.0, SQRT_3, 1.0).unwrap());
        assert!(!coverage_implies_connectivity(ALPHA_POINT_OVERLAP, 1.9, 1.0).unwrap());
        assert!(coverage_implies_connectivity(0.5, 2.7, 1.0).unwrap());
        assert!(!coverage_implies_connectivity(0.5, 2.69, 1.0).unwrap());
        assert!(coverage_implies_connectivity(0.5, 0.0, 1.0).is_err());
    }
}
