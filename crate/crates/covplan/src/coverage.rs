//! The analytic relationship between node spacing and coverage fraction on
//! a triangular lattice, and its inverse.
//!
//! Nodes with sensing radius `rs` sit on a triangular lattice with spacing
//! `d` between nearest neighbors. Writing `beta = d / (2*rs)`, the fraction
//! of the plane covered by at least one sensing disk falls into three
//! regimes:
//!
//! * `d <= sqrt(3)*rs` — disks overlap enough that every point is covered;
//!   the fraction is exactly 1.
//! * `sqrt(3)*rs < d < 2*rs` — neighboring disks still overlap pairwise and
//!   the fraction is `(pi/2 - 3*acos(beta) + 3*beta*sqrt(1 - beta^2)) /
//!   (sqrt(3) * beta^2)`.
//! * `d >= 2*rs` — disks are disjoint and the fraction is simply the disk
//!   area over the area of the lattice cell, `2*pi*rs^2 / (sqrt(3) * d^2)`.
//!
//! The regimes meet continuously: the middle expression equals 1 at
//! `d = sqrt(3)*rs` and equals [`ALPHA_POINT_OVERLAP`] at `d = 2*rs`, where
//! the disjoint expression takes over. The fraction is strictly decreasing
//! in `d` beyond full coverage, so the inverse map from target fraction to
//! spacing is well defined; [`spacing_for_alpha`] computes it in closed
//! form where possible and by bisection in the overlap regime.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::error::{ensure_alpha, ensure_positive, Error, Result};
use crate::geometry::SQRT_3;

/// Coverage fraction at the spacing where neighboring disks stop
/// overlapping (`d = 2*rs`): `pi / (2*sqrt(3))`, about 0.9069.
///
/// Targets above this value force overlapping disks; targets at or below it
/// are met with disjoint disks spread further apart.
pub const ALPHA_POINT_OVERLAP: f64 = PI / (2.0 * SQRT_3);

/// Which of the three spacing regimes a deployment falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CoverageRegime {
    /// `d <= sqrt(3)*rs`: every point of the plane is sensed.
    Full,
    /// `sqrt(3)*rs < d < 2*rs`: partial coverage with overlapping disks.
    OverlapPartial,
    /// `d >= 2*rs`: partial coverage with pairwise-disjoint disks.
    DisjointPartial,
}

/// Coverage fraction in the overlap regime as a function of
/// `beta = d / (2*rs)`.
///
/// Valid on `beta` in `[sqrt(3)/2, 1]`; arguments are clamped to that
/// interval so that rounding at the regime boundaries cannot push the
/// `acos`/`sqrt` out of domain. At the left endpoint the value is 1, at the
/// right endpoint it is [`ALPHA_POINT_OVERLAP`].
pub fn overlap_alpha(beta: f64) -> f64 {
    let b = beta.clamp(SQRT_3 / 2.0, 1.0);
    (FRAC_PI_2 - 3.0 * b.acos() + 3.0 * b * (1.0 - b * b).sqrt()) / (SQRT_3 * b * b)
}

/// Fraction of the field covered by a triangular lattice with spacing `d`
/// and sensing radius `rs` (both strictly positive).
pub fn alpha_of_spacing(d: f64, rs: f64) -> Result<f64> {
    ensure_positive("d", d)?;
    ensure_positive("Rs", rs)?;
    if d <= SQRT_3 * rs {
        Ok(1.0)
    } else if d < 2.0 * rs {
        Ok(overlap_alpha(d / (2.0 * rs)))
    } else {
        Ok(2.0 * PI * rs * rs / (SQRT_3 * d * d))
    }
}

/// Classifies the spacing regime for `d` and `rs` (both strictly positive).
pub fn classify_regime(d: f64, rs: f64) -> Result<CoverageRegime> {
    ensure_positive("d", d)?;
    ensure_positive("Rs", rs)?;
    if d <= SQRT_3 * rs {
        Ok(CoverageRegime::Full)
    } else if d < 2.0 * rs {
        Ok(CoverageRegime::OverlapPartial)
    } else {
        Ok(CoverageRegime::DisjointPartial)
    }
}

/// Result of inverting the coverage relation for a target fraction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpacingSolution {
    /// The requested coverage fraction.
    pub alpha: f64,
    /// Spacing over twice the sensing radius, `spacing / (2*rs)`.
    pub beta: f64,
    /// The lattice spacing that attains `alpha`.
    pub spacing: f64,
    /// Regime the solution lies in.
    pub regime: CoverageRegime,
}

/// Absolute tolerance on `beta` for the bisection in the overlap regime.
/// Because `d = 2*rs*beta`, the spacing is resolved to `2*rs*1e-12`.
const BETA_TOLERANCE: f64 = 1e-12;

/// The largest lattice spacing that still covers at least the fraction
/// `alpha` of the field.
///
/// * `alpha = 1` returns `sqrt(3)*rs` — the widest spacing with no gaps.
/// * `alpha` in `(`[`ALPHA_POINT_OVERLAP`]`, 1)` requires overlapping disks;
///   the overlap-regime relation is inverted by bisection on `beta` over
///   `[sqrt(3)/2, 1]`, which is valid because the fraction is strictly
///   decreasing there.
/// * `alpha <= `[`ALPHA_POINT_OVERLAP`] is met with disjoint disks:
///   `spacing = rs * sqrt(2*pi / (sqrt(3)*alpha))`.
pub fn spacing_for_alpha(alpha: f64, rs: f64) -> Result<SpacingSolution> {
    ensure_alpha(alpha)?;
    ensure_positive("Rs", rs)?;
    if alpha == 1.0 {
        return Ok(SpacingSolution {
            alpha,
            beta: SQRT_3 / 2.0,
            spacing: SQRT_3 * rs,
            regime: CoverageRegime::Full,
        });
    }
    if alpha > ALPHA_POINT_OVERLAP {
        let mut lo = SQRT_3 / 2.0;
        let mut hi = 1.0;
        while hi - lo > BETA_TOLERANCE {
            let mid = 0.5 * (lo + hi);
            if overlap_alpha(mid) > alpha {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        // The midpoint of the final bracket stays strictly inside
        // (sqrt(3)/2, 1): both endpoints moved at least once because the
        // fraction at the ends (1 and ALPHA_POINT_OVERLAP) brackets alpha
        // strictly.
        let beta = 0.5 * (lo + hi);
        return Ok(SpacingSolution {
            alpha,
            beta,
            spacing: 2.0 * rs * beta,
            regime: CoverageRegime::OverlapPartial,
        });
    }
    let spacing = rs * (2.0 * PI / (SQRT_3 * alpha)).sqrt();
    Ok(SpacingSolution {
        alpha,
        beta: spacing / (2.0 * rs),
        spacing,
        regime: CoverageRegime::DisjointPartial,
    })
}

/// One row of the coverage-to-spacing lookup table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LookupRow {
    /// Target coverage fraction.
    pub alpha: f64,
    /// `spacing / (2*rs)` for that target.
    pub beta: f64,
    /// Spacing in units of the sensing radius.
    #[serde(rename = "d_over_Rs")]
    pub d_over_rs: f64,
    /// Minimum communication radius in units of the sensing radius.
    #[serde(rename = "Rc_min_over_Rs")]
    pub rc_min_over_rs: f64,
}

/// A table mapping target coverage fractions to lattice spacing and the
/// communication radius that guarantees a connected network at that
/// spacing.
#[derive(Debug, Clone, PartialEq)]
pub struct LookupTable {
    rows: Vec<LookupRow>,
}

impl LookupTable {
    pub fn rows(&self) -> &[LookupRow] {
        &self.rows
    }

    /// CSV rendering with a fixed header and 12 significant digits per
    /// value, so repeated runs produce byte-identical files.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("alpha,beta,d_over_Rs,Rc_min_over_Rs\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                format_sig(row.alpha, 12),
                format_sig(row.beta, 12),
                format_sig(row.d_over_rs, 12),
                format_sig(row.rc_min_over_rs, 12),
            ));
        }
        out
    }

    /// JSON rendering: an array of records with the same four keys as the
    /// CSV columns.
    pub fn to_json(&self) -> String {
        // Serialization of plain floats cannot fail.
        serde_json::to_string_pretty(&self.rows).expect("lookup rows serialize")
    }
}

/// Builds a lookup table for a strictly increasing grid of coverage targets.
pub fn build_lookup_table(alphas: &[f64], rs: f64) -> Result<LookupTable> {
    ensure_positive("Rs", rs)?;
    for pair in alphas.windows(2) {
        if pair[0] >= pair[1] {
            return Err(Error::UnsortedAlphaGrid);
        }
    }
    let mut rows = Vec::with_capacity(alphas.len());
    for &alpha in alphas {
        let solution = spacing_for_alpha(alpha, rs)?;
        let bound = crate::connectivity::min_comm_radius(alpha, rs, None)?;
        rows.push(LookupRow {
            alpha,
            beta: solution.beta,
            d_over_rs: solution.spacing / rs,
            rc_min_over_rs: bound.rc_min / rs,
        });
    }
    Ok(LookupTable { rows })
}

/// Formats `value` with `digits` significant digits (plain decimal, no
/// exponent), used for deterministic CSV output.
pub fn format_sig(value: f64, digits: usize) -> String {
    if value == 0.0 || !value.is_finite() {
        let decimals = digits.saturating_sub(1);
        return format!("{value:.decimals$}");
    }
    let magnitude = value.abs().log10().floor() as i64;
    let decimals = (digits as i64 - 1 - magnitude).max(0) as usize;
    format!("{value:.decimals$}")
}
