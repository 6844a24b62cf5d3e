//! Error type shared by every module in the crate.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while planning or verifying a deployment.
#[derive(Debug, Error)]
pub enum Error {
    /// A length, radius, or spacing that must be strictly positive was not.
    #[error("{name} must be positive and finite (got {value})")]
    NonPositive { name: &'static str, value: f64 },

    /// A distance that must be nonnegative was negative or not finite.
    #[error("{name} must be nonnegative and finite (got {value})")]
    Negative { name: &'static str, value: f64 },

    /// A coverage fraction outside the meaningful range.
    #[error("alpha must be in (0,1] (got {value})")]
    AlphaOutOfRange { value: f64 },

    /// Lookup-table grids must be sorted so the table rows are monotone.
    #[error("alpha grid must be strictly increasing")]
    UnsortedAlphaGrid,

    /// A minimum-degree query over zero sample points is meaningless.
    #[error("sample list must not be empty")]
    EmptySampleList,

    /// Connectivity of an empty node set is undefined.
    #[error("deployment has no nodes")]
    EmptyDeployment,

    /// The interior evaluation window vanished because the field is too
    /// small relative to the node spacing.
    #[error(
        "interior window is empty: field must be larger than \
         {min_width} x {min_height} (four spacings per axis)"
    )]
    InteriorWindowEmpty { min_width: f64, min_height: f64 },

    /// Grid sampling needs at least two points per axis to span the window.
    #[error("grid resolution must be at least 2 points per axis (got {value})")]
    GridResolutionTooSmall { value: usize },

    /// Monte Carlo estimation needs at least one sample.
    #[error("sample count must be at least 1")]
    NoSamples,

    /// A deployment file or hand-built node list violated a structural rule.
    #[error("invalid deployment: {0}")]
    InvalidDeployment(String),

    /// A deployment file could not be parsed at all.
    #[error("malformed deployment JSON: {0}")]
    Json(#[from] serde_json::Error),
}

/// Checks that `value` is strictly positive and finite.
pub(crate) fn ensure_positive(name: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(Error::NonPositive { name, value })
    }
}

/// Checks that `value` is a coverage fraction in `(0, 1]`.
pub(crate) fn ensure_alpha(value: f64) -> Result<()> {
    if value > 0.0 && value <= 1.0 {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange { value })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positive_check_accepts_normal_values() {
        assert!(ensure_positive("r", 1.0).is_ok());
        assert!(ensure_positive("r", 1e-300).is_ok());
    }

    #[test]
    fn positive_check_rejects_zero_negative_and_non_finite() {
        for bad in [0.0, -1.0, f64::NAN, f64::INFINITY, f64::NEG_INFINITY] {
            assert!(ensure_positive("r", bad).is_err(), "accepted {bad}");
        }
    }

    #[test]
    fn alpha_check_covers_the_half_open_interval() {
        assert!(ensure_alpha(1e-9).is_ok());
        assert!(ensure_alpha(1.0).is_ok());
        for bad in [0.0, -0.5, 1.0000001, f64::NAN] {
            assert!(ensure_alpha(bad).is_err(), "accepted {bad}");
        }
    }

    #[test]
    fn messages_name_the_offending_quantity() {
        let msg = Error::NonPositive { name: "Rs", value: -2.0 }.to_string();
        assert!(msg.contains("Rs"), "{msg}");
        assert!(msg.contains("-2"), "{msg}");
        let msg = Error::AlphaOutOfRange { value: 0.0 }.to_string();
        assert!(msg.contains("alpha must be in (0,1]"), "{msg}");
    }
}
