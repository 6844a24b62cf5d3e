//! Planar primitives: points, rectangular fields, and the area of
//! intersection of two equal circles.

use serde::{Deserialize, Serialize};

use crate::error::{ensure_positive, Error, Result};

/// `sqrt(3)` rounded to the nearest `f64`.
///
/// The triangular lattice puts rows `sqrt(3)/2` spacings apart and reaches
/// full coverage exactly when the spacing drops to `sqrt(3)` sensing radii,
/// so this constant shows up throughout the crate.
pub const SQRT_3: f64 = 1.732_050_807_568_877_2;

/// A point in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }
}

/// Euclidean distance between two points.
pub fn distance(a: Point, b: Point) -> f64 {
    let dx = a.x - b.x;
    let dy = a.y - b.y;
    (dx * dx + dy * dy).sqrt()
}

/// An axis-aligned rectangular field in which sensors are deployed.
///
/// The origin is the lower-left corner; `width` extends along x and
/// `height` along y. Both extents are strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SensingField {
    width: f64,
    height: f64,
    origin: Point,
}

impl SensingField {
    /// A field with its lower-left corner at the origin.
    pub fn new(width: f64, height: f64) -> Result<Self> {
        Self::with_origin(width, height, Point::new(0.0, 0.0))
    }

    /// A field with an explicit lower-left corner.
    pub fn with_origin(width: f64, height: f64, origin: Point) -> Result<Self> {
        ensure_positive("field width", width)?;
        ensure_positive("field height", height)?;
        if !origin.x.is_finite() || !origin.y.is_finite() {
            return Err(Error::InvalidDeployment(format!(
                "field origin must be finite (got ({}, {}))",
                origin.x, origin.y
            )));
        }
        Ok(Self { width, height, origin })
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn height(&self) -> f64 {
        self.height
    }

    pub fn origin(&self) -> Point {
        self.origin
    }

    /// Length of the field diagonal, the largest distance between any two
    /// points of the field. No communication radius ever needs to exceed it.
    pub fn diameter(&self) -> f64 {
        (self.width * self.width + self.height * self.height).sqrt()
    }

    /// Whether `p` lies in the closed rectangle.
    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.origin.x
            && p.x <= self.origin.x + self.width
            && p.y >= self.origin.y
            && p.y <= self.origin.y + self.height
    }
}

/// Area of the lens-shaped intersection of two circles of equal radius `rs`
/// whose centers are `d` apart.
///
/// For `d = 0` the circles coincide and the lens is the full disk; for
/// `d >= 2*rs` the interiors are disjoint and the area is zero. In between
/// the closed form is
/// `rs^2 * (2*acos(d / (2*rs)) - (d / rs) * sqrt(1 - (d / (2*rs))^2))`.
pub fn lens_area(d: f64, rs: f64) -> Result<f64> {
    ensure_positive("Rs", rs)?;
    if d < 0.0 || !d.is_finite() {
        return Err(Error::Negative { name: "d", value: d });
    }
    if d >= 2.0 * rs {
        return Ok(0.0);
    }
    let half_ratio = d / (2.0 * rs);
    // The branch above guarantees half_ratio < 1, so the sqrt argument is
    // positive; the max(0.0) only guards against rounding at the boundary.
    let chord = (1.0 - half_ratio * half_ratio).max(0.0).sqrt();
    Ok(rs * rs * (2.0 * half_ratio.acos() - (d / rs) * chord))
}
