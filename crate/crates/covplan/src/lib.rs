//! Planning and verification for sensor networks deployed on a triangular
//! lattice.
//!
//! Given a sensing radius and a target fraction of the field that must be
//! covered, the planner answers three questions:
//!
//! 1. How far apart can nodes be placed? ([`spacing_for_alpha`])
//! 2. What communication radius guarantees the resulting network is
//!    connected? ([`min_comm_radius`])
//! 3. Where exactly do the nodes go? ([`generate_triangular_lattice`])
//!
//! The verification side answers the converse: given a concrete deployment,
//! sample the fraction it actually covers
//! ([`estimate_coverage_fraction`]), compute pointwise coverage degrees
//! ([`coverage_degree`]), and check connectivity of the communication
//! graph at a radius ([`build_comm_graph`], [`is_connected`]). Planner and
//! verifier share only the node positions, so each can check the other.
//!
//! ```
//! use covplan::{estimate_coverage_fraction, plan_deployment, is_connected};
//! use covplan::{SampleMode, SensingField, Window};
//!
//! let field = SensingField::new(40.0, 40.0).unwrap();
//! let plan = plan_deployment(&field, 0.9, 1.0).unwrap();
//! assert!(is_connected(&plan.deployment, plan.rc_bound.rc_min).unwrap());
//! let est = estimate_coverage_fraction(
//!     &plan.deployment,
//!     SampleMode::MonteCarlo,
//!     Window::Interior,
//!     100_000,
//!     42,
//! )
//! .unwrap();
//! assert!((est.fraction - 0.9).abs() < 0.01);
//! ```

pub mod connectivity;
pub mod coverage;
pub mod deployment;
pub mod error;
pub mod geometry;
pub mod render;
mod spatial;
pub mod verify;

pub use connectivity::{cfc_condition, coverage_implies_connectivity, min_comm_radius, CommRadiusBound};
pub use coverage::{
    alpha_of_spacing, build_lookup_table, classify_regime, overlap_alpha, spacing_for_alpha,
    CoverageRegime, LookupRow, LookupTable, SpacingSolution, ALPHA_POINT_OVERLAP,
};
pub use deployment::{
    generate_triangular_lattice, plan_deployment, CoveragePlan, Deployment, Node,
};
pub use error::{Error, Result};
pub use geometry::{distance, lens_area, Point, SensingField, SQRT_3};
pub use render::render_svg;
pub use verify::{
    build_comm_graph, coverage_degree, estimate_coverage_fraction, is_connected,
    network_coverage_degree, point_coverage, CommGraph, ConnectivityReport, CoverageEstimate,
    SampleMode, Window,
};
