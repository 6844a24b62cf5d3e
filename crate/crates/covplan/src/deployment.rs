//! Triangular-lattice node placement and the deployment container with its
//! JSON/CSV serialization.

use serde::{Deserialize, Serialize};

use crate::connectivity::{min_comm_radius, CommRadiusBound};
use crate::coverage::{alpha_of_spacing, spacing_for_alpha, SpacingSolution};
use crate::error::{ensure_positive, Error, Result};
use crate::geometry::{distance, Point, SensingField, SQRT_3};

/// One sensor node.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Node {
    /// Index of the node, dense from zero in placement order.
    pub id: usize,
    pub position: Point,
    pub sensing_radius: f64,
}

/// A concrete set of nodes in a field, together with the lattice spacing
/// and sensing radius they were planned with.
///
/// Invariants: node ids are `0..n` in order, every position lies in the
/// closed field rectangle, and all nodes share the same sensing radius.
#[derive(Debug, Clone, PartialEq)]
pub struct Deployment {
    field: SensingField,
    spacing: f64,
    sensing_radius: f64,
    nodes: Vec<Node>,
    base_station_id: Option<usize>,
}

impl Deployment {
    /// Builds a deployment from explicit positions (for irregular or
    /// hand-made layouts). Ids are assigned in the order given.
    pub fn from_positions(
        field: SensingField,
        spacing: f64,
        sensing_radius: f64,
        positions: Vec<Point>,
    ) -> Result<Self> {
        ensure_positive("spacing", spacing)?;
        ensure_positive("Rs", sensing_radius)?;
        for (i, p) in positions.iter().enumerate() {
            if !p.x.is_finite() || !p.y.is_finite() || !field.contains(*p) {
                return Err(Error::InvalidDeployment(format!(
                    "node {i} at ({}, {}) is outside the field",
                    p.x, p.y
                )));
            }
        }
        let nodes = positions
            .into_iter()
            .enumerate()
            .map(|(id, position)| Node { id, position, sensing_radius })
            .collect();
        Ok(Self { field, spacing, sensing_radius, nodes, base_station_id: None })
    }

    pub fn field(&self) -> &SensingField {
        &self.field
    }

    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    pub fn sensing_radius(&self) -> f64 {
        self.sensing_radius
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn base_station_id(&self) -> Option<usize> {
        self.base_station_id
    }

    /// Marks the node nearest the field center as the base station (lowest
    /// id wins ties). No effect on an empty deployment.
    pub fn with_base_station(mut self) -> Self {
        let center = Point::new(
            self.field.origin().x + 0.5 * self.field.width(),
            self.field.origin().y + 0.5 * self.field.height(),
        );
        let mut best: Option<(usize, f64)> = None;
        for node in &self.nodes {
            let dist = distance(node.position, center);
            if best.is_none_or(|(_, d)| dist < d) {
                best = Some((node.id, dist));
            }
        }
        self.base_station_id = best.map(|(id, _)| id);
        self
    }

    /// JSON rendering of the deployment. The field is described by its
    /// extents only, so files always place the lower-left corner at the
    /// origin — which is where the generator puts it.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&DeploymentFile::from(self)).expect("deployment serializes")
    }

    /// Parses and validates a deployment produced by [`Deployment::to_json`].
    pub fn from_json(text: &str) -> Result<Self> {
        let file: DeploymentFile = serde_json::from_str(text)?;
        let field = SensingField::new(file.field.width, file.field.height)?;
        let positions: Vec<Point> =
            file.nodes.iter().map(|n| Point::new(n.x, n.y)).collect();
        for (index, node) in file.nodes.iter().enumerate() {
            if node.id != index {
                return Err(Error::InvalidDeployment(format!(
                    "node ids must be dense and ordered (index {index} has id {})",
                    node.id
                )));
            }
        }
        let mut deployment = Self::from_positions(field, file.spacing, file.rs, positions)?;
        if let Some(id) = file.base_station_id {
            if id >= deployment.nodes.len() {
                return Err(Error::InvalidDeployment(format!(
                    "base station id {id} out of range"
                )));
            }
            deployment.base_station_id = Some(id);
        }
        Ok(deployment)
    }

    /// CSV rendering: a `id,x,y` header and one row per node, in id order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("id,x,y\n");
        for node in &self.nodes {
            out.push_str(&format!("{},{},{}\n", node.id, node.position.x, node.position.y));
        }
        out
    }
}

impl Serialize for Deployment {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        DeploymentFile::from(self).serialize(serializer)
    }
}

/// On-disk shape of a deployment.
#[derive(Serialize, Deserialize)]
struct DeploymentFile {
    field: FieldDims,
    spacing: f64,
    rs: f64,
    nodes: Vec<NodeRecord>,
    base_station_id: Option<usize>,
}

#[derive(Serialize, Deserialize)]
struct FieldDims {
    width: f64,
    height: f64,
}

#[derive(Serialize, Deserialize)]
struct NodeRecord {
    id: usize,
    x: f64,
    y: f64,
}

impl From<&Deployment> for DeploymentFile {
    fn from(d: &Deployment) -> Self {
        DeploymentFile {
            field: FieldDims { width: d.field.width(), height: d.field.height() },
            spacing: d.spacing,
            rs: d.sensing_radius,
            nodes: d
                .nodes
                .iter()
                .map(|n| NodeRecord { id: n.id, x: n.position.x, y: n.position.y })
                .collect(),
            base_station_id: d.base_station_id,
        }
    }
}

/// Places nodes on a triangular lattice over the field.
///
/// Rows sit `sqrt(3)/2 * spacing` apart starting at the field's lower edge;
/// even rows start at the left edge and odd rows are offset by half a
/// spacing. A node is kept when its coordinates lie inside the closed field
/// rectangle. Row heights are computed as `row_index * row_step` (not
/// accumulated), so the layout is a pure function of the inputs and
/// regeneration is bit-for-bit identical.
pub fn generate_triangular_lattice(
    field: &SensingField,
    spacing: f64,
    sensing_radius: f64,
) -> Result<Deployment> {
    ensure_positive("spacing", spacing)?;
    ensure_positive("Rs", sensing_radius)?;
    let origin = field.origin();
    let x_max = origin.x + field.width();
    let y_max = origin.y + field.height();
    let row_step = 0.5 * SQRT_3 * spacing;
    let mut nodes = Vec::new();
    let mut row = 0usize;
    loop {
        let y = origin.y + row as f64 * row_step;
        if y > y_max {
            break;
        }
        let x_offset = if row % 2 == 1 { 0.5 * spacing } else { 0.0 };
        let mut col = 0usize;
        loop {
            let x = origin.x + x_offset + col as f64 * spacing;
            if x > x_max {
                break;
            }
            nodes.push(Node { id: nodes.len(), position: Point::new(x, y), sensing_radius });
            col += 1;
        }
        row += 1;
    }
    Ok(Deployment {
        field: *field,
        spacing,
        sensing_radius,
        nodes,
        base_station_id: None,
    })
}

/// A complete plan: the solved spacing, the connectivity bound, and the
/// generated deployment.
#[derive(Debug, Clone, Serialize)]
pub struct CoveragePlan {
    /// Coverage fraction the caller asked for.
    pub requested_alpha: f64,
    /// Spacing that attains it.
    pub solution: SpacingSolution,
    /// Communication radius that guarantees connectivity, capped at the
    /// field diagonal.
    pub rc_bound: CommRadiusBound,
    /// Number of nodes placed.
    pub node_count: usize,
    /// Coverage fraction predicted for the solved spacing — equal to the
    /// target up to solver tolerance, and exactly 1 in the full regime.
    pub predicted_alpha: f64,
    /// The generated node placement.
    pub deployment: Deployment,
}

impl CoveragePlan {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plan serializes")
    }
}

/// Solves the spacing for a coverage target, derives the connectivity
/// bound, and generates the lattice for the given field.
pub fn plan_deployment(field: &SensingField, alpha: f64, rs: f64) -> Result<CoveragePlan> {
    let solution = spacing_for_alpha(alpha, rs)?;
    let rc_bound = min_comm_radius(alpha, rs, Some(field))?;
    let deployment = generate_triangular_lattice(field, solution.spacing, rs)?;
    let predicted_alpha = alpha_of_spacing(solution.spacing, rs)?;
    Ok(CoveragePlan {
        requested_alpha: alpha,
        solution,
        rc_bound,
        node_count: deployment.node_count(),
        predicted_alpha,
        deployment,
    })
}
