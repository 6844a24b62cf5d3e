//! Empirical checks of a concrete deployment: sampled coverage fraction,
//! pointwise coverage degree, and connectivity of the communication graph.
//!
//! These checks deliberately share nothing with the closed-form planner
//! beyond the node positions, so they can confirm (or refute) what the
//! planner promises.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::deployment::{Deployment, Node};
use crate::error::{ensure_positive, Error, Result};
use crate::geometry::{distance, Point};
use crate::spatial::GridIndex;

/// Relative slack on radius comparisons for communication links.
///
/// Lattice coordinates are computed as `column * spacing`, which rounds;
/// nearest-neighbor distances can land a few ulps above the exact spacing.
/// A link test of `dist <= rc` exactly would then drop edges from a network
/// operating exactly at the connectivity bound `rc = spacing`. The slack is
/// nine orders of magnitude below the sharpness anyone probes radii at
/// (one part in a thousand), so it only absorbs representation noise.
const RADIUS_GUARD: f64 = 1e-12;

/// Closed-disk link predicate: nodes within `rc` (plus representation
/// slack) of each other can communicate.
fn within_link_range(a: Point, b: Point, rc: f64) -> bool {
    distance(a, b) <= rc * (1.0 + RADIUS_GUARD)
}

/// 1 if `z` lies in the closed sensing disk of `node`, else 0.
pub fn point_coverage(z: Point, node: &Node) -> u32 {
    u32::from(distance(node.position, z) <= node.sensing_radius)
}

/// Number of nodes whose sensing disk contains `z`.
pub fn coverage_degree(z: Point, deployment: &Deployment) -> u32 {
    deployment.nodes().iter().map(|n| point_coverage(z, n)).sum()
}

/// Minimum coverage degree over a set of sample points.
///
/// The sample list must be non-empty; a minimum over nothing would claim
/// coverage vacuously.
pub fn network_coverage_degree(deployment: &Deployment, samples: &[Point]) -> Result<u32> {
    if samples.is_empty() {
        return Err(Error::EmptySampleList);
    }
    let rs = deployment.sensing_radius();
    let positions: Vec<Point> = deployment.nodes().iter().map(|n| n.position).collect();
    let index = GridIndex::build(&positions, rs);
    let mut candidates = Vec::new();
    let mut min_degree = u32::MAX;
    for &z in samples {
        index.candidates(z, &mut candidates);
        let degree = candidates
            .iter()
            .filter(|&&id| point_coverage(z, &deployment.nodes()[id as usize]) == 1)
            .count() as u32;
        min_degree = min_degree.min(degree);
        if min_degree == 0 {
            break;
        }
    }
    Ok(min_degree)
}

/// How sample points are drawn for coverage estimation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SampleMode {
    /// Uniform random samples from a seeded generator.
    MonteCarlo,
    /// A regular grid with inclusive endpoints.
    Grid,
}

/// Which part of the field the estimate covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Window {
    /// The whole field, boundary strips included.
    FullField,
    /// The field shrunk by two spacings on every side. Lattice coverage is
    /// periodic away from the boundary, so this window measures the
    /// steady-state fraction that the closed forms describe.
    Interior,
}

/// A sampled coverage fraction with its uncertainty.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoverageEstimate {
    /// Fraction of samples covered by at least one sensing disk.
    #[serde(rename = "alpha_hat")]
    pub fraction: f64,
    /// Number of samples evaluated.
    #[serde(rename = "n")]
    pub sample_count: usize,
    /// Half-width of the normal-approximation 95% confidence interval
    /// (zero for grid sampling, which is not a random estimate).
    #[serde(rename = "ci95")]
    pub half_width_95: f64,
    pub mode: SampleMode,
    pub window: Window,
}

impl CoverageEstimate {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("estimate serializes")
    }
}

/// Bounds of the evaluation window.
fn window_rect(deployment: &Deployment, window: Window) -> Result<(f64, f64, f64, f64)> {
    let field = deployment.field();
    let o = field.origin();
    match window {
        Window::FullField => Ok((o.x, o.y, o.x + field.width(), o.y + field.height())),
        Window::Interior => {
            let margin = 2.0 * deployment.spacing();
            let (x0, y0) = (o.x + margin, o.y + margin);
            let (x1, y1) = (o.x + field.width() - margin, o.y + field.height() - margin);
            if x1 <= x0 || y1 <= y0 {
                return Err(Error::InteriorWindowEmpty {
                    min_width: 4.0 * deployment.spacing(),
                    min_height: 4.0 * deployment.spacing(),
                });
            }
            Ok((x0, y0, x1, y1))
        }
    }
}

/// Estimates the fraction of the window covered by at least one sensing
/// disk.
///
/// For [`SampleMode::MonteCarlo`], `samples_or_resolution` is the number of
/// uniform samples and `seed` fixes the generator, so estimates are exactly
/// reproducible. For [`SampleMode::Grid`] it is the number of grid points
/// per axis (at least 2), endpoints included; the seed is unused.
pub fn estimate_coverage_fraction(
    deployment: &Deployment,
    mode: SampleMode,
    window: Window,
    samples_or_resolution: usize,
    seed: u64,
) -> Result<CoverageEstimate> {
    let (x0, y0, x1, y1) = window_rect(deployment, window)?;
    let rs = deployment.sensing_radius();
    let positions: Vec<Point> = deployment.nodes().iter().map(|n| n.position).collect();
    let index = GridIndex::build(&positions, rs);
    let mut candidates = Vec::new();
    let covered_at = |z: Point, candidates: &mut Vec<u32>| {
        index.candidates(z, candidates);
        candidates
            .iter()
            .any(|&id| point_coverage(z, &deployment.nodes()[id as usize]) == 1)
    };
    match mode {
        SampleMode::MonteCarlo => {
            let n = samples_or_resolution;
            if n == 0 {
                return Err(Error::NoSamples);
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let (w, h) = (x1 - x0, y1 - y0);
            let mut hits = 0usize;
            for _ in 0..n {
                // Draw x then y so the sample stream is pinned down.
                let ux: f64 = rng.gen();
                let uy: f64 = rng.gen();
                let z = Point::new(x0 + ux * w, y0 + uy * h);
                if covered_at(z, &mut candidates) {
                    hits += 1;
                }
            }
            let fraction = hits as f64 / n as f64;
            let half_width_95 = 1.96 * (fraction * (1.0 - fraction) / n as f64).sqrt();
            Ok(CoverageEstimate { fraction, sample_count: n, half_width_95, mode, window })
        }
        SampleMode::Grid => {
            let res = samples_or_resolution;
            if res < 2 {
                return Err(Error::GridResolutionTooSmall { value: res });
            }
            let (w, h) = (x1 - x0, y1 - y0);
            let step = (res - 1) as f64;
            let mut hits = 0usize;
            for i in 0..res {
                let x = x0 + i as f64 * (w / step);
                for j in 0..res {
                    let y = y0 + j as f64 * (h / step);
                    if covered_at(Point::new(x, y), &mut candidates) {
                        hits += 1;
                    }
                }
            }
            let n = res * res;
            Ok(CoverageEstimate {
                fraction: hits as f64 / n as f64,
                sample_count: n,
                half_width_95: 0.0,
                mode,
                window,
            })
        }
    }
}

/// The communication graph of a deployment at a given radius, with its
/// connected components.
#[derive(Debug, Clone, PartialEq)]
pub struct CommGraph {
    rc: f64,
    adjacency: Vec<Vec<u32>>,
    component_labels: Vec<u32>,
    component_count: usize,
}

impl CommGraph {
    pub fn rc(&self) -> f64 {
        self.rc
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Neighbor ids of `id`, sorted ascending.
    pub fn neighbors(&self, id: usize) -> &[u32] {
        &self.adjacency[id]
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Component label per node. Labels are dense from zero in order of
    /// first appearance by node id, so they are deterministic.
    pub fn component_labels(&self) -> &[u32] {
        &self.component_labels
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count == 1
    }

    pub fn report(&self) -> ConnectivityReport {
        ConnectivityReport {
            connected: self.is_connected(),
            components: self.component_count,
            rc: self.rc,
        }
    }
}

/// Summary of a connectivity check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConnectivityReport {
    pub connected: bool,
    pub components: usize,
    pub rc: f64,
}

/// Disjoint-set forest used to label components while edges stream in.
struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self { parent: (0..n as u32).collect(), size: vec![1; n] }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            // Path halving: point every other node at its grandparent.
            let grand = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = grand;
            x = grand;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
    }
}

/// Builds the communication graph: nodes are linked when their distance is
/// at most `rc` (closed disk, with the representation slack described on
/// [`RADIUS_GUARD`]).
pub fn build_comm_graph(deployment: &Deployment, rc: f64) -> Result<CommGraph> {
    ensure_positive("Rc", rc)?;
    let n = deployment.node_count();
    if n == 0 {
        return Err(Error::EmptyDeployment);
    }
    let positions: Vec<Point> = deployment.nodes().iter().map(|n| n.position).collect();
    let index = GridIndex::build(&positions, rc);
    let mut adjacency: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut forest = UnionFind::new(n);
    let mut candidates = Vec::new();
    for i in 0..n {
        index.candidates(positions[i], &mut candidates);
        for &j in &candidates {
            let j = j as usize;
            if j != i && within_link_range(positions[i], positions[j], rc) {
                adjacency[i].push(j as u32);
                if j > i {
                    forest.union(i as u32, j as u32);
                }
            }
        }
        adjacency[i].sort_unstable();
    }
    let mut label_of_root = vec![u32::MAX; n];
    let mut component_labels = vec![0u32; n];
    let mut component_count = 0u32;
    for (i, label) in component_labels.iter_mut().enumerate() {
        let root = forest.find(i as u32) as usize;
        if label_of_root[root] == u32::MAX {
            label_of_root[root] = component_count;
            component_count += 1;
        }
        *label = label_of_root[root];
    }
    Ok(CommGraph { rc, adjacency, component_labels, component_count: component_count as usize })
}

/// Whether the whole deployment forms one connected network at radius `rc`.
pub fn is_connected(deployment: &Deployment, rc: f64) -> Result<bool> {
    Ok(build_comm_graph(deployment, rc)?.is_connected())
}
