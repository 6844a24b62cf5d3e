//! A uniform-grid index over node positions for radius-bounded neighbor
//! queries.
//!
//! Cells are square with side equal to the query radius, so every point
//! within that radius of a query location lies in the 3x3 block of cells
//! around it. Queries return candidate ids only; callers apply the exact
//! distance predicate.

use crate::geometry::Point;

pub(crate) struct GridIndex {
    cell: f64,
    min_x: f64,
    min_y: f64,
    cols: usize,
    rows: usize,
    buckets: Vec<Vec<u32>>,
}

impl GridIndex {
    /// Builds an index over `points` with the given cell size (strictly
    /// positive). Queries are exhaustive for radii up to `cell`.
    pub fn build(points: &[Point], cell: f64) -> Self {
        debug_assert!(cell > 0.0 && cell.is_finite());
        if points.is_empty() {
            return Self { cell, min_x: 0.0, min_y: 0.0, cols: 0, rows: 0, buckets: Vec::new() };
        }
        let mut min_x = f64::INFINITY;
        let mut min_y = f64::INFINITY;
        let mut max_x = f64::NEG_INFINITY;
        let mut max_y = f64::NEG_INFINITY;
        for p in points {
            min_x = min_x.min(p.x);
            min_y = min_y.min(p.y);
            max_x = max_x.max(p.x);
            max_y = max_y.max(p.y);
        }
        let cols = ((max_x - min_x) / cell).floor() as usize + 1;
        let rows = ((max_y - min_y) / cell).floor() as usize + 1;
        let mut buckets = vec![Vec::new(); cols * rows];
        for (id, p) in points.iter().enumerate() {
            let cx = Self::axis_cell(p.x, min_x, cell, cols);
            let cy = Self::axis_cell(p.y, min_y, cell, rows);
            buckets[cy * cols + cx].push(id as u32);
        }
        Self { cell, min_x, min_y, cols, rows, buckets }
    }

    fn axis_cell(v: f64, min: f64, cell: f64, count: usize) -> usize {
        (((v - min) / cell).floor() as isize).clamp(0, count as isize - 1) as usize
    }

    /// Appends to `out` the ids of all points whose cell is within one cell
    /// of the query position. Contains every point within `cell` of `p`,
    /// plus nearby extras that the caller filters out.
    pub fn candidates(&self, p: Point, out: &mut Vec<u32>) {
        out.clear();
        if self.buckets.is_empty() {
            return;
        }
        let cx = ((p.x - self.min_x) / self.cell).floor() as isize;
        let cy = ((p.y - self.min_y) / self.cell).floor() as isize;
        for dy in -1..=1isize {
            let y = cy + dy;
            if y < 0 || y >= self.rows as isize {
                continue;
            }
            for dx in -1..=1isize {
                let x = cx + dx;
                if x < 0 || x >= self.cols as isize {
                    continue;
                }
                out.extend_from_slice(&self.buckets[y as usize * self.cols + x as usize]);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::distance;

    #[test]
    fn empty_index_yields_no_candidates() {
        let index = GridIndex::build(&[], 1.0);
        let mut out = Vec::new();
        index.candidates(Point::new(3.0, 3.0), &mut out);
        assert!(out.is_empty());
    }

    #[test]
    fn every_point_within_the_cell_radius_is_a_candidate() {
        // Pseudo-random cloud; cross-check the candidate set against a
        // brute-force radius scan.
        let mut points = Vec::new();
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for _ in 0..400 {
            points.push(Point::new(next() * 17.0, next() * 9.0));
        }
        let radius = 1.25;
        let index = GridIndex::build(&points, radius);
        let mut out = Vec::new();
        for i in (0..points.len()).step_by(7) {
            let q = points[i];
            index.candidates(q, &mut out);
            for (id, p) in points.iter().enumerate() {
                if distance(*p, q) <= radius {
                    assert!(
                        out.contains(&(id as u32)),
                        "point {id} within {radius} of {i} missing from candidates"
                    );
                }
            }
        }
    }

    #[test]
    fn queries_far_outside_the_cloud_return_nothing() {
        let points = vec![Point::new(0.0, 0.0), Point::new(1.0, 1.0)];
        let index = GridIndex::build(&points, 1.0);
        let mut out = Vec::new();
        index.candidates(Point::new(50.0, 50.0), &mut out);
        assert!(out.is_empty());
        // Just beyond one cell: may or may not include candidates, but a
        // query within the radius of a point always does.
        index.candidates(Point::new(0.9, 0.0), &mut out);
        assert!(out.contains(&0));
    }
}
