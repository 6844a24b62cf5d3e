//! End-to-end acceptance checks for the planner/verifier pair.
//!
//! Each test prints a single PASS/FAIL line (visible with `--nocapture`)
//! and then asserts, so the suite doubles as a checklist. Tolerances are
//! pinned next to each check.

use covplan::{
    alpha_of_spacing, build_comm_graph, estimate_coverage_fraction, generate_triangular_lattice,
    is_connected, min_comm_radius, network_coverage_degree, overlap_alpha, plan_deployment,
    spacing_for_alpha, Deployment, Point, SampleMode, SensingField, Window, ALPHA_POINT_OVERLAP,
    SQRT_3,
};

/// Absolute tolerance on the closed-form boundary constants.
const TOL_BOUNDARY: f64 = 1e-12;
/// Absolute tolerance on inversion round trips and the radius bound.
const TOL_SOLVER: f64 = 1e-9;
/// Absolute tolerance between sampled and analytic coverage fractions.
const TOL_SAMPLED: f64 = 5e-3;
/// Relative shrink that must break connectivity at the minimum radius.
const RC_SHARPNESS: f64 = 0.999;

fn report(number: u32, name: &str, pass: bool) {
    println!("acceptance {number} ({name}): {}", if pass { "PASS" } else { "FAIL" });
    assert!(pass, "acceptance criterion {number} ({name}) failed");
}

#[test]
fn criterion_1_boundary_constants() {
    let full = alpha_of_spacing(SQRT_3, 1.0).unwrap();
    let tangent = alpha_of_spacing(2.0, 1.0).unwrap();
    let scaled_full = alpha_of_spacing(SQRT_3 * 2.5, 2.5).unwrap();
    let scaled_tangent = alpha_of_spacing(5.0, 2.5).unwrap();
    let pass = (full - 1.0).abs() <= TOL_BOUNDARY
        && (tangent - ALPHA_POINT_OVERLAP).abs() <= TOL_BOUNDARY
        && (scaled_full - 1.0).abs() <= TOL_BOUNDARY
        && (scaled_tangent - ALPHA_POINT_OVERLAP).abs() <= TOL_BOUNDARY;
    report(1, "boundary constants", pass);
}

#[test]
fn criterion_2_regime_continuity() {
    // The overlap-regime expression evaluated at its endpoints, against
    // the values the neighboring regimes take there.
    let at_full_boundary = overlap_alpha(SQRT_3 / 2.0);
    let at_tangent_boundary = overlap_alpha(1.0);
    let disjoint_at_tangent = alpha_of_spacing(2.0, 1.0).unwrap();
    let pass = (at_full_boundary - 1.0).abs() <= TOL_BOUNDARY
        && (at_tangent_boundary - disjoint_at_tangent).abs() <= TOL_BOUNDARY;
    report(2, "regime continuity", pass);
}

#[test]
fn criterion_3_inversion_round_trip() {
    let mut worst = 0.0f64;
    for i in 1..=999 {
        let alpha = 0.001 + 0.999 * (i as f64 / 999.0);
        let solution = spacing_for_alpha(alpha, 1.0).unwrap();
        let back = alpha_of_spacing(solution.spacing, 1.0).unwrap();
        worst = worst.max((back - alpha).abs());
    }
    let pass = worst <= TOL_SOLVER;
    report(3, "inversion round trip", pass);
    println!("  worst round-trip error: {worst:.3e}");
}

#[test]
fn criterion_4_overlap_band_is_strict() {
    let mut pass = true;
    for i in 1..=99 {
        let alpha = ALPHA_POINT_OVERLAP + (1.0 - ALPHA_POINT_OVERLAP) * (i as f64 / 100.0);
        let solution = spacing_for_alpha(alpha, 1.0).unwrap();
        let ratio = solution.spacing / 1.0;
        if !(ratio > SQRT_3 && ratio < 2.0) {
            pass = false;
            eprintln!("  alpha {alpha}: spacing ratio {ratio} escapes (sqrt(3), 2)");
        }
    }
    report(4, "overlap band strictness", pass);
}

#[test]
fn criterion_5_radius_bound_piecewise() {
    let at_threshold = min_comm_radius(ALPHA_POINT_OVERLAP, 1.0, None).unwrap().rc_min;
    let threshold_ok = (at_threshold - 2.0).abs() <= TOL_SOLVER;

    let mut closed_form_ok = true;
    for i in 1..=90 {
        let alpha = ALPHA_POINT_OVERLAP * (i as f64 / 91.0);
        let bound = min_comm_radius(alpha, 1.0, None).unwrap().rc_min;
        let expected = (2.0 * std::f64::consts::PI / (SQRT_3 * alpha)).sqrt();
        if (bound - expected).abs() > 1e-12 * expected {
            closed_form_ok = false;
            eprintln!("  alpha {alpha}: bound {bound} vs closed form {expected}");
        }
    }

    // Straddle the branch point tightly; the bound must not jump.
    let delta = 1e-10;
    let below = min_comm_radius(ALPHA_POINT_OVERLAP * (1.0 - delta), 1.0, None).unwrap().rc_min;
    let above = min_comm_radius(ALPHA_POINT_OVERLAP * (1.0 + delta), 1.0, None).unwrap().rc_min;
    let continuity_ok = (above - below).abs() <= TOL_SOLVER;

    report(5, "radius bound piecewise", threshold_ok && closed_form_ok && continuity_ok);
}

#[test]
fn criterion_6_sampled_coverage_matches_analytic() {
    // Fields sized 24 spacings by (4 + 12*sqrt(3)) spacings make the
    // interior window an exact number of lattice periods along both axes,
    // so the sampled fraction estimates the analytic one without
    // partial-period bias. Both sides exceed 20 spacings.
    let mut pass = true;
    for d in [1.8, 1.9, 2.0, 2.5, 3.0, 4.0] {
        let field = SensingField::new(24.0 * d, (4.0 + 12.0 * SQRT_3) * d).unwrap();
        let deployment = generate_triangular_lattice(&field, d, 1.0).unwrap();
        let estimate = estimate_coverage_fraction(
            &deployment,
            SampleMode::MonteCarlo,
            Window::Interior,
            1_000_000,
            42,
        )
        .unwrap();
        let analytic = alpha_of_spacing(d, 1.0).unwrap();
        let error = (estimate.fraction - analytic).abs();
        if error > TOL_SAMPLED {
            pass = false;
        }
        println!(
            "  d/Rs {d}: sampled {:.6} analytic {analytic:.6} |error| {error:.2e}",
            estimate.fraction
        );
    }
    report(6, "sampled coverage matches analytic", pass);
}

#[test]
fn criterion_7_planned_networks_connect_exactly_at_the_bound() {
    let field = SensingField::new(20.0, 20.0).unwrap();
    let mut pass = true;
    for alpha in [0.3, 0.5, 0.7, 0.906900, 0.95, 0.99, 1.0] {
        let plan = plan_deployment(&field, alpha, 1.0).unwrap();
        let rc = plan.rc_bound.rc_min;
        let connected = is_connected(&plan.deployment, rc).unwrap();
        if !connected {
            pass = false;
            eprintln!("  alpha {alpha}: not connected at rc_min {rc}");
        }
        if !plan.rc_bound.capped_by_diameter {
            let still_connected = is_connected(&plan.deployment, RC_SHARPNESS * rc).unwrap();
            if still_connected {
                pass = false;
                eprintln!("  alpha {alpha}: still connected at {RC_SHARPNESS} * rc_min");
            }
        }
    }
    report(7, "connectivity sharp at the bound", pass);
}

/// Deterministic pseudo-random stream for the oracle comparison, kept
/// separate from the crate's own generator on purpose.
struct Lcg(u64);

impl Lcg {
    fn next_f64(&mut self) -> f64 {
        self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (self.0 >> 11) as f64 / (1u64 << 53) as f64
    }
}

#[test]
fn criterion_8_graph_matches_brute_force_oracle() {
    let mut rng = Lcg(0xC0FFEE);
    let field = SensingField::new(20.0, 20.0).unwrap();
    let mut pass = true;
    for round in 0..100 {
        let count = 1 + (rng.next_f64() * 200.0) as usize;
        let positions: Vec<Point> = (0..count)
            .map(|_| Point::new(rng.next_f64() * 20.0, rng.next_f64() * 20.0))
            .collect();
        let rc = 0.5 + rng.next_f64() * 4.5;
        let deployment =
            Deployment::from_positions(field, 1.0, 1.0, positions.clone()).unwrap();
        let graph = build_comm_graph(&deployment, rc).unwrap();

        // Brute-force oracle: quadratic edge scan with the documented link
        // rule (closed disk with 1e-12 relative slack), then BFS components.
        let mut adjacency: Vec<Vec<u32>> = vec![Vec::new(); count];
        for i in 0..count {
            for j in 0..count {
                if i != j {
                    let dx = positions[i].x - positions[j].x;
                    let dy = positions[i].y - positions[j].y;
                    if (dx * dx + dy * dy).sqrt() <= rc * (1.0 + 1e-12) {
                        adjacency[i].push(j as u32);
                    }
                }
            }
        }
        let mut component = vec![usize::MAX; count];
        let mut components = 0usize;
        for start in 0..count {
            if component[start] != usize::MAX {
                continue;
            }
            let mut queue = vec![start];
            component[start] = components;
            while let Some(node) = queue.pop() {
                for &next in &adjacency[node] {
                    if component[next as usize] == usize::MAX {
                        component[next as usize] = components;
                        queue.push(next as usize);
                    }
                }
            }
            components += 1;
        }

        for (i, expected) in adjacency.iter().enumerate() {
            if graph.neighbors(i) != expected.as_slice() {
                pass = false;
                eprintln!("  round {round}: adjacency of node {i} differs");
            }
        }
        if graph.component_count() != components {
            pass = false;
            eprintln!(
                "  round {round}: {} components vs oracle {components}",
                graph.component_count()
            );
        }
    }
    report(8, "graph matches brute-force oracle", pass);
}

#[test]
fn criterion_9_full_coverage_degree_on_the_interior() {
    let field = SensingField::new(20.0, 20.0).unwrap();

    let grid_samples = |spacing: f64| -> Vec<Point> {
        let margin = 2.0 * spacing;
        let (x0, y0) = (margin, margin);
        let (x1, y1) = (20.0 - margin, 20.0 - margin);
        let mut samples = Vec::with_capacity(500 * 500);
        for i in 0..500 {
            let x = x0 + i as f64 * ((x1 - x0) / 499.0);
            for j in 0..500 {
                let y = y0 + j as f64 * ((y1 - y0) / 499.0);
                samples.push(Point::new(x, y));
            }
        }
        samples
    };

    let full = generate_triangular_lattice(&field, SQRT_3, 1.0).unwrap();
    let full_degree = network_coverage_degree(&full, &grid_samples(SQRT_3)).unwrap();

    let sparse = generate_triangular_lattice(&field, 3.0, 1.0).unwrap();
    let sparse_degree = network_coverage_degree(&sparse, &grid_samples(3.0)).unwrap();

    let pass = full_degree >= 1 && sparse_degree == 0;
    println!("  degree at full-coverage spacing: {full_degree}, at 3x spacing: {sparse_degree}");
    report(9, "interior coverage degree", pass);
}
