//! Deterministic SVG rendering of a deployment: the field outline, sensing
//! disks, node centers, and (optionally) communication links.

use std::fmt::Write as _;

use crate::deployment::Deployment;
use crate::error::Result;
use crate::verify::build_comm_graph;

/// Renders the deployment as a standalone SVG document.
///
/// With `rc` given, the communication graph at that radius is drawn as
/// line segments between linked nodes. Output is built purely from the
/// deployment's numbers with fixed formatting, so re-rendering the same
/// inputs is byte-for-byte identical.
pub fn render_svg(deployment: &Deployment, rc: Option<f64>) -> Result<String> {
    let field = deployment.field();
    let rs = deployment.sensing_radius();
    let margin = rs;
    let view_w = field.width() + 2.0 * margin;
    let view_h = field.height() + 2.0 * margin;
    let origin = field.origin();
    // SVG y grows downward; flip so the field's lower edge is at the
    // bottom of the image.
    let sx = |x: f64| x - origin.x + margin;
    let sy = |y: f64| (origin.y + field.height()) - y + margin;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {} {}">"#,
        num(view_w),
        num(view_h)
    );
    let _ = writeln!(
        out,
        r##"  <rect class="field" x="{}" y="{}" width="{}" height="{}" fill="none" stroke="#374151" stroke-width="{}"/>"##,
        num(margin),
        num(margin),
        num(field.width()),
        num(field.height()),
        num(0.05 * rs)
    );
    for node in deployment.nodes() {
        let _ = writeln!(
            out,
            r##"  <circle class="sensing-disk" cx="{}" cy="{}" r="{}" fill="#60a5fa" fill-opacity="0.18" stroke="#2563eb" stroke-width="{}"/>"##,
            num(sx(node.position.x)),
            num(sy(node.position.y)),
            num(node.sensing_radius),
            num(0.02 * rs)
        );
    }
    if let Some(rc) = rc {
        let graph = build_comm_graph(deployment, rc)?;
        for node in deployment.nodes() {
            for &j in graph.neighbors(node.id) {
                // Each undirected link once.
                if (j as usize) > node.id {
                    let other = &deployment.nodes()[j as usize];
                    let _ = writeln!(
                        out,
                        r##"  <line class="comm-edge" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#059669" stroke-width="{}"/>"##,
                        num(sx(node.position.x)),
                        num(sy(node.position.y)),
                        num(sx(other.position.x)),
                        num(sy(other.position.y)),
                        num(0.03 * rs)
                    );
                }
            }
        }
    }
    for node in deployment.nodes() {
        let class = if deployment.base_station_id() == Some(node.id) {
            "node base-station"
        } else {
            "node"
        };
        let radius = if deployment.base_station_id() == Some(node.id) {
            0.12 * rs
        } else {
            0.08 * rs
        };
        let fill = if deployment.base_station_id() == Some(node.id) {
            "#dc2626"
        } else {
            "#111827"
        };
        let _ = writeln!(
            out,
            r#"  <circle class="{}" cx="{}" cy="{}" r="{}" fill="{}"/>"#,
            class,
            num(sx(node.position.x)),
            num(sy(node.position.y)),
            num(radius),
            fill
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Fixed decimal formatting so output never depends on float printing
/// shortest-representation quirks.
fn num(v: f64) -> String {
    format!("{v:.4}")
}
