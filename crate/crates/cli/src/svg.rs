//! SVG drawing of an icosahedron net with pitch-class labels and
//! highlighted golden figures.
//!
//! The net is the usual strip of twenty faces, edge length `S`:
//!
//! | vertex          | copies at (x, row)                     |
//! |-----------------|----------------------------------------|
//! | 0 (top)         | ((k + 0.5)·S, 0) for k = 0..4          |
//! | 1 + k (upper)   | (k·S, 1), and vertex 1 again at (5·S, 1) |
//! | 6 + k (lower)   | ((k + 0.5)·S, 2), and 6 again at (5.5·S, 2) |
//! | 11 (bottom)     | ((k + 1)·S, 3) for k = 0..4            |
//!
//! Figures are drawn through one copy of each vertex (the `primary`
//! position), so their sides may cut across the net.

use std::fmt::Write;

use icomusic_core::analysis::Decomposition;
use icomusic_core::icosahedron::{FigureKind, VertexId};
use icomusic_core::{MusicalIcosahedron, Topology};

const S: f64 = 80.0;
const MARGIN: f64 = 40.0;
const PALETTE: [&str; 6] = ["#e4572e", "#2e86ab", "#76b041", "#a05ea8", "#f3a712", "#17bebb"];

fn row_y(row: usize) -> f64 {
    MARGIN + row as f64 * S * 3f64.sqrt() / 2.0
}

fn x(offset: f64) -> f64 {
    MARGIN + offset * S
}

/// Every drawn copy of a vertex.
fn copies(v: usize) -> Vec<(f64, f64)> {
    match v {
        0 => (0..5).map(|k| (x(k as f64 + 0.5), row_y(0))).collect(),
        1..=5 => {
            let mut out = vec![(x((v - 1) as f64), row_y(1))];
            if v == 1 {
                out.push((x(5.0), row_y(1)));
            }
            out
        }
        6..=10 => {
            let mut out = vec![(x((v - 6) as f64 + 0.5), row_y(2))];
            if v == 6 {
                out.push((x(5.5), row_y(2)));
            }
            out
        }
        _ => (0..5).map(|k| (x(k as f64 + 1.0), row_y(3))).collect(),
    }
}

fn primary(v: usize) -> (f64, f64) {
    match v {
        0 => (x(2.5), row_y(0)),
        11 => (x(3.0), row_y(3)),
        _ => copies(v)[0],
    }
}

/// Net faces as triples of (x, y) points.
fn faces() -> Vec<[(f64, f64); 3]> {
    let up = |k: usize| (x(k as f64), row_y(1));
    let low = |k: usize| (x(k as f64 + 0.5), row_y(2));
    let mut out = Vec::new();
    for k in 0..5 {
        out.push([(x(k as f64 + 0.5), row_y(0)), up(k), up(k + 1)]);
        out.push([up(k), up(k + 1), low(k)]);
        out.push([low(k), up(k + 1), low(k + 1)]);
        out.push([low(k), low(k + 1), (x(k as f64 + 1.0), row_y(3))]);
    }
    out
}

fn fmt_point((px, py): (f64, f64)) -> String {
    format!("{px:.1},{py:.1}")
}

/// Orders a figure's vertices for drawing: apex first for triangles and
/// gnomons, around the boundary for rectangles.
fn outline(topology: &Topology, vertices: &[VertexId], kind: FigureKind) -> Vec<VertexId> {
    match kind {
        FigureKind::Rectangle => {
            let a = vertices[0];
            let b = *vertices.iter().find(|&&w| topology.is_adjacent(a, w)).expect("rectangle has a short side");
            vec![a, b, topology.antipode(a), topology.antipode(b)]
        }
        _ => {
            let fig = topology
                .golden_figure(vertices.iter().copied().collect())
                .expect("part is a golden figure");
            let apex = fig.apex.expect("triangles have an apex");
            let mut out = vec![apex];
            out.extend(vertices.iter().copied().filter(|&v| v != apex));
            out
        }
    }
}

pub fn render(topology: &Topology, assignment: &MusicalIcosahedron, decomposition: &Decomposition, title: &str) -> String {
    let width = 2.0 * MARGIN + 5.5 * S;
    let height = 2.0 * MARGIN + 3.0 * S * 3f64.sqrt() / 2.0;
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.0}" height="{height:.0}" viewBox="0 0 {width:.0} {height:.0}">"#
    );
    let _ = writeln!(svg, "  <title>{}</title>", escape(title));
    let _ = writeln!(svg, r##"  <rect width="100%" height="100%" fill="#ffffff"/>"##);
    let _ = writeln!(svg, r##"  <g id="net" fill="none" stroke="#999999" stroke-width="1">"##);
    for face in faces() {
        let pts: Vec<String> = face.iter().map(|&p| fmt_point(p)).collect();
        let _ = writeln!(svg, r#"    <polygon points="{}"/>"#, pts.join(" "));
    }
    let _ = writeln!(svg, "  </g>");

    let tones = decomposition.union();
    let _ = writeln!(svg, r#"  <g id="figures" stroke-width="3" fill-opacity="0.25">"#);
    for (i, part) in decomposition.parts().iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let vertices: Vec<VertexId> = part.pcs.iter().map(|pc| assignment.vertex(pc)).collect();
        let pts: Vec<String> = outline(topology, &vertices, part.kind)
            .into_iter()
            .map(|v| fmt_point(primary(v.index())))
            .collect();
        let _ = writeln!(
            svg,
            r#"    <polygon class="{}" points="{}" stroke="{color}" fill="{color}"><title>{} ({})</title></polygon>"#,
            part.kind.abbreviation(),
            pts.join(" "),
            part.pcs,
            part.kind.abbreviation()
        );
    }
    let _ = writeln!(svg, "  </g>");

    let _ = writeln!(svg, r#"  <g id="vertices" font-family="sans-serif" font-size="13" text-anchor="middle">"#);
    for v in VertexId::all() {
        let pc = assignment.pitch_class(v);
        let (fill, weight) = if tones.contains(pc) { ("#222222", "bold") } else { ("#ffffff", "normal") };
        let text_fill = if tones.contains(pc) { "#ffffff" } else { "#222222" };
        for (px, py) in copies(v.index()) {
            let _ = writeln!(
                svg,
                r##"    <circle cx="{px:.1}" cy="{py:.1}" r="13" fill="{fill}" stroke="#222222"/><text x="{px:.1}" y="{:.1}" fill="{text_fill}" font-weight="{weight}">{}</text>"##,
                py + 4.5,
                pc.name()
            );
        }
    }
    let _ = writeln!(svg, "  </g>");
    svg.push_str("</svg>\n");
    svg
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn net_faces_are_icosahedron_faces() {
        let topology = Topology::new();
        let vertex_at = |p: (f64, f64)| {
            (0..12)
                .find(|&v| copies(v).iter().any(|&c| (c.0 - p.0).abs() < 1e-6 && (c.1 - p.1).abs() < 1e-6))
                .expect("point is a vertex copy")
        };
        let mut seen = std::collections::BTreeSet::new();
        for face in faces() {
            let mut ids: Vec<usize> = face.iter().map(|&p| vertex_at(p)).collect();
            for i in 0..3 {
                let (a, b) = (ids[i], ids[(i + 1) % 3]);
                assert!(topology.is_adjacent(VertexId::new(a).unwrap(), VertexId::new(b).unwrap()));
            }
            ids.sort();
            seen.insert(ids);
        }
        assert_eq!(seen.len(), 20);
    }
}
