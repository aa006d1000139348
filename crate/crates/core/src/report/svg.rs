use std::fmt::Write;

use crate::waveguide::{flux_line_geometry, interface_charge_current, FluxLine, GuidedModeParams, Point, Polarization};
use crate::Result;

/// Wall-crossing azimuths drawn by default.
pub const DEFAULT_PHI0: [f64; 9] = [-1.2, -0.9, -0.6, -0.3, 0.0, 0.3, 0.6, 0.9, 1.2];

/// Half-width of the drawing, in guide radii.
const EXTENT: f64 = 4.0;
const PX_PER_B: f64 = 60.0;
const ARC_SEGMENTS: usize = 96;

#[derive(Debug, Clone, PartialEq)]
pub struct FluxFigure {
    pub svg: String,
    pub electric_lines: usize,
    pub magnetic_lines: usize,
}

fn px(p: Point) -> (f64, f64) {
    ((EXTENT + p.x) * PX_PER_B, (EXTENT - p.y) * PX_PER_B)
}

fn polyline(out: &mut String, pts: &[Point], class: &str) {
    let coords: Vec<String> = pts
        .iter()
        .map(|&p| {
            let (x, y) = px(p);
            format!("{x:.3},{y:.3}")
        })
        .collect();
    let _ = writeln!(out, r#"  <polyline class="{class}" points="{}"/>"#, coords.join(" "));
}

fn line_parts(line: &FluxLine) -> Vec<Vec<Point>> {
    let mut parts = vec![line.chord.to_vec()];
    match line.arc {
        Some(arc) => parts.push(arc.sample(ARC_SEGMENTS)),
        None => {
            // runs out along its own axis to the edge of the drawing
            let (a, b) = (line.chord[0], line.chord[1]);
            let far = |p: Point| Point::new(p.x * EXTENT * 1.5, p.y * EXTENT * 1.5);
            parts.push(vec![a, far(a)]);
            parts.push(vec![b, far(b)]);
        }
    }
    parts
}

/// Transverse flux lines at zero phase: solid electric lines through each
/// `phi0`, the same family turned 90° as dotted magnetic lines, and the wall
/// charge drawn as two semicircles coloured by the sign of κ.
pub fn flux_svg(phi0s: &[f64]) -> Result<FluxFigure> {
    let lines = phi0s
        .iter()
        .map(|&p| flux_line_geometry(p))
        .collect::<Result<Vec<_>>>()?;

    // sign of the wall charge on the +x half at zero phase
    let mode = GuidedModeParams::new(1.0, 1.0, 1.0, 1.0, Polarization::Right)?;
    let right_positive = interface_charge_current(&mode, 0.0, 0.0, 0.0).kappa.re > 0.0;
    let (right, left) = if right_positive { ("pos", "neg") } else { ("neg", "pos") };

    let size = 2.0 * EXTENT * PX_PER_B;
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    );
    s.push_str("  <style>\n");
    s.push_str("    .e { fill: none; stroke: #1f3a93; stroke-width: 1.5; }\n");
    s.push_str("    .b { fill: none; stroke: #b03a2e; stroke-width: 1.2; stroke-dasharray: 2,4; }\n");
    s.push_str("    .pos { fill: none; stroke: #c0392b; stroke-width: 4; }\n");
    s.push_str("    .neg { fill: none; stroke: #2471a3; stroke-width: 4; }\n");
    s.push_str("    text { font-family: sans-serif; font-size: 16px; }\n");
    s.push_str("  </style>\n");
    let _ = writeln!(s, r#"  <rect width="{size}" height="{size}" fill="white"/>"#);

    let r = PX_PER_B;
    let (top, bottom) = (px(Point::new(0.0, 1.0)), px(Point::new(0.0, -1.0)));
    let _ = writeln!(
        s,
        r#"  <path class="{right}" d="M {:.3} {:.3} A {r:.3} {r:.3} 0 0 1 {:.3} {:.3}"/>"#,
        top.0, top.1, bottom.0, bottom.1
    );
    let _ = writeln!(
        s,
        r#"  <path class="{left}" d="M {:.3} {:.3} A {r:.3} {r:.3} 0 0 1 {:.3} {:.3}"/>"#,
        bottom.0, bottom.1, top.0, top.1
    );
    let label = |p: Point, sign: &str| {
        let (x, y) = px(p);
        format!(r#"  <text x="{x:.3}" y="{y:.3}" text-anchor="middle">{sign}</text>"#)
    };
    let sym = |class: &str| if class == "pos" { "+" } else { "\u{2212}" };
    let _ = writeln!(s, "{}", label(Point::new(1.25, -0.1), sym(right)));
    let _ = writeln!(s, "{}", label(Point::new(-1.25, -0.1), sym(left)));

    for line in &lines {
        for part in line_parts(line) {
            polyline(&mut s, &part, "e");
        }
    }
    for line in &lines {
        for part in line_parts(&line.quarter_turn()) {
            polyline(&mut s, &part, "b");
        }
    }
    s.push_str("</svg>\n");
    Ok(FluxFigure {
        svg: s,
        electric_lines: lines.len(),
        magnetic_lines: lines.len(),
    })
}
