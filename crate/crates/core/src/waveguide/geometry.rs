//! Transverse flux-line geometry of the circularly polarized mode, in units of b.
//!
//! At zero phase the interior electric field is uniform along x̂, so the line
//! that meets the wall at P = (cos φ₀, sin φ₀) is the chord y = sin φ₀. The
//! exterior field is that of a line dipole along x̂, whose lines are circles
//! through the origin centred on the y axis; the one through P has centre
//! (0, csc φ₀ / 2). Magnetic lines are the same family turned by 90°.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    /// Rotation by +90° about the origin.
    pub fn quarter_turn(self) -> Self {
        Point::new(-self.y, self.x)
    }
}

/// Arc of the circle through `center` with `radius`, from `start` radians
/// sweeping `sweep` radians (positive counter-clockwise).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Arc {
    pub center: Point,
    pub radius: f64,
    pub start: f64,
    pub sweep: f64,
}

impl Arc {
    pub fn point_at(&self, angle: f64) -> Point {
        Point::new(
            self.center.x + self.radius * angle.cos(),
            self.center.y + self.radius * angle.sin(),
        )
    }

    /// n + 1 points from start to end.
    pub fn sample(&self, n: usize) -> Vec<Point> {
        let n = n.max(1);
        (0..=n)
            .map(|i| self.point_at(self.start + self.sweep * i as f64 / n as f64))
            .collect()
    }

    fn quarter_turn(self) -> Arc {
        Arc {
            center: self.center.quarter_turn(),
            start: self.start + FRAC_PI_2,
            ..self
        }
    }
}

/// One closed flux line: interior chord plus exterior arc.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FluxLine {
    pub phi0: f64,
    /// Chord endpoints on the wall; the first is at azimuth φ₀.
    pub chord: [Point; 2],
    /// Exterior arc; `None` for φ₀ = 0, where the line runs out along the axis of symmetry.
    pub arc: Option<Arc>,
}

impl FluxLine {
    /// Same line rotated by 90°, as drawn for the magnetic flux.
    pub fn quarter_turn(&self) -> FluxLine {
        FluxLine {
            phi0: self.phi0 + FRAC_PI_2,
            chord: [self.chord[0].quarter_turn(), self.chord[1].quarter_turn()],
            arc: self.arc.map(Arc::quarter_turn),
        }
    }

    /// Angle between the arc tangent and the wall normal where they meet.
    pub fn junction_angle(&self) -> Option<f64> {
        let arc = self.arc?;
        let p = self.chord[0];
        let radial = Point::new(p.x - arc.center.x, p.y - arc.center.y);
        // tangent ⟂ radial; wall normal is p itself (unit circle)
        let cos_rn = (radial.x * p.x + radial.y * p.y) / arc.radius;
        Some(FRAC_PI_2 - cos_rn.abs().clamp(0.0, 1.0).acos())
    }
}

/// Electric flux line meeting the wall at azimuth `phi0` ∈ (−π/2, π/2).
pub fn flux_line_geometry(phi0: f64) -> Result<FluxLine> {
    if !(phi0.abs() < FRAC_PI_2) {
        return Err(Error::domain(
            "flux_line_geometry",
            format!("phi0 must lie in (-pi/2, pi/2), got {phi0}"),
        ));
    }
    let (s, c) = phi0.sin_cos();
    let p = Point::new(c, s);
    let q = Point::new(-c, s);
    if s == 0.0 {
        return Ok(FluxLine {
            phi0,
            chord: [p, q],
            arc: None,
        });
    }
    let cy = 0.5 / s;
    let center = Point::new(0.0, cy);
    let radius = cy.abs();
    let start = (p.y - cy).atan2(p.x);
    // the exterior part passes through the far point (0, 1/s)
    let sweep = if s > 0.0 { PI - 2.0 * start } else { -(PI + 2.0 * start) };
    Ok(FluxLine {
        phi0,
        chord: [p, q],
        arc: Some(Arc {
            center,
            radius,
            start,
            sweep,
        }),
    })
}
