//! Writes the transverse flux-line figure to `flux.svg` (or the path given).
//!
//! Run with `cargo run --example flux_figure -- /tmp/flux.svg`.

use photon_audit::report::{flux_svg, DEFAULT_PHI0};
use photon_audit::waveguide::flux_line_geometry;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "flux.svg".into());
    let fig = flux_svg(&DEFAULT_PHI0)?;
    std::fs::write(&path, &fig.svg)?;
    println!(
        "{path}: {} electric and {} magnetic lines",
        fig.electric_lines, fig.magnetic_lines
    );

    for phi0 in [0.3, 0.9] {
        let line = flux_line_geometry(phi0)?;
        let arc = line.arc.expect("off-axis lines close outside");
        println!(
            "phi0 {phi0}: arc centre ({:.3}, {:.3}) radius {:.3}, meets wall {:.3} rad off normal",
            arc.center.x,
            arc.center.y,
            arc.radius,
            line.junction_angle().unwrap_or(f64::NAN)
        );
    }
    Ok(())
}
