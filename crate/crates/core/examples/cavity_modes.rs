//! Lowest spherical cavity mode: the root of j*, the resulting minimum
//! radius, and the field profile inside.
//!
//! Run with `cargo run --example cavity_modes`.

use std::f64::consts::PI;

use photon_audit::cavity::{cavity_fields, cubic_harmonics, lowest_eigenradius, sph_jstar, CavityMode, RadialForm};

fn main() -> photon_audit::Result<()> {
    let eig = lowest_eigenradius()?;
    println!("sigma* = {:.15}  a/lambda = {:.6}", eig.sigma, eig.a_over_lambda);
    for lambda_nm in [400.0, 500.0, 700.0] {
        println!(
            "  lambda {lambda_nm} nm -> a >= {:.1} nm",
            eig.a_over_lambda * lambda_nm
        );
    }

    println!("\n sigma      j*(sigma)");
    for s in [0.05, 0.5, 1.0, 2.0, eig.sigma, 3.5] {
        println!("{s:6.3}  {:+.6e}", sph_jstar(s)?);
    }

    let mode = CavityMode::lowest(1e-30, 500e-9)?;
    // quarter period: E at its peak
    let t = 0.5 * PI / mode.omega();
    println!("\n r/a   |E|(regular)    |E|(as printed)");
    for frac in [0.01, 0.25, 0.5, 1.0] {
        let r = frac * mode.a;
        let reg = cavity_fields(&mode, r, PI / 3.0, t, RadialForm::Regular)?;
        let prn = cavity_fields(&mode, r, PI / 3.0, t, RadialForm::Printed)?;
        println!("{frac:5.2}  {:.4e}   {:.4e}", reg.e_vec().norm(), prn.e_vec().norm());
    }

    for c in cubic_harmonics(1.0, 256)? {
        println!(
            "{:<32} max residual {:.2e}  holds: {}",
            c.identity, c.max_residual, c.holds
        );
    }
    Ok(())
}
