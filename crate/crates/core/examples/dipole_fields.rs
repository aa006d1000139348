//! Rotating-dipole near fields, parity of the near-axis field, and the
//! charge-induction criterion.
//!
//! Run with `cargo run --example dipole_fields`.

use std::f64::consts::PI;

use photon_audit::dipole::{
    induction_condition, near_axis_field, parity_check, radial_static_field, radiation_q, rotating_near_field,
    total_field_mixed, two_shell_cancellation, DipoleParams, Handedness, MixedPoint,
};
use photon_audit::vector::cylindrical_to_cartesian;
use photon_audit::SI;

fn main() -> photon_audit::Result<()> {
    // no static nuclear field, so the mixed form is purely the rotating dipole
    let d = DipoleParams::new(1e-30, 2.0 * PI * 6e14, Handedness::Upper, 0.0)?;
    for theta in [0.1, PI / 4.0, PI / 2.0] {
        let pt = MixedPoint::spherical(1e-13, theta, 0.3);
        let a = total_field_mixed(&d, pt, 0.0)?;
        let b = rotating_near_field(&d, pt, 0.0)?;
        println!(
            "theta {theta:.3}: |E| = {:.4e} V/m, relative gap to vector form {:.1e}",
            a.norm(),
            (a - b).norm() / b.norm()
        );
    }

    let b = 1e-17;
    let near = parity_check(
        |rho, phi| {
            cylindrical_to_cartesian(
                near_axis_field(1.0, 1.0, 0.0, (rho, phi, 0.0), 0.0, Handedness::Upper),
                phi,
            )
        },
        b,
    );
    let radial = parity_check(|rho, phi| radial_static_field(SI.e_s, rho, phi, 1e-13), b);
    println!(
        "\nnear-axis field: {:?}; static radial field: {:?}",
        near.parity, radial.parity
    );

    let ind = induction_condition(0.1 * SI.e_s, SI.e_s, 0.5, 0.3, 10.0)?;
    println!(
        "induction holds up to theta0 = {:.4} rad; at 0.5: {}",
        ind.max_theta0, ind.passed
    );

    for ka in [1e-1, 1e-2, 1e-3] {
        println!("Q at ka = {ka:.0e}: {:.3e}", radiation_q(ka)?);
    }

    let s = two_shell_cancellation(26, 50e-15, 50e-12, 1e-16)?;
    println!(
        "\ntwo shells: amplitude residual {:.1e}, inner/outer {:.3e}, pattern residual {:.3}",
        s.amplitude_residual, s.inner_ratio, s.pattern_residual
    );
    Ok(())
}
