//! Pulse energy of a guided mode four ways, plus the wall stress and the
//! energy-momentum bookkeeping.
//!
//! Run with `cargo run --example waveguide_closure`.

use std::f64::consts::PI;

use photon_audit::waveguide::{
    angular_momentum, closure_integrals, energy_momentum, surface_pressure, GuidedModeParams, Polarization,
};
use photon_audit::SI;

fn main() -> photon_audit::Result<()> {
    let p = GuidedModeParams::new(1.84e16, 10e-18, 3.77e15, 210e-9, Polarization::Right)?;
    let c = closure_integrals(&p, 1e-10)?;
    println!("reference pi eps0 E0^2 b^2 l = {:.9e} J", c.reference);
    println!(
        "  electric  {:.9e}  (inside {:.4e}, outside {:.4e})",
        c.electric(),
        c.electric_interior,
        c.electric_exterior
    );
    println!("  magnetic  {:.9e}", c.magnetic());
    println!("  charge    {:.9e}", c.charge_potential);
    println!("  current   {:.9e}", c.current_potential);
    println!(
        "  worst relative error {:.2e} after {} evaluations",
        c.max_relative_error(),
        c.evaluations
    );

    let mut worst = 0.0f64;
    for i in 0..32 {
        for j in 0..32 {
            let phi = 2.0 * PI * i as f64 / 32.0;
            let t = 2.0 * PI / p.omega * j as f64 / 32.0;
            worst = worst.max(surface_pressure(&p, phi, 0.0, t)?.abs());
        }
    }
    println!(
        "\nlargest net wall pressure / eps0 E0^2: {:.2e}",
        worst / (SI.eps0 * p.e0 * p.e0)
    );

    let em = energy_momentum(&p)?;
    println!("p c / W = {:.15}", em.momentum * SI.c / em.energy);
    for pol in [Polarization::Right, Polarization::Left, Polarization::Linear] {
        let am = angular_momentum(&p.with_polarization(pol));
        println!("{pol:?}: W / (L omega) = {:.6}", am.energy_ratio / p.omega);
    }
    Ok(())
}
