//! Force between two neighbouring photons: pressure on the mid-plane strip,
//! closed form against quadrature, and the d^-3 scaling.
//!
//! Run with `cargo run --example photon_forces`.

use photon_audit::dipole::Handedness;
use photon_audit::forces::{
    brute_force_strip_fields, strip_force, strip_pressure, summed_strip_fields, PhotonPairConfig, SpeedModel, Spin,
};
use photon_audit::report::{default_force_sweep, force_table};

fn main() -> photon_audit::Result<()> {
    let cfg = PhotonPairConfig::new(10e-18, 100e-18, 1.84e16, 4.0, 210e-9, Spin::Antiparallel, 0.0)?;

    // superposition against two independently placed photons
    let y = 0.7 * cfg.d;
    let gap = summed_strip_fields(&cfg, y).max_difference(&brute_force_strip_fields(&cfg, y)?);
    println!("strip field vs brute-force sum at y = 0.7 d: {gap:.2e} V/m");

    println!("\n  y/d     pressure (Pa)");
    for s in [0.0, 0.5, 1.0, 2.0, 5.0] {
        println!("{s:5.1}  {:+.4e}", strip_pressure(&cfg, s * cfg.d, SpeedModel::Leading));
    }

    for spin in [Spin::Antiparallel, Spin::Parallel] {
        let c = PhotonPairConfig { spin, ..cfg }.with_branch(Handedness::Upper);
        let f = strip_force(&c, 1e-11)?;
        println!(
            "\n{spin:?}: F = {:.6e} N closed, {:.6e} N quadrature (residual {:.1e}); exact speed {:.6e} N",
            f.closed, f.quadrature, f.residual, f.exact_speed
        );
    }

    let (base, ds, alphas) = default_force_sweep(Spin::Antiparallel)?;
    let sweep = force_table(&base, &ds, &alphas, 1e-10)?;
    println!(
        "\n{} sweep rows, max residual {:.2e}, fitted d exponent {:.6}",
        sweep.rows.len(),
        sweep.max_residual,
        sweep.d_slope.unwrap_or(f64::NAN)
    );
    Ok(())
}
