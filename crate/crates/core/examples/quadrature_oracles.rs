//! The numerical oracles on their own: adaptive quadrature over finite and
//! infinite ranges and bracketed root finding.
//!
//! Run with `cargo run --example quadrature_oracles`.

use std::f64::consts::PI;

use photon_audit::numerics::{bisect, Integrator};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = Integrator::relative(1e-13);

    let r = q.integrate(|x| x.sin(), 0.0, PI)?;
    println!(
        "int_0^pi sin        = {:.15} (err est {:.1e}, {} evals)",
        r.value, r.error_estimate, r.evaluations
    );

    let d: f64 = 2.0;
    let r = q.integrate_real_line(|y| 1.0 / (d * d + y * y).powi(2))?;
    println!(
        "int dy/(d^2+y^2)^2   = {:.15}  vs pi/(2 d^3) = {:.15}",
        r.value,
        PI / (2.0 * d.powi(3))
    );

    let r = q.integrate_semi_infinite(|x| (-x * x).exp(), 0.0)?;
    println!(
        "int_0^inf exp(-x^2) = {:.15}  vs sqrt(pi)/2 = {:.15}",
        r.value,
        PI.sqrt() / 2.0
    );

    let root = bisect(|x| x.cos() - x, 0.0, 1.0, 1e-15)?;
    println!("cos x = x at          {:.15}", root.root());
    Ok(())
}
