//! Power bookkeeping for a three-wave exchange at omega1, omega2 and the
//! difference frequency.
//!
//! Run with `cargo run --example manley_rowe`.

use photon_audit::manley_rowe::{check_manley_rowe, constructed_solution, emitted_frequency, OscillatorChannel};

fn main() -> photon_audit::Result<()> {
    let (w1, w2) = (3.1e15, 2.0e15);
    println!("emitted frequency {:.3e} rad/s", emitted_frequency(w1, w2)?);

    let [a, b, out] = constructed_solution(1.0e-3, w1, w2)?;
    println!("powers: {:.4e} + {:.4e} -> {:.4e} W", a.power, b.power, out.power);
    let ok = check_manley_rowe(a, b, out, 1e-12);
    println!(
        "consistent solution passes: {} (residuals {:.1e}, {:.1e})",
        ok.passed, ok.pair_residual, ok.output_residual
    );

    for eps in [1e-3, 1e-2] {
        let bumped = OscillatorChannel::new(a.power * (1.0 + eps), a.omega)?;
        let r = check_manley_rowe(bumped, b, out, 1e-12);
        println!("channel 1 off by {eps:.0e}: passes {}", r.passed);
    }
    Ok(())
}
